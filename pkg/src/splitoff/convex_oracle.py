"""Exponential-time exact oracles used as ground truth.

None of these are meant for production sizes; each one is fenced by a size
limit (see :mod:`splitoff.limits`).
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .connectivity import (
    is_two_edge_connected_multiset,
    is_two_edge_connected_spanning,
    unit_flow,
)
from .errors import DomainError, ResourceLimitError
from .limits import get_limit
from .multigraph import EdgeMultiset, MultiGraph
from .splitting import _neighbourhood, admissible_set, complete_split_at, split_off_pair
from .two_thirds import _lift_in_place, check_four_regular_four_connected

THIRD = Fraction(1, 3)
HALF = Fraction(1, 2)


@dataclass
class ConvexCombination:
    items: list[tuple[Fraction, EdgeMultiset]]

    def weight_sum(self) -> Fraction:
        return sum((w for w, _ in self.items), Fraction(0))

    def vector(self) -> dict[int, Fraction]:
        """Weighted sum of the characteristic vectors, keyed by edge id."""
        out: dict[int, Fraction] = {}
        for w, h in self.items:
            for eid, m in h.items():
                out[eid] = out.get(eid, Fraction(0)) + w * m
        return out


def _decompose(g: MultiGraph, e: int) -> dict[tuple[int, ...], Fraction]:
    if g.number_of_vertices() == 2:
        u = g._eu[e]
        f, h, k = sorted(x for x in g.incident(u) if x != e)
        return {(f, h): THIRD, (f, k): THIRD, (h, k): THIRD}
    v = g._ev[e]
    x, y = admissible_set(g, v, e).members[:2]
    merged: dict[tuple[int, ...], Fraction] = {}
    for first, second in ((x, y), (y, x)):
        child = g.copy()
        step = complete_split_at(child, v, e, first, second, check=False)
        for key, w in _decompose(child, step.created_ux).items():
            lifted = Counter(dict.fromkeys(key, 1))
            _lift_in_place(lifted, step)
            new_key = tuple(sorted(lifted.elements()))
            merged[new_key] = merged.get(new_key, Fraction(0)) + HALF * w
    return merged


def convex_decomposition(g: MultiGraph, e: int, limit: int | None = None) -> ConvexCombination:
    """Write ``2/3`` times the indicator of ``E - e`` as a convex combination of 2EC spanning subgraphs.

    Both ways of completely splitting ``v`` (the second endpoint of ``e``)
    with its two lowest-id admissible partners are decomposed recursively and
    lifted; the two results are averaged. Identical subgraphs are merged.
    The recursion tree has ``2^(n-2)`` leaves.
    """
    limit = get_limit("convex") if limit is None else limit
    if g.number_of_vertices() > limit:
        raise ResourceLimitError(f"{g.number_of_vertices()} vertices exceeds the convex oracle limit {limit}")
    if not g.has_edge(e):
        raise DomainError(f"unknown designated edge {e!r}")
    check_four_regular_four_connected(g)
    merged = _decompose(g, e)
    return ConvexCombination([(w, Counter(dict.fromkeys(key, 1))) for key, w in sorted(merged.items())])


def check_convex_combination(g: MultiGraph, e: int, comb: ConvexCombination) -> dict[str, bool]:
    target = {i: Fraction(2, 3) for i in g.edge_ids() if i != e}
    vec = {i: w for i, w in comb.vector().items() if w != 0}
    return {
        "weights_positive": all(w > 0 for w, _ in comb.items),
        "weights_sum_to_one": comb.weight_sum() == 1,
        "identity_holds": vec == target,
        "all_two_edge_connected": all(is_two_edge_connected_spanning(g, h) for _, h in comb.items),
        "multiplicity_at_most_one": all(m <= 1 for _, h in comb.items for m in h.values()),
    }


def brute_admissible(g: MultiGraph, v: int, e: int, f: int) -> bool:
    """Split ``(e, f)`` on a copy and test ``lambda >= 4`` for every pair avoiding ``v``."""
    _, others = _neighbourhood(g, v, e)
    if f not in others:
        raise DomainError(f"edge {f} is not a candidate partner of {e} at vertex {v}")
    h = g.copy()
    try:
        split_off_pair(h, e, f, center=v)
    except DomainError:
        return False  # the split would be a loop
    rest = [a for a in h.vertices() if a != v]
    return all(
        unit_flow(h, (a,), (b,), stop_at=4) >= 4 for a, b in itertools.combinations(rest, 2)
    )


def _branch_and_bound(
    vertices: Sequence[int],
    items: Sequence[tuple[tuple[int, int], Fraction]],
    max_mult: int,
) -> tuple[list[int], Fraction] | None:
    # Minimum-cost multiplicity vector in {0..max_mult}^items whose multigraph is
    # 2-edge-connected and spans `vertices`. Exhaustive with two prunings:
    # cost (current + all remaining negative costs at max multiplicity) and
    # feasibility (current + everything undecided at max multiplicity).
    order = sorted(range(len(items)), key=lambda i: (-items[i][1], i))
    neg_tail = [Fraction(0)] * (len(order) + 1)
    for pos in range(len(order) - 1, -1, -1):
        c = items[order[pos]][1]
        neg_tail[pos] = neg_tail[pos + 1] + (c * max_mult if c < 0 else 0)
    mult = [0] * len(items)
    best: list = [None, None]

    def feasible(pos: int) -> bool:
        pairs: Counter = Counter()
        for i in range(len(items)):
            m = mult[i] if i in decided_set[pos] else max_mult
            if m:
                pairs[items[i][0]] += m
        return is_two_edge_connected_multiset(vertices, pairs)

    decided_set = [set(order[:pos]) for pos in range(len(order) + 1)]

    def search(pos: int, cost: Fraction) -> None:
        if best[1] is not None and cost + neg_tail[pos] >= best[1]:
            return
        if pos == len(order):
            best[0], best[1] = list(mult), cost
            return
        i = order[pos]
        for m in range(max_mult + 1):
            mult[i] = m
            if m < max_mult and not feasible(pos + 1):
                continue
            search(pos + 1, cost + m * items[i][1])
        mult[i] = 0

    if not feasible(0):
        return None
    search(0, Fraction(0))
    return best[0], best[1]


def brute_optimal_2ec_subgraph(
    g: MultiGraph, forbidden: int | None = None, limit: int | None = None
) -> tuple[EdgeMultiset, Fraction]:
    """Cheapest 2-edge-connected spanning subgraph of ``g - forbidden`` (each edge record at most once)."""
    limit = get_limit("brute") if limit is None else limit
    ids = [i for i in g.edge_ids() if i != forbidden]
    if g.number_of_edges() > limit:
        raise ResourceLimitError(f"{g.number_of_edges()} edges exceeds the brute-force limit {limit}")
    items = [((min(g._eu[i], g._ev[i]), max(g._eu[i], g._ev[i])), g.cost(i)) for i in ids]
    found = _branch_and_bound(g.vertices(), items, 1)
    if found is None:
        raise DomainError("no 2-edge-connected spanning subgraph exists")
    mult, cost = found
    return Counter({ids[k]: m for k, m in enumerate(mult) if m}), cost


def brute_optimal_2ecm(
    cost_matrix: Sequence[Sequence[Fraction]], n: int, limit: int = 6
) -> tuple[Counter, Fraction]:
    """Cheapest 2-edge-connected spanning multisubgraph of the complete graph, at most two copies per pair.

    Returns a counter keyed by vertex pairs ``(a, b)`` with ``a < b``.
    """
    if n > limit:
        raise ResourceLimitError(f"n = {n} exceeds the 2ECM brute-force limit {limit}")
    if n == 1:
        return Counter(), Fraction(0)
    pairs = list(itertools.combinations(range(n), 2))
    items = [(p, Fraction(cost_matrix[p[0]][p[1]])) for p in pairs]
    found = _branch_and_bound(range(n), items, 2)
    assert found is not None  # doubling any spanning tree is feasible
    mult, cost = found
    return Counter({pairs[k]: m for k, m in enumerate(mult) if m}), cost
