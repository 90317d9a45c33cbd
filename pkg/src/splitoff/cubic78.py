"""2-edge-connected multisubgraphs of cost at most 7/8 c(G) for cubic 3-edge-connected graphs.

Two candidate answers are built from a 2-factor ``F`` whose cycles meet
every 3- and 4-edge cut:

* ``H1 = F + R`` where ``R`` is a Christofides-style 2ECM answer on the graph
  obtained by contracting the cycles of ``F``, costing at most
  ``3/5`` of that graph;
* ``H2`` from the half-integral point with ``1/2`` on ``F`` and ``1`` on the
  remaining perfect matching, via the 2/3 algorithm.

The cheaper one satisfies the bound because ``5/8 c(H1) + 3/8 c(H2) <= 7/8 c(G)``.
"""

from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .certificate import SubgraphCertificate
from .connectivity import (
    is_k_edge_connected_excluding,
    is_two_edge_connected_spanning,
)
from .errors import DomainError, InvariantViolation, ResourceLimitError
from .half_integral import HalfIntegralSolution, pair, support_multigraph, validate_solution
from .limits import get_limit
from .multigraph import MultiGraph, contract_edge_set, shortest_path_tree
from .two_thirds import solve_two_thirds

THREE_FIFTHS = Fraction(3, 5)
SEVEN_EIGHTHS = Fraction(7, 8)


@dataclass
class TwoFactorCertificate:
    factor_edges: Counter
    contracted: MultiGraph
    five_ec: bool
    matching: frozenset[int] = field(default_factory=frozenset)
    cycles: list[list[int]] = field(default_factory=list)


def check_cubic(g: MultiGraph) -> None:
    """Raise :class:`DomainError` unless ``g`` is simple, 3-regular and 3-edge-connected."""
    n = g.number_of_vertices()
    if n < 4 or n % 2:
        raise DomainError(f"a cubic graph needs an even number (>= 4) of vertices, got {n}")
    for a in g.vertices():
        if g.degree(a) != 3:
            raise DomainError(f"vertex {a} has degree {g.degree(a)}, expected 3")
    seen = set()
    for rec in g.edges():
        p = pair(rec.u, rec.v)
        if p in seen:
            raise DomainError(f"parallel edges between {p[0]} and {p[1]}")
        seen.add(p)
    if not is_k_edge_connected_excluding(g, 3):
        raise DomainError("graph is not 3-edge-connected")


def perfect_matchings(g: MultiGraph) -> Iterator[frozenset[int]]:
    """All perfect matchings, in lexicographic order of (lowest free vertex, edge id) choices."""
    order = g.vertices()
    matched: set[int] = set()
    chosen: list[int] = []

    def rec(pos: int) -> Iterator[frozenset[int]]:
        while pos < len(order) and order[pos] in matched:
            pos += 1
        if pos == len(order):
            yield frozenset(chosen)
            return
        a = order[pos]
        matched.add(a)
        for eid in sorted(g.incident(a)):
            b = g.other_end(eid, a)
            if b in matched:
                continue
            matched.add(b)
            chosen.append(eid)
            yield from rec(pos + 1)
            chosen.pop()
            matched.discard(b)
        matched.discard(a)

    yield from rec(0)


def _cycles(g: MultiGraph, factor: set[int]) -> list[list[int]]:
    seen: set[int] = set()
    out = []
    for start in g.vertices():
        if start in seen:
            continue
        comp = []
        stack = [start]
        seen.add(start)
        while stack:
            a = stack.pop()
            comp.append(a)
            for eid in g.incident(a):
                if eid in factor:
                    b = g.other_end(eid, a)
                    if b not in seen:
                        seen.add(b)
                        stack.append(b)
        out.append(sorted(comp))
    return out


def two_factor_from_matching(g: MultiGraph, matching: frozenset[int]) -> TwoFactorCertificate:
    factor = set(g.edge_ids()) - matching
    cycles = _cycles(g, factor)
    contracted, _ = contract_edge_set(g, cycles)
    five = contracted.number_of_vertices() == 1 or is_k_edge_connected_excluding(contracted, 5)
    return TwoFactorCertificate(Counter(dict.fromkeys(sorted(factor), 1)), contracted, five, matching, cycles)


def iter_good_two_factors(g: MultiGraph, limit: int | None = None) -> Iterator[TwoFactorCertificate]:
    """2-factors whose contraction is 5-edge-connected, in canonical matching order."""
    limit = get_limit("factor") if limit is None else limit
    if g.number_of_vertices() > limit:
        raise ResourceLimitError(f"{g.number_of_vertices()} vertices exceeds the 2-factor search limit {limit}")
    for m in perfect_matchings(g):
        cert = two_factor_from_matching(g, m)
        if cert.five_ec:
            yield cert


def find_good_two_factor(g: MultiGraph, limit: int | None = None) -> TwoFactorCertificate:
    check_cubic(g)
    for cert in iter_good_two_factors(g, limit):
        return cert
    raise DomainError("no 2-factor meets every 3- and 4-edge cut")


def _min_perfect_matching(weights: list[list[Fraction]]) -> list[tuple[int, int]]:
    # Exact minimum-weight perfect matching on a complete graph by DP over subsets.
    k = len(weights)
    full = (1 << k) - 1
    best: dict[int, tuple[Fraction, tuple[int, int] | None]] = {0: (Fraction(0), None)}

    def solve(mask: int) -> Fraction:
        if mask in best:
            return best[mask][0]
        i = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << i)
        choice = None
        value = None
        j_mask = rest
        while j_mask:
            j = (j_mask & -j_mask).bit_length() - 1
            j_mask &= j_mask - 1
            cand = weights[i][j] + solve(rest & ~(1 << j))
            if value is None or cand < value:
                value, choice = cand, (i, j)
        best[mask] = (value, choice)
        return value

    solve(full)
    out = []
    mask = full
    while mask:
        i, j = best[mask][1]
        out.append((i, j))
        mask &= ~((1 << i) | (1 << j))
    return out


def _euler_circuit(k: int, edges: list[tuple[int, int]]) -> list[int]:
    # Hierholzer; returns the sequence of edge indices of a closed walk.
    adj: list[list[tuple[int, int]]] = [[] for _ in range(k)]
    for i, (a, b) in enumerate(edges):
        adj[a].append((b, i))
        adj[b].append((a, i))
    used = [False] * len(edges)
    ptr = [0] * k
    stack = [(edges[0][0], -1)]
    circuit = []
    while stack:
        a, via = stack[-1]
        while ptr[a] < len(adj[a]) and used[adj[a][ptr[a]][1]]:
            ptr[a] += 1
        if ptr[a] == len(adj[a]):
            stack.pop()
            if via >= 0:
                circuit.append(via)
        else:
            b, i = adj[a][ptr[a]]
            used[i] = True
            stack.append((b, i))
    return circuit[::-1]


def christofides_2ecm(gp: MultiGraph, matching_limit: int | None = None) -> tuple[Counter, Fraction]:
    """Closed-walk 2ECM answer on ``gp`` with every edge used at most twice.

    Minimum spanning tree plus a minimum-weight perfect matching on its
    odd vertices, both over shortest-path distances; each closure edge of the
    Eulerian union is replaced by a shortest path of ``gp``. Requires
    non-negative costs. Raises :class:`InvariantViolation` if the result costs
    more than ``3/5 c(E(gp))``, which cannot happen when ``gp`` is
    5-edge-connected.
    """
    vs = gp.vertices()
    k = len(vs)
    if k <= 1:
        return Counter(), Fraction(0)
    dist = []
    pred = []
    for a in vs:
        d, p = shortest_path_tree(gp, a)
        if any(d[b] is None for b in vs):
            raise DomainError("graph is disconnected")
        dist.append([d[b] for b in vs])
        pred.append(p)

    # Prim over the closure
    in_tree = [False] * k
    tree = []
    heap = [(Fraction(0), 0, -1)]
    while heap:
        d, b, a = heapq.heappop(heap)
        if in_tree[b]:
            continue
        in_tree[b] = True
        if a >= 0:
            tree.append((a, b))
        for c in range(k):
            if not in_tree[c]:
                heapq.heappush(heap, (dist[b][c], c, b))

    deg = [0] * k
    for a, b in tree:
        deg[a] += 1
        deg[b] += 1
    odd = [i for i in range(k) if deg[i] % 2]
    limit = get_limit("matching") if matching_limit is None else matching_limit
    if len(odd) > limit:
        raise ResourceLimitError(f"{len(odd)} odd-degree vertices exceeds the matching limit {limit}")
    if len(odd) % 2:
        raise InvariantViolation("odd number of odd-degree vertices")
    sub = [[dist[a][b] for b in odd] for a in odd]
    matching = [(odd[i], odd[j]) for i, j in _min_perfect_matching(sub)] if odd else []

    closure_edges = tree + matching
    walk = _euler_circuit(k, closure_edges)
    if len(walk) != len(closure_edges):
        raise InvariantViolation("tree plus matching is not Eulerian")
    used: Counter = Counter()
    for i in walk:
        a, b = closure_edges[i]
        c = vs[b]
        while c != vs[a]:
            eid = pred[a][c]
            used[eid] += 1
            c = gp._eu[eid] ^ gp._ev[eid] ^ c
    r = Counter({eid: min(m, 2) for eid, m in used.items()})
    cost = sum((gp.cost(eid) * m for eid, m in r.items()), Fraction(0))
    if not is_two_edge_connected_spanning(gp, r):
        raise InvariantViolation("closed walk is not 2-edge-connected")
    if cost > THREE_FIFTHS * gp.total_cost():
        raise InvariantViolation(f"c(R) = {cost} exceeds 3/5 c(E(G')) = {THREE_FIFTHS * gp.total_cost()}")
    return r, cost


def _z_route(g: MultiGraph, factor: Counter) -> tuple[Counter, Fraction, bool]:
    x = {}
    cost = {}
    by_pair = {}
    for rec in g.edges():
        p = pair(rec.u, rec.v)
        x[p] = Fraction(1, 2) if rec.id in factor else Fraction(1)
        cost[p] = rec.cost
        by_pair[p] = rec.id
    z = HalfIntegralSolution(g.vertex_capacity, x, cost)
    report = validate_solution(z)
    support = support_multigraph(z, report)
    e = support.edge_ids()[0]
    inner = solve_two_thirds(support, e, check_input=False)
    h = Counter()
    for eid, m in inner.edges.items():
        h[by_pair[support.provenance(eid).origin]] += m
    return h, inner.cost, report.degrees_ok and report.cuts_ok and report.half_integral


def _solve_with_factor(g: MultiGraph, tf: TwoFactorCertificate) -> SubgraphCertificate:
    total = g.total_cost()
    c_f = sum((g.cost(i) for i in tf.factor_edges), Fraction(0))
    c_m = total - c_f

    r, c_r = christofides_2ecm(tf.contracted)
    h1 = Counter(tf.factor_edges)
    h1.update(r)
    c_h1 = c_f + c_r

    h2, c_h2, z_ok = _z_route(g, tf.factor_edges)

    chosen, h, cost = ("H1", h1, c_h1) if c_h1 <= c_h2 else ("H2", h2, c_h2)
    bound = SEVEN_EIGHTHS * total
    checks = {
        "z_feasible": z_ok,
        "five_edge_connected_contraction": tf.five_ec,
        "christofides_bound": c_r <= THREE_FIFTHS * tf.contracted.total_cost(),
        "h1_bound": c_h1 <= c_f + THREE_FIFTHS * c_m,
        "h2_bound": c_h2 <= Fraction(2, 3) * c_f + Fraction(4, 3) * c_m,
        "averaging_bound": Fraction(5, 8) * c_h1 + Fraction(3, 8) * c_h2 <= bound,
        "h1_two_edge_connected": is_two_edge_connected_spanning(g, h1),
        "h2_two_edge_connected": is_two_edge_connected_spanning(g, h2),
        "multiplicity_at_most_two": all(m <= 2 for m in h1.values()) and all(m <= 2 for m in h2.values()),
        "two_edge_connected_spanning": is_two_edge_connected_spanning(g, h),
    }
    return SubgraphCertificate(
        algorithm="cubic-seven-eighths",
        edges=h,
        cost=cost,
        bound=bound,
        checks=checks,
        details={
            "chosen": chosen,
            "cost_h1": c_h1,
            "cost_h2": c_h2,
            "cost_factor": c_f,
            "factor_cycles": tf.cycles,
        },
    )


def solve_cubic_seven_eighths(
    g: MultiGraph, *, try_all: bool = False, limit: int | None = None
) -> SubgraphCertificate:
    """2-edge-connected spanning multisubgraph of cost at most ``7/8 c(G)``.

    Uses the first qualifying 2-factor in canonical order, or with
    ``try_all`` every qualifying 2-factor, keeping the cheapest answer.
    Any failed internal bound raises :class:`InvariantViolation`.
    """
    check_cubic(g)
    if any(g.cost(i) < 0 for i in g.edge_ids()):
        raise DomainError("costs must be non-negative")
    best = None
    for tf in iter_good_two_factors(g, limit):
        cert = _solve_with_factor(g, tf)
        if not all(cert.checks.values()) or not cert.bound_holds:
            failed = [k for k, ok in cert.checks.items() if not ok]
            raise InvariantViolation(f"7/8 pipeline check failed: {failed or ['bound']}")
        if best is None or cert.cost < best.cost:
            best = cert
        if not try_all:
            break
    if best is None:
        raise DomainError("no 2-factor meets every 3- and 4-edge cut")
    return best
