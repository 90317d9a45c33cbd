"""Deterministic instance generators for tests, demos and the CLI."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable

from .connectivity import is_k_edge_connected_excluding
from .errors import DomainError
from .multigraph import MultiGraph

CostFn = Callable[[random.Random], Fraction]


def unit_cost(_rng: random.Random) -> Fraction:
    return Fraction(1)


def rational_cost(lo: int = -10, hi: int = 10, max_den: int = 4) -> CostFn:
    """Random fractions ``p/q`` in ``[lo, hi]`` with ``q <= max_den``."""

    def draw(rng: random.Random) -> Fraction:
        q = rng.randint(1, max_den)
        return Fraction(rng.randint(lo * q, hi * q), q)

    return draw


def circulant(n: int, steps=(1, 2), cost=1) -> MultiGraph:
    """``C_n(steps)``: vertex ``i`` is joined to ``i + s mod n`` for every step ``s``.

    With the default steps the result is 4-regular and, for ``n >= 5``, simple
    and 4-edge-connected; ``C_5(1, 2)`` is ``K_5``.
    """
    if n < 3:
        raise DomainError("circulant needs n >= 3")
    g = MultiGraph(n)
    for s in steps:
        for i in range(n):
            g.add_edge(i, (i + s) % n, cost)
    return g


def doubled_cycle(n: int, cost=1) -> MultiGraph:
    if n < 2:
        raise DomainError("doubled cycle needs n >= 2")
    g = MultiGraph(n)
    if n == 2:
        for _ in range(4):
            g.add_edge(0, 1, cost)
        return g
    for i in range(n):
        g.add_edge(i, (i + 1) % n, cost)
        g.add_edge(i, (i + 1) % n, cost)
    return g


def complete_graph(n: int, cost=1) -> MultiGraph:
    g = MultiGraph(n)
    for i in range(n):
        for j in range(i + 1, n):
            g.add_edge(i, j, cost)
    return g


def _pairing(n: int, d: int, rng: random.Random) -> list[tuple[int, int]] | None:
    stubs = [a for a in range(n) for _ in range(d)]
    rng.shuffle(stubs)
    pairs = []
    for i in range(0, len(stubs), 2):
        a, b = stubs[i], stubs[i + 1]
        if a == b:
            return None
        pairs.append((min(a, b), max(a, b)))
    return sorted(pairs)


def random_4reg4ec(
    n: int, rng: random.Random, cost: CostFn = unit_cost, max_tries: int = 10000
) -> MultiGraph:
    """Random 4-regular 4-edge-connected multigraph from the pairing model.

    Pairings with loops are redrawn; the rest are kept only if they pass the
    4-edge-connectivity test. ``n = 2`` gives four parallel edges.
    """
    if n < 2:
        raise DomainError("need n >= 2")
    for _ in range(max_tries):
        pairs = [(0, 1)] * 4 if n == 2 else _pairing(n, 4, rng)
        if pairs is None:
            continue
        g = MultiGraph(n)
        for a, b in pairs:
            g.add_edge(a, b, cost(rng))
        if is_k_edge_connected_excluding(g, 4):
            return g
    raise DomainError(f"no 4-edge-connected pairing found in {max_tries} tries")


def random_cubic_3ec(
    n: int, rng: random.Random, cost: CostFn = unit_cost, max_tries: int = 10000
) -> MultiGraph:
    """Random simple 3-regular 3-edge-connected graph (``n`` even, ``n >= 4``)."""
    if n < 4 or n % 2:
        raise DomainError("cubic graphs need an even n >= 4")
    for _ in range(max_tries):
        pairs = _pairing(n, 3, rng)
        if pairs is None or len(set(pairs)) != len(pairs):
            continue
        g = MultiGraph(n)
        for a, b in pairs:
            g.add_edge(a, b, cost(rng))
        if is_k_edge_connected_excluding(g, 3):
            return g
    raise DomainError(f"no 3-edge-connected cubic pairing found in {max_tries} tries")


def generalized_petersen(n: int, k: int, cost=1) -> MultiGraph:
    """``GP(n, k)``: outer cycle ``0..n-1``, spokes ``i -- n+i``, inner edges ``n+i -- n+(i+k mod n)``."""
    g = MultiGraph(2 * n)
    for i in range(n):
        g.add_edge(i, (i + 1) % n, cost)
    for i in range(n):
        g.add_edge(i, n + i, cost)
    for i in range(n):
        g.add_edge(n + i, n + (i + k) % n, cost)
    return g


def petersen(cost=1) -> MultiGraph:
    return generalized_petersen(5, 2, cost)


def mobius_kantor(cost=1) -> MultiGraph:
    return generalized_petersen(8, 3, cost)


def prism(cost=1) -> MultiGraph:
    """Triangular prism ``C_3 x K_2``."""
    return generalized_petersen(3, 1, cost)


def k4(cost=1) -> MultiGraph:
    return complete_graph(4, cost)


def k33(cost=1) -> MultiGraph:
    g = MultiGraph(6)
    for a in range(3):
        for b in range(3, 6):
            g.add_edge(a, b, cost)
    return g


def with_random_costs(g: MultiGraph, rng: random.Random, cost: CostFn) -> MultiGraph:
    h = g.copy()
    for eid in h.edge_ids():
        h.set_cost(eid, cost(rng))
    return h
