"""Edge-connectivity queries on :class:`~splitoff.multigraph.MultiGraph`.

Everything here is read-only with respect to the graph; scratch state lives
in per-call locals.
"""

from __future__ import annotations

from collections import Counter, deque
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import DomainError
from .multigraph import MultiGraph


def unit_flow(
    g: MultiGraph,
    sources: Iterable[int],
    sinks: Iterable[int],
    *,
    removed: Iterable[int] = (),
    stop_at: int | None = None,
) -> int:
    """Number of edge-disjoint paths from the ``sources`` set to the ``sinks`` set.

    Vertices in ``removed`` are treated as deleted together with their edges.
    Treating a vertex set as a single terminal is the same as contracting it
    first and discarding the resulting loops. Each augmenting path is found
    with one breadth-first traversal and the search stops once ``stop_at``
    paths are known.
    """
    src = set(sources)
    dst = set(sinks)
    if src & dst:
        raise DomainError("source and sink sets overlap")
    adj, eu, ev = g._adj, g._eu, g._ev
    blocked = set(removed)
    flow: dict[int, int] = {}  # +1: one unit from eu to ev, -1: from ev to eu
    value = 0
    while stop_at is None or value < stop_at:
        pred: dict[int, tuple[int, int] | None] = {s: None for s in src}
        queue = deque(src)
        hit = None
        while queue:
            a = queue.popleft()
            for eid in adj[a]:
                b = eu[eid] ^ ev[eid] ^ a
                if b in pred or b in blocked:
                    continue
                f = flow.get(eid, 0)
                if (f if eu[eid] == a else -f) > 0:
                    continue
                pred[b] = (a, eid)
                if b in dst:
                    hit = b
                    break
                queue.append(b)
            if hit is not None:
                break
        if hit is None:
            break
        b = hit
        step = pred[b]
        while step is not None:
            a, eid = step
            f = flow.get(eid, 0) + (1 if eu[eid] == a else -1)
            if f:
                flow[eid] = f
            else:
                del flow[eid]
            b = a
            step = pred[b]
        value += 1
    return value


def _fractional_flow(g: MultiGraph, s: int, t: int, cap: Mapping[int, Fraction]) -> Fraction:
    # Edmonds-Karp on the bidirected version of g; parallel edges are kept apart.
    residual: dict[tuple[int, int], Fraction] = {}
    for eid in g.edge_ids():
        c = Fraction(cap.get(eid, 0))
        if c < 0:
            raise DomainError(f"negative capacity on edge {eid}")
        residual[(eid, 0)] = c  # eu -> ev
        residual[(eid, 1)] = c  # ev -> eu
    adj, eu, ev = g._adj, g._eu, g._ev
    value = Fraction(0)
    while True:
        pred: dict[int, tuple[int, int] | None] = {s: None}
        queue = deque([s])
        while queue and t not in pred:
            a = queue.popleft()
            for eid in adj[a]:
                d = 0 if eu[eid] == a else 1
                b = ev[eid] if d == 0 else eu[eid]
                if b not in pred and residual[(eid, d)] > 0:
                    pred[b] = (eid, d)
                    queue.append(b)
        if t not in pred:
            return value
        bottleneck = None
        b = t
        while pred[b] is not None:
            eid, d = pred[b]
            r = residual[(eid, d)]
            bottleneck = r if bottleneck is None else min(bottleneck, r)
            b = eu[eid] if d == 0 else ev[eid]
        b = t
        while pred[b] is not None:
            eid, d = pred[b]
            residual[(eid, d)] -= bottleneck
            residual[(eid, 1 - d)] += bottleneck
            b = eu[eid] if d == 0 else ev[eid]
        value += bottleneck


def max_flow_value(
    g: MultiGraph,
    s: int,
    t: int,
    cap: Mapping[int, Fraction] | None = None,
    stop_at: int | None = None,
):
    """Maximum ``s``-``t`` flow.

    Without ``cap`` every edge record has capacity one and the result is the
    integer ``min(lambda(s, t), stop_at)``. With ``cap`` the exact rational
    flow value is returned and ``stop_at`` is ignored.
    """
    g._check_vertex(s)
    g._check_vertex(t)
    if s == t:
        raise DomainError("source and sink must differ")
    if cap is not None:
        return _fractional_flow(g, s, t, cap)
    return unit_flow(g, (s,), (t,), stop_at=stop_at)


def local_edge_connectivity(g: MultiGraph, x: int, y: int) -> int:
    """Size of a minimum ``x``-``y`` cut, counting parallel edges separately."""
    return max_flow_value(g, x, y)


def is_k_edge_connected_excluding(g: MultiGraph, k: int, excluded: int | None = None) -> bool:
    """True iff every pair of live vertices other than ``excluded`` has ``lambda >= k``.

    Paths may still pass through ``excluded``. Connectivity is certified by
    ``k``-capped flows along the edges of a breadth-first tree (each eligible
    vertex against its nearest eligible ancestor); local connectivity is
    transitive in the sense ``lambda(a, c) >= min(lambda(a, b), lambda(b, c))``,
    so the tree pairs cover all pairs.
    """
    eligible = [a for a in g.vertices() if a != excluded]
    if len(eligible) < 2:
        raise DomainError("need at least two vertices to test edge-connectivity")
    root = eligible[0]
    anchor = {root: root}  # nearest eligible vertex on the tree path from the root
    order = [root]
    queue = deque([root])
    adj, eu, ev = g._adj, g._eu, g._ev
    while queue:
        a = queue.popleft()
        for eid in adj[a]:
            b = eu[eid] ^ ev[eid] ^ a
            if b not in anchor:
                anchor[b] = anchor[a] if a == excluded else a
                order.append(b)
                queue.append(b)
    if any(a not in anchor for a in eligible):
        return False
    for b in order:
        if b == root or b == excluded:
            continue
        if unit_flow(g, (anchor[b],), (b,), stop_at=k) < k:
            return False
    return True


def _bridge_count(vertices: list[int], edges: list[tuple[int, int]]) -> tuple[bool, int]:
    # Returns (connected, number of bridges) of the multigraph on `vertices`.
    adj: dict[int, list[tuple[int, int]]] = {a: [] for a in vertices}
    for i, (a, b) in enumerate(edges):
        adj[a].append((b, i))
        adj[b].append((a, i))
    root = vertices[0]
    disc = {root: 0}
    low = {root: 0}
    stack = [(root, -1, iter(adj[root]))]
    bridges = 0
    while stack:
        a, via, it = stack[-1]
        advanced = False
        for b, i in it:
            if i == via:
                continue
            if b in disc:
                low[a] = min(low[a], disc[b])
            else:
                disc[b] = low[b] = len(disc)
                stack.append((b, i, iter(adj[b])))
                advanced = True
                break
        if not advanced:
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[a])
                if low[a] > disc[p]:
                    bridges += 1
    return len(disc) == len(vertices), bridges


def is_two_edge_connected_multiset(vertices: Iterable[int], pairs: Mapping[tuple[int, int], int]) -> bool:
    """2-edge-connectivity of the multigraph on ``vertices`` with the given pair multiplicities.

    Every vertex must be covered; a pair used twice can never be a bridge.
    """
    vs = sorted(set(vertices))
    if not vs:
        return False
    vset = set(vs)
    edges = []
    for (a, b), mult in pairs.items():
        if mult <= 0:
            continue
        if a not in vset or b not in vset or a == b:
            return False
        edges.extend([(a, b)] * mult)
    if len(vs) == 1:
        return True
    connected, bridges = _bridge_count(vs, edges)
    return connected and bridges == 0


def is_two_edge_connected_spanning(
    g: MultiGraph, s: Mapping[int, int], over: MultiGraph | None = None
) -> bool:
    """True iff the edge multiset ``s`` (ids of ``g``) spans ``over`` and is bridgeless and connected.

    ``over`` defaults to ``g``; its live vertices are the ones that must be spanned.
    """
    host = g if over is None else over
    vs = host.vertices()
    edges = []
    for eid, mult in s.items():
        if mult <= 0:
            continue
        if not g.has_edge(eid):
            return False
        edges.extend([(g._eu[eid], g._ev[eid])] * mult)
    vset = set(vs)
    if any(a not in vset or b not in vset for a, b in edges):
        return False
    if len(vs) <= 1:
        return bool(vs)
    connected, bridges = _bridge_count(vs, edges)
    return connected and bridges == 0


def global_min_cut(g: MultiGraph, cap: Mapping[int, Fraction] | None = None) -> tuple[Fraction, frozenset[int]]:
    """Stoer-Wagner minimum cut with exact rational weights.

    Returns the cut value and one shore. Missing capacities default to one
    per edge record. A disconnected graph has a cut of value zero whose shore
    is a connected component.
    """
    vs = g.vertices()
    if len(vs) < 2:
        raise DomainError("a cut needs at least two vertices")
    w: dict[int, Counter] = {a: Counter() for a in vs}
    for eid in g.edge_ids():
        c = Fraction(1) if cap is None else Fraction(cap.get(eid, 0))
        if c < 0:
            raise DomainError(f"negative capacity on edge {eid}")
        a, b = g._eu[eid], g._ev[eid]
        w[a][b] += c
        w[b][a] += c
    members = {a: {a} for a in vs}
    best_value: Fraction | None = None
    best_side: frozenset[int] = frozenset()
    active = list(vs)
    while len(active) > 1:
        # maximum adjacency ordering
        weight = {a: Fraction(0) for a in active}
        remaining = set(active)
        order = []
        while remaining:
            a = max(remaining, key=lambda x: (weight[x], -x))
            remaining.discard(a)
            order.append(a)
            for b, c in w[a].items():
                if b in remaining:
                    weight[b] += c
        s, t = order[-2], order[-1]
        cut = weight[t]
        if best_value is None or cut < best_value:
            best_value = cut
            best_side = frozenset(members[t])
        # merge t into s
        for b, c in w[t].items():
            if b == s:
                continue
            w[s][b] += c
            w[b][s] += c
            del w[b][t]
        w[s].pop(t, None)
        del w[t]
        members[s] |= members.pop(t)
        active.remove(t)
    return Fraction(best_value), best_side


def global_min_cut_value(g: MultiGraph, cap: Mapping[int, Fraction] | None = None) -> Fraction:
    return global_min_cut(g, cap)[0]
