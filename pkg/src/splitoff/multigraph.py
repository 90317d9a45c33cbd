"""Undirected multigraphs with stable edge identities and exact rational costs.

Edge ids are handed out from a single counter per graph lineage and are never
reused, so a parallel copy of an edge is always distinguishable from its
siblings and a deleted id can still be referred to by a split record.
Copies of a graph keep the counter, so ids created in a copy never collide
with ids that exist in the original.
"""

from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence, Union

from .errors import DomainError

Rational = Fraction
EdgeMultiset = Counter  # edge id -> multiplicity


def parse_rational(text: str) -> Fraction:
    """Parse ``"3"``, ``"-7/2"`` or ``"0.125"`` into an exact fraction.

    Decimals are converted digit by digit, so ``"0.1"`` is exactly 1/10.
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational number: {text!r}") from exc


def render_rational(q: Fraction) -> str:
    return str(Fraction(q))


@dataclass(frozen=True)
class Input:
    """Edge that was present in the input; ``origin`` names what it came from."""

    origin: Hashable


@dataclass(frozen=True)
class Split:
    """Edge created by splitting off the pair ``(first, second)``."""

    first: int
    second: int


Provenance = Union[Input, Split]


@dataclass(frozen=True)
class EdgeRecord:
    id: int
    u: int
    v: int
    cost: Fraction
    provenance: Provenance

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.u, self.v)

    def other(self, a: int) -> int:
        if a == self.u:
            return self.v
        if a == self.v:
            return self.u
        raise DomainError(f"vertex {a} is not an endpoint of edge {self.id}")


class MultiGraph:
    """Mutable undirected multigraph.

    Internally everything is list-indexed: vertex ``a`` owns ``_adj[a]``, an
    insertion-ordered dict used as an ordered set of incident edge ids, and
    edge ``i`` lives at index ``i`` of the endpoint/cost/provenance lists.
    Deleted vertices and edges leave dead slots behind; they are never
    renumbered.
    """

    def __init__(self, n: int = 0):
        self._adj: list[dict[int, None]] = [{} for _ in range(n)]
        self._valive: list[bool] = [True] * n
        self._eu: list[int] = []
        self._ev: list[int] = []
        self._cost: list[Fraction] = []
        self._prov: list[Provenance | None] = []
        self._ealive: list[bool] = []
        self._nv = n
        self._ne = 0

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence]) -> "MultiGraph":
        """Build a graph on vertices ``0..n-1`` from ``(u, v)`` or ``(u, v, cost)`` tuples."""
        g = cls(n)
        for item in edges:
            u, v = item[0], item[1]
            cost = item[2] if len(item) > 2 else 0
            g.add_edge(u, v, cost)
        return g

    # -- vertices ---------------------------------------------------------

    def add_vertex(self) -> int:
        self._adj.append({})
        self._valive.append(True)
        self._nv += 1
        return len(self._adj) - 1

    def has_vertex(self, a: int) -> bool:
        return 0 <= a < len(self._adj) and self._valive[a]

    def _check_vertex(self, a: int) -> None:
        if not (isinstance(a, int) and self.has_vertex(a)):
            raise DomainError(f"unknown vertex {a!r}")

    def remove_vertex(self, a: int) -> None:
        """Mark an isolated vertex dead. Its id is not reused."""
        self._check_vertex(a)
        if self._adj[a]:
            raise DomainError(f"vertex {a} still has {len(self._adj[a])} incident edges")
        self._valive[a] = False
        self._nv -= 1

    def vertices(self) -> list[int]:
        return [a for a, alive in enumerate(self._valive) if alive]

    def number_of_vertices(self) -> int:
        return self._nv

    @property
    def vertex_capacity(self) -> int:
        """One past the largest vertex id ever allocated."""
        return len(self._adj)

    def is_compact(self) -> bool:
        return self._nv == len(self._adj)

    def degree(self, a: int) -> int:
        self._check_vertex(a)
        return len(self._adj[a])

    def incident(self, a: int) -> list[int]:
        """Incident edge ids in insertion order."""
        self._check_vertex(a)
        return list(self._adj[a])

    def neighbors(self, a: int) -> list[int]:
        """Other endpoints of incident edges, one entry per edge."""
        return [self._eu[i] ^ self._ev[i] ^ a for i in self.incident(a)]

    # -- edges ------------------------------------------------------------

    def add_edge(self, u: int, v: int, cost=0, provenance: Provenance | None = None) -> int:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise DomainError(f"self-loop at vertex {u} is not allowed")
        eid = len(self._eu)
        self._eu.append(u)
        self._ev.append(v)
        self._cost.append(Fraction(cost))
        self._prov.append(provenance if provenance is not None else Input(eid))
        self._ealive.append(True)
        self._adj[u][eid] = None
        self._adj[v][eid] = None
        self._ne += 1
        return eid

    def _put_edge(self, eid: int, u: int, v: int, cost: Fraction, prov: Provenance | None) -> None:
        # Install an edge under a caller-chosen id (used by contraction).
        while len(self._eu) <= eid:
            self._eu.append(-1)
            self._ev.append(-1)
            self._cost.append(Fraction(0))
            self._prov.append(None)
            self._ealive.append(False)
        self._eu[eid], self._ev[eid] = u, v
        self._cost[eid] = cost
        self._prov[eid] = prov
        self._ealive[eid] = True
        self._adj[u][eid] = None
        self._adj[v][eid] = None
        self._ne += 1

    def has_edge(self, eid: int) -> bool:
        return isinstance(eid, int) and 0 <= eid < len(self._eu) and self._ealive[eid]

    def _check_edge(self, eid: int) -> None:
        if not self.has_edge(eid):
            raise DomainError(f"unknown edge id {eid!r}")

    def remove_edge(self, eid: int) -> None:
        self._check_edge(eid)
        del self._adj[self._eu[eid]][eid]
        del self._adj[self._ev[eid]][eid]
        self._ealive[eid] = False
        self._ne -= 1

    def edge(self, eid: int) -> EdgeRecord:
        self._check_edge(eid)
        return EdgeRecord(eid, self._eu[eid], self._ev[eid], self._cost[eid], self._prov[eid])

    def edges(self) -> list[EdgeRecord]:
        return [self.edge(i) for i in self.edge_ids()]

    def edge_ids(self) -> list[int]:
        return [i for i, alive in enumerate(self._ealive) if alive]

    def number_of_edges(self) -> int:
        return self._ne

    @property
    def next_edge_id(self) -> int:
        return len(self._eu)

    def endpoints(self, eid: int) -> tuple[int, int]:
        self._check_edge(eid)
        return (self._eu[eid], self._ev[eid])

    def other_end(self, eid: int, a: int) -> int:
        return self.edge(eid).other(a)

    def cost(self, eid: int) -> Fraction:
        self._check_edge(eid)
        return self._cost[eid]

    def set_cost(self, eid: int, cost) -> None:
        self._check_edge(eid)
        self._cost[eid] = Fraction(cost)

    def provenance(self, eid: int) -> Provenance:
        self._check_edge(eid)
        return self._prov[eid]

    def total_cost(self) -> Fraction:
        return sum((self._cost[i] for i in self.edge_ids()), Fraction(0))

    def copy(self) -> "MultiGraph":
        h = MultiGraph.__new__(MultiGraph)
        h._adj = [dict(d) for d in self._adj]
        h._valive = list(self._valive)
        h._eu = list(self._eu)
        h._ev = list(self._ev)
        h._cost = list(self._cost)
        h._prov = list(self._prov)
        h._ealive = list(self._ealive)
        h._nv = self._nv
        h._ne = self._ne
        return h

    def __repr__(self) -> str:
        return f"MultiGraph(vertices={self._nv}, edges={self._ne})"


def degree(g: MultiGraph, v: int) -> int:
    """Number of incident edge records; parallel copies count separately."""
    return g.degree(v)


def total_cost(g: MultiGraph, s: Mapping[int, int]) -> Fraction:
    total = Fraction(0)
    for eid, mult in s.items():
        if mult < 0:
            raise DomainError(f"negative multiplicity for edge {eid}")
        total += mult * g.cost(eid)
    return total


def contract_edge_set(
    g: MultiGraph, parts: Sequence[Iterable[int]]
) -> tuple[MultiGraph, dict[int, int | None]]:
    """Contract each group of ``parts`` into a single vertex.

    Part ``i`` becomes vertex ``i`` of the returned graph. Edges between
    parts keep their id, cost and provenance; edges inside a part would be
    loops and are dropped, which shows up as ``None`` in the edge map.
    """
    where: dict[int, int] = {}
    for i, part in enumerate(parts):
        for a in part:
            g._check_vertex(a)
            if a in where:
                raise DomainError(f"vertex {a} appears in more than one part")
            where[a] = i
    if len(where) != g.number_of_vertices():
        missing = sorted(set(g.vertices()) - set(where))
        raise DomainError(f"parts do not cover vertices {missing}")
    h = MultiGraph(len(parts))
    mapping: dict[int, int | None] = {}
    for eid in g.edge_ids():
        pu, pv = where[g._eu[eid]], where[g._ev[eid]]
        if pu == pv:
            mapping[eid] = None
        else:
            h._put_edge(eid, pu, pv, g._cost[eid], g._prov[eid])
            mapping[eid] = eid
    # keep the id counter in step with the source graph
    while len(h._eu) < len(g._eu):
        h._eu.append(-1)
        h._ev.append(-1)
        h._cost.append(Fraction(0))
        h._prov.append(None)
        h._ealive.append(False)
    return h, mapping


def shortest_path_tree(g: MultiGraph, source: int) -> tuple[list, list]:
    """Dijkstra from ``source`` with exact costs.

    Returns ``(dist, pred)`` indexed by vertex id; ``pred[a]`` is the edge
    id used to reach ``a`` (``None`` for the source and unreachable vertices).
    """
    g._check_vertex(source)
    cap = g.vertex_capacity
    dist: list = [None] * cap
    pred: list = [None] * cap
    dist[source] = Fraction(0)
    heap = [(Fraction(0), source)]
    done = [False] * cap
    while heap:
        d, a = heapq.heappop(heap)
        if done[a]:
            continue
        done[a] = True
        for eid in g._adj[a]:
            c = g._cost[eid]
            if c < 0:
                raise DomainError(f"edge {eid} has negative cost {c}")
            b = g._eu[eid] ^ g._ev[eid] ^ a
            nd = d + c
            if dist[b] is None or nd < dist[b]:
                dist[b] = nd
                pred[b] = eid
                heapq.heappush(heap, (nd, b))
    return dist, pred


def metric_closure(g: MultiGraph) -> list[list[Fraction]]:
    """All-pairs shortest-path distances as an ``n x n`` matrix.

    The graph must be compact (vertex ids exactly ``0..n-1``), connected and
    carry non-negative costs.
    """
    if not g.is_compact():
        raise DomainError("metric closure needs a compact vertex set 0..n-1")
    n = g.number_of_vertices()
    rows = []
    for s in range(n):
        dist, _ = shortest_path_tree(g, s)
        if any(d is None for d in dist):
            raise DomainError("graph is disconnected")
        rows.append(dist)
    return rows
