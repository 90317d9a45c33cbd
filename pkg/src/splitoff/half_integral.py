"""From a half-integral subtour LP point to a 2-edge-connected multisubgraph of cost at most 4/3 c^T x."""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .certificate import SubgraphCertificate
from .connectivity import (
    global_min_cut,
    is_k_edge_connected_excluding,
    is_two_edge_connected_multiset,
)
from .errors import DomainError, InvariantViolation
from .multigraph import Input, MultiGraph, shortest_path_tree
from .two_thirds import solve_two_thirds

Pair = tuple[int, int]
HALF = Fraction(1, 2)
FOUR_THIRDS = Fraction(4, 3)


def pair(a: int, b: int) -> Pair:
    return (a, b) if a < b else (b, a)


@dataclass
class HalfIntegralSolution:
    """A point ``x`` of the subtour LP on the complete graph over ``0..n-1``.

    ``x`` and ``cost`` are keyed by ordered pairs ``(a, b)`` with ``a < b``;
    pairs missing from ``x`` have value zero. ``full_cost`` optionally holds
    costs of pairs outside the support, used only for the metric check.
    """

    n: int
    x: dict[Pair, Fraction]
    cost: dict[Pair, Fraction]
    full_cost: dict[Pair, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        self.x = {pair(*p): Fraction(v) for p, v in self.x.items()}
        self.cost = {pair(*p): Fraction(v) for p, v in self.cost.items()}
        self.full_cost = {pair(*p): Fraction(v) for p, v in self.full_cost.items()}

    def support(self) -> list[Pair]:
        return sorted(p for p, v in self.x.items() if v != 0)

    def cost_of(self, p: Pair) -> Fraction:
        p = pair(*p)
        if p in self.cost:
            return self.cost[p]
        if p in self.full_cost:
            return self.full_cost[p]
        raise DomainError(f"no cost given for pair {p}")

    def objective(self) -> Fraction:
        """``c^T x``."""
        return sum((v * self.cost_of(p) for p, v in self.x.items() if v), Fraction(0))

    @classmethod
    def from_multigraph_support(cls, g: MultiGraph) -> "HalfIntegralSolution":
        """The point ``x`` whose doubled support is ``g`` (half a unit per edge record).

        Parallel records must agree on cost.
        """
        x: dict[Pair, Fraction] = {}
        cost: dict[Pair, Fraction] = {}
        for rec in g.edges():
            p = pair(rec.u, rec.v)
            x[p] = x.get(p, Fraction(0)) + HALF
            if cost.setdefault(p, rec.cost) != rec.cost:
                raise DomainError(f"parallel copies of {p} carry different costs")
        return cls(g.vertex_capacity, x, cost)


@dataclass
class ValidationReport:
    half_integral: bool
    degrees_ok: bool
    cuts_ok: bool
    metric_ok: bool
    min_cut: Fraction | None = None
    cut_witness: frozenset[int] | None = None
    bad_vertex: int | None = None
    messages: list[str] = field(default_factory=list)

    @property
    def feasible(self) -> bool:
        return self.half_integral and self.degrees_ok and self.cuts_ok


def _metric_ok(s: HalfIntegralSolution) -> bool:
    known = dict(s.full_cost)
    known.update(s.cost)
    if any(c < 0 for c in known.values()):
        return False
    g = MultiGraph(s.n)
    for (a, b), c in known.items():
        g.add_edge(a, b, c)
    for a in range(s.n):
        dist, _ = shortest_path_tree(g, a)
        for eid in g._adj[a]:
            if g._cost[eid] != dist[g._eu[eid] ^ g._ev[eid] ^ a]:
                return False
    return True


def validate_solution(s: HalfIntegralSolution) -> ValidationReport:
    """Check half-integrality, degrees, cut constraints and metricity; never raises."""
    msgs: list[str] = []
    bad_pairs = [p for p in s.x if not (0 <= p[0] < p[1] < s.n)]
    if s.n < 2 or bad_pairs:
        msgs.append(f"vertex pairs out of range: {bad_pairs}" if bad_pairs else "need n >= 2")
        return ValidationReport(False, False, False, False, messages=msgs)

    if s.n == 2:
        half = all(v in (0, 2) for v in s.x.values())
    else:
        half = all(v in (0, HALF, 1) for v in s.x.values())
    if not half:
        msgs.append("x is not half-integral")

    deg = [Fraction(0)] * s.n
    for (a, b), v in s.x.items():
        deg[a] += v
        deg[b] += v
    bad_vertex = next((a for a in range(s.n) if deg[a] != 2), None)
    if bad_vertex is not None:
        msgs.append(f"x(delta({bad_vertex})) = {deg[bad_vertex]}, expected 2")

    g = MultiGraph(s.n)
    cap = {}
    for p in s.support():
        cap[g.add_edge(*p)] = s.x[p]
    if any(v < 0 for v in s.x.values()):
        min_cut, side = Fraction(-1), frozenset()
        msgs.append("x has negative entries")
    else:
        min_cut, side = global_min_cut(g, cap)
    cuts_ok = min_cut >= 2
    if not cuts_ok:
        msgs.append(f"x(delta(S)) = {min_cut} < 2 for S = {sorted(side)}")

    try:
        metric = _metric_ok(s)
    except DomainError:
        metric = False
    if not metric:
        msgs.append("costs are not metric")
    return ValidationReport(half, bad_vertex is None, cuts_ok, metric, min_cut, side, bad_vertex, msgs)


def support_multigraph(s: HalfIntegralSolution, report: ValidationReport | None = None) -> MultiGraph:
    """The multigraph with ``2 x_e`` parallel copies of every pair, each carrying the pair's cost.

    Record ids follow the sorted pair order. The result is certified
    4-regular and 4-edge-connected.
    """
    report = validate_solution(s) if report is None else report
    if not report.feasible:
        raise DomainError("infeasible solution: " + "; ".join(report.messages))
    g = MultiGraph(s.n)
    for p in s.support():
        c = s.cost_of(p)
        for _ in range(int(2 * s.x[p])):
            g.add_edge(p[0], p[1], c, Input(p))
    if any(g.degree(a) != 4 for a in g.vertices()) or not is_k_edge_connected_excluding(g, 4):
        raise InvariantViolation("support of a feasible point is not 4-regular and 4-edge-connected")
    return g


def _to_pairs(g: MultiGraph, h: Mapping[int, int]) -> Counter:
    out: Counter = Counter()
    for eid, m in h.items():
        origin = g.provenance(eid).origin
        out[origin] += m
    return out


def solve_half_integral(
    s: HalfIntegralSolution,
    designated: Pair | None = None,
    *,
    best_edge: bool = False,
    allow_nonmetric: bool = False,
    verify_levels: bool = False,
) -> SubgraphCertificate:
    """2-edge-connected spanning multisubgraph of the complete graph with cost at most ``4/3 c^T x``.

    The designated record handed to the 2/3 algorithm is the lowest-id copy of
    ``designated`` (default: the lowest-id record overall). ``best_edge``
    runs every record as the designated one and keeps the cheapest answer.
    Costs must be non-negative. Non-metric costs are refused unless
    ``allow_nonmetric``, in which case a warning is issued.
    """
    report = validate_solution(s)
    if not report.feasible:
        raise DomainError("infeasible solution: " + "; ".join(report.messages))
    if any(s.cost_of(p) < 0 for p in s.support()):
        raise DomainError("costs must be non-negative")
    if not report.metric_ok:
        if not allow_nonmetric:
            raise DomainError("costs are not metric; pass allow_nonmetric to proceed")
        warnings.warn("costs are not metric; the 4/3 guarantee is relative to c^T x only", stacklevel=2)
    g = support_multigraph(s, report)

    if best_edge:
        candidates = g.edge_ids()
    elif designated is not None:
        p = pair(*designated)
        matches = [i for i in g.edge_ids() if g.provenance(i).origin == p]
        if not matches:
            raise DomainError(f"pair {p} is not in the support of x")
        candidates = matches[:1]
    else:
        candidates = g.edge_ids()[:1]

    best = None
    for e in candidates:
        cert = solve_two_thirds(g, e, verify_levels=verify_levels, check_input=False)
        if best is None or cert.cost < best.cost:
            best = cert
    return _pairs_certificate(s, g, best, report)


def _pairs_certificate(s, g, inner: SubgraphCertificate, report: ValidationReport) -> SubgraphCertificate:
    pairs = _to_pairs(g, inner.edges)
    cost = sum((m * s.cost_of(p) for p, m in pairs.items()), Fraction(0))
    checks = {
        "two_edge_connected_spanning": is_two_edge_connected_multiset(range(s.n), pairs),
        "multiplicity_at_most_two": all(m <= 2 for m in pairs.values()),
        "cost_matches_support_answer": cost == inner.cost,
        "inner_two_thirds_bound": inner.bound_holds,
        "metric": report.metric_ok,
    }
    return SubgraphCertificate(
        algorithm="half-integral",
        edges=pairs,
        cost=cost,
        bound=FOUR_THIRDS * s.objective(),
        checks=checks,
        trace_length=inner.trace_length,
        details={"designated": g.provenance(inner.details["designated"]).origin, "objective": s.objective()},
    )


@dataclass
class MetricInstance:
    dist: list[list[Fraction]]
    paths: dict[Pair, list[int]]  # raw edge ids along one shortest path


def metric_complete_instance(raw: MultiGraph) -> MetricInstance:
    """Metric closure of ``raw`` plus one shortest raw path per vertex pair."""
    if not raw.is_compact():
        raise DomainError("metric completion needs a compact vertex set 0..n-1")
    n = raw.number_of_vertices()
    dist = []
    paths: dict[Pair, list[int]] = {}
    for a in range(n):
        d, pred = shortest_path_tree(raw, a)
        if any(x is None for x in d):
            raise DomainError("graph is disconnected")
        dist.append(d)
        for b in range(a + 1, n):
            walk = []
            c = b
            while c != a:
                eid = pred[c]
                walk.append(eid)
                c = raw._eu[eid] ^ raw._ev[eid] ^ c
            paths[(a, b)] = walk[::-1]
    return MetricInstance(dist, paths)


def solution_on_closure(inst: MetricInstance, x: Mapping[Pair, Fraction]) -> HalfIntegralSolution:
    n = len(inst.dist)
    full = {(a, b): inst.dist[a][b] for a in range(n) for b in range(a + 1, n)}
    cost = {pair(*p): full[pair(*p)] for p in x}
    return HalfIntegralSolution(n, dict(x), cost, full)


def expand_to_raw(inst: MetricInstance, pairs: Mapping[Pair, int]) -> Counter:
    """Replace every closure pair by its shortest raw path (multiplicities add up)."""
    out: Counter = Counter()
    for p, m in pairs.items():
        for eid in inst.paths[pair(*p)]:
            out[eid] += m
    return out

