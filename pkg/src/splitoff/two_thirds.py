"""2-edge-connected spanning subgraphs of cost at most 2/3 c(G - e).

The input is a 4-regular 4-edge-connected multigraph with arbitrary rational
costs. The algorithm completely splits off one endpoint of the designated edge
at a time, always choosing the split whose lifted answer is cheaper, until two
vertices joined by four parallel edges remain; the base answer is then lifted
back through the recorded splits.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction

from .certificate import SubgraphCertificate
from .connectivity import is_k_edge_connected_excluding, is_two_edge_connected_spanning
from .errors import DomainError, InvariantViolation
from .multigraph import EdgeMultiset, MultiGraph
from .splitting import SplitStep, admissible_set, complete_split_at

SplitTrace = list  # list[SplitStep], in the order the splits were performed

TWO_THIRDS = Fraction(2, 3)


def check_four_regular_four_connected(g: MultiGraph) -> None:
    """Raise :class:`DomainError` naming the first problem found."""
    if g.number_of_vertices() < 2:
        raise DomainError("graph needs at least two vertices")
    for a in g.vertices():
        if g.degree(a) != 4:
            raise DomainError(f"vertex {a} has degree {g.degree(a)}, expected 4")
    if not is_k_edge_connected_excluding(g, 4):
        raise DomainError("graph is not 4-edge-connected")


def choose_labels(g: MultiGraph, v: int, e: int) -> tuple[int, int, int]:
    """Return ``(x_edge, y_edge, z_edge)`` with ``x_edge``, ``y_edge`` admissible and ``cost(x) >= cost(y)``.

    Both are the most expensive admissible partners, ties going to the smaller id.
    """
    members = admissible_set(g, v, e).members
    ranked = sorted(members, key=lambda f: (-g.cost(f), f))
    x, y = ranked[0], ranked[1]
    (z,) = (f for f in g.incident(v) if f not in (e, x, y))
    return x, y, z


def _lift_in_place(h: Counter, step: SplitStep) -> None:
    if h.get(step.created_ux):
        raise InvariantViolation(f"child answer uses the designated edge {step.created_ux}")
    if h.get(step.created_yz):
        del h[step.created_yz]
        h[step.y_edge] += 1
        h[step.z_edge] += 1
    else:
        h[step.y_edge] += 1
        h[step.x_edge] += 1


def lift_step(h: EdgeMultiset, step: SplitStep) -> EdgeMultiset:
    """Undo one complete splitting on an answer.

    If the answer uses ``yz`` it is subdivided back into ``vy`` and ``vz``;
    otherwise the ear ``vy`` + ``vx`` through the restored vertex is added.
    """
    out = Counter(h)
    _lift_in_place(out, step)
    return out


def _base_case(g: MultiGraph, e: int) -> Counter:
    u, _ = g.endpoints(e)
    rest = [f for f in g.incident(u) if f != e]
    if len(rest) != 3:
        raise InvariantViolation("base graph is not four parallel edges")
    rest.sort(key=lambda f: (g.cost(f), f))
    return Counter({rest[0]: 1, rest[1]: 1})


def _cost(costs: list, h: Counter) -> Fraction:
    return sum((costs[i] * m for i, m in h.items()), Fraction(0))


def solve_two_thirds(
    g: MultiGraph, e: int, *, verify_levels: bool = False, check_input: bool = True
) -> SubgraphCertificate:
    """Find a 2-edge-connected spanning subgraph ``H`` of ``g - e`` with ``c(H) <= 2/3 c(g - e)``.

    ``H`` uses every edge record at most once. The input is copied, so ``g``
    is left untouched. With ``verify_levels`` every partially lifted answer is
    checked for 2-edge-connectivity on the graph of its own recursion level,
    together with the cost identity ``c(lifted) = c(child) + c(vx) + c(vy)``;
    this keeps a snapshot per level and is meant for small inputs.
    """
    if not g.has_edge(e):
        raise DomainError(f"unknown designated edge {e!r}")
    if check_input:
        check_four_regular_four_connected(g)

    work = g.copy()
    designated = e
    trace: SplitTrace = []
    snapshots: list[MultiGraph] = []
    while work.number_of_vertices() > 2:
        v = work._ev[designated]
        x, y, z = choose_labels(work, v, designated)
        if verify_levels:
            snapshots.append(work.copy())
        step = complete_split_at(work, v, designated, x, y, check=False)
        trace.append(step)
        designated = step.created_ux

    h = _base_case(work, designated)
    level_checks = True
    costs = work._cost  # dead slots keep their cost, so this prices every level
    if verify_levels:
        level_checks = is_two_edge_connected_spanning(work, h)
    for i in range(len(trace) - 1, -1, -1):
        step = trace[i]
        before = _cost(costs, h) if verify_levels else None
        _lift_in_place(h, step)
        if verify_levels:
            level = snapshots[i]
            level_checks &= is_two_edge_connected_spanning(level, h)
            level_checks &= _cost(costs, h) == before + costs[step.x_edge] + costs[step.y_edge]
    if verify_levels and not level_checks:
        raise InvariantViolation("a lifted answer lost 2-edge-connectivity or the cost identity")

    cost = _cost(costs, h)
    bound = TWO_THIRDS * (g.total_cost() - g.cost(e))
    checks = {
        "avoids_designated": e not in h,
        "edges_exist": all(g.has_edge(i) for i in h),
        "multiplicity_at_most_one": all(m == 1 for m in h.values()),
        "two_edge_connected_spanning": is_two_edge_connected_spanning(g, h),
    }
    if verify_levels:
        checks["lift_levels"] = level_checks
    return SubgraphCertificate(
        algorithm="two-thirds",
        edges=h,
        cost=cost,
        bound=bound,
        checks=checks,
        trace_length=len(trace),
        details={"designated": e, "trace": trace},
    )
