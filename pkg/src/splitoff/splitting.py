"""Splitting off edge pairs at a degree-4 vertex of a 4-regular 4-edge-connected multigraph."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .connectivity import unit_flow
from .errors import DomainError, InvariantViolation
from .multigraph import MultiGraph, Split


class Figure1Case(enum.Enum):
    """Shape of the neighbourhood of ``v`` as seen from the designated edge ``uv``."""

    FOUR_DISTINCT = "four-distinct"
    PARALLEL_WITH_U = "parallel-with-u"
    PARALLEL_WITH_X = "parallel-with-x"
    TWO_DOUBLE_EDGES = "two-double-edges"


@dataclass(frozen=True)
class SplitStep:
    """One complete splitting at ``center``.

    ``designated`` and ``x_edge`` were merged into ``created_ux``; ``y_edge``
    and ``z_edge`` into ``created_yz``, which was given cost
    ``cost(z_edge) - cost(x_edge)``.
    """

    center: int
    designated: int
    x_edge: int
    y_edge: int
    z_edge: int
    created_ux: int
    created_yz: int
    cost_assigned_yz: Fraction


@dataclass(frozen=True)
class AdmissibleSet:
    center: int
    designated: int
    members: tuple[int, ...]


def split_off_pair(g: MultiGraph, sv: int, vt: int, center: int | None = None) -> int:
    """Replace edges ``sv`` and ``vt`` by a new edge ``st`` (cost 0) and return its id.

    The two edges must share exactly one endpoint, or ``center`` must name the
    shared endpoint; a split that would create a loop is rejected.
    """
    if sv == vt:
        raise DomainError("cannot split an edge off with itself")
    a = set(g.endpoints(sv))
    b = set(g.endpoints(vt))
    common = a & b
    if center is None:
        if len(common) != 1:
            raise DomainError(f"edges {sv} and {vt} do not share a unique endpoint")
        (center,) = common
    elif center not in common:
        raise DomainError(f"edges {sv} and {vt} do not meet at vertex {center}")
    s = g.other_end(sv, center)
    t = g.other_end(vt, center)
    if s == t:
        raise DomainError(f"splitting {sv} and {vt} at {center} would create a loop at {s}")
    g.remove_edge(sv)
    g.remove_edge(vt)
    return g.add_edge(s, t, 0, Split(sv, vt))


def _neighbourhood(g: MultiGraph, v: int, e: int) -> tuple[int, list[int]]:
    if g.degree(v) != 4:
        raise DomainError(f"vertex {v} has degree {g.degree(v)}, expected 4")
    if e not in g._adj[v]:
        raise DomainError(f"edge {e} is not incident to vertex {v}")
    u = g.other_end(e, v)
    others = [f for f in g._adj[v] if f != e]
    return u, others


def figure1_case(g: MultiGraph, v: int, e: int) -> Figure1Case:
    u, others = _neighbourhood(g, v, e)
    ends = [g.other_end(f, v) for f in others]
    counts = Counter(ends)
    counts[u] += 1
    if len(counts) == 1:
        raise DomainError("two vertices joined by four edges is the base case, not a split site")
    if max(counts.values()) > 2:
        raise DomainError(f"vertex {v} has three parallel edges to one neighbour; graph is not 4-edge-connected")
    if counts[u] == 2:
        return Figure1Case.TWO_DOUBLE_EDGES if len(counts) == 2 else Figure1Case.PARALLEL_WITH_U
    return Figure1Case.PARALLEL_WITH_X if len(counts) == 3 else Figure1Case.FOUR_DISTINCT


def is_admissible_fast(g: MultiGraph, v: int, e: int, f: int) -> bool:
    """Decide whether splitting off ``(e, f)`` at ``v`` keeps the graph 4-edge-connected.

    With four distinct neighbours ``u, x, y, z`` (``e = uv``, ``f = vx``) the
    trial is the complete splitting ``G - v + ux + yz``; after contracting
    ``ux`` and ``yz`` it is admissible iff four edge-disjoint paths join the
    two contracted vertices. Contracting both pairs and deleting ``v`` is done
    implicitly by running the flow between the vertex sets ``{u, x}`` and
    ``{y, z}`` with ``v`` removed, so ``g`` is never touched. The degenerate
    neighbourhoods have fixed answers.
    """
    u, others = _neighbourhood(g, v, e)
    if f not in others:
        raise DomainError(f"edge {f} is not a candidate partner of {e} at vertex {v}")
    case = figure1_case(g, v, e)
    x = g.other_end(f, v)
    if case is Figure1Case.FOUR_DISTINCT:
        y, z = (g.other_end(h, v) for h in others if h != f)
        return unit_flow(g, (u, x), (y, z), removed=(v,), stop_at=4) >= 4
    if case is Figure1Case.PARALLEL_WITH_X:
        ends = Counter(g.other_end(h, v) for h in others)
        return ends[x] == 2
    # PARALLEL_WITH_U and TWO_DOUBLE_EDGES: anything except the second copy of e
    return x != u


def admissible_set(g: MultiGraph, v: int, e: int) -> AdmissibleSet:
    """Partners of ``e`` at ``v`` that form an admissible pair, in ascending edge id order.

    A 4-regular 4-edge-connected graph always has at least two; fewer means
    the input broke that promise and :class:`InvariantViolation` is raised.
    """
    _, others = _neighbourhood(g, v, e)
    members = tuple(f for f in sorted(others) if is_admissible_fast(g, v, e, f))
    if len(members) < 2:
        raise InvariantViolation(
            f"only {len(members)} admissible partner(s) for edge {e} at vertex {v}; "
            "graph is not 4-regular and 4-edge-connected"
        )
    return AdmissibleSet(v, e, members)


def complete_split_at(
    g: MultiGraph, v: int, e: int, x_choice: int, y_choice: int, *, check: bool = True
) -> SplitStep:
    """Split ``(e, x_choice)`` and then ``(y_choice, z)`` at ``v``, and drop ``v``.

    ``z`` is the fourth edge at ``v``. The new ``yz`` edge costs
    ``cost(z) - cost(x_choice)``, the new ``ux`` edge costs zero. With
    ``check`` the admissibility of ``(e, x_choice)`` is verified first.
    """
    _, others = _neighbourhood(g, v, e)
    if x_choice not in others or y_choice not in others or x_choice == y_choice:
        raise DomainError("x_choice and y_choice must be two distinct partners of e at v")
    (z,) = (h for h in others if h not in (x_choice, y_choice))
    if check and not is_admissible_fast(g, v, e, x_choice):
        raise DomainError(f"edges {e} and {x_choice} are not an admissible pair at vertex {v}")
    yz_cost = g.cost(z) - g.cost(x_choice)
    ux = split_off_pair(g, e, x_choice, center=v)
    yz = split_off_pair(g, y_choice, z, center=v)
    g.set_cost(yz, yz_cost)
    g.remove_vertex(v)
    return SplitStep(v, e, x_choice, y_choice, z, ux, yz, yz_cost)
