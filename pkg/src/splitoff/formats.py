"""Text formats for graphs and half-integral points, and JSON certificates.

Graph file::

    multigraph <n> <m>
    <u> <v> <cost>        # m lines, repeated lines are parallel edges

Solution file::

    subtour <n>
    <u> <v> <x> [<cost>]  # cost required when x > 0
    costs                 # optional section: costs of further pairs
    <u> <v> <cost>

Costs are integers, decimals or ``p/q`` fractions and are read exactly.
``#`` starts a comment.
"""

from __future__ import annotations

import hashlib
from fractions import Fraction
from typing import Iterator

from .certificate import SubgraphCertificate
from .convex_oracle import ConvexCombination
from .errors import ParseError
from .half_integral import HalfIntegralSolution, pair
from .multigraph import MultiGraph, render_rational


def input_hash(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode()).hexdigest()


def _tokens(text: str) -> Iterator[tuple[int, list[tuple[int, str]]]]:
    # Yields (line number, [(column, token), ...]) for non-empty lines.
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = []
        col = 0
        for tok in line.split():
            col = line.index(tok, col)
            toks.append((col + 1, tok))
            col += len(tok)
        if toks:
            yield lineno, toks


def _int(tok: tuple[int, str], lineno: int, what: str) -> int:
    col, text = tok
    try:
        value = int(text)
    except ValueError:
        raise ParseError(f"expected integer {what}, got {text!r}", lineno, col) from None
    if value < 0:
        raise ParseError(f"{what} must be non-negative", lineno, col)
    return value


def _rational(tok: tuple[int, str], lineno: int, what: str) -> Fraction:
    col, text = tok
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"expected rational {what}, got {text!r}", lineno, col) from None


def _vertex(tok, lineno: int, n: int) -> int:
    a = _int(tok, lineno, "vertex")
    if a >= n:
        raise ParseError(f"vertex {a} out of range 0..{n - 1}", lineno, tok[0])
    return a


def parse_multigraph(text: str) -> MultiGraph:
    lines = list(_tokens(text))
    if not lines:
        raise ParseError("empty file", 1)
    lineno, head = lines[0]
    if len(head) != 3 or head[0][1] != "multigraph":
        raise ParseError("expected header 'multigraph <n> <m>'", lineno, head[0][0])
    n = _int(head[1], lineno, "vertex count")
    m = _int(head[2], lineno, "edge count")
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else lineno + 1)
        raise ParseError(f"header announces {m} edges, file has {len(body)}", where)
    g = MultiGraph(n)
    for lineno, toks in body:
        if len(toks) != 3:
            raise ParseError("expected '<u> <v> <cost>'", lineno, toks[0][0])
        u = _vertex(toks[0], lineno, n)
        v = _vertex(toks[1], lineno, n)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno, toks[1][0])
        g.add_edge(u, v, _rational(toks[2], lineno, "cost"))
    return g


def format_multigraph(g: MultiGraph) -> str:
    """Canonical text form; edge lines follow edge id order."""
    edges = g.edges()
    out = [f"multigraph {g.number_of_vertices()} {len(edges)}"]
    out += [f"{rec.u} {rec.v} {render_rational(rec.cost)}" for rec in edges]
    return "\n".join(out) + "\n"


def parse_solution(text: str) -> HalfIntegralSolution:
    lines = list(_tokens(text))
    if not lines:
        raise ParseError("empty file", 1)
    lineno, head = lines[0]
    if len(head) != 2 or head[0][1] != "subtour":
        raise ParseError("expected header 'subtour <n>'", lineno, head[0][0])
    n = _int(head[1], lineno, "vertex count")
    x: dict = {}
    cost: dict = {}
    full: dict = {}
    in_costs = False
    for lineno, toks in lines[1:]:
        if len(toks) == 1 and toks[0][1] == "costs":
            in_costs = True
            continue
        if in_costs:
            if len(toks) != 3:
                raise ParseError("expected '<u> <v> <cost>' in costs section", lineno, toks[0][0])
            p = pair(_vertex(toks[0], lineno, n), _vertex(toks[1], lineno, n))
            if p[0] == p[1]:
                raise ParseError("pair of identical vertices", lineno, toks[1][0])
            full[p] = _rational(toks[2], lineno, "cost")
            continue
        if len(toks) not in (3, 4):
            raise ParseError("expected '<u> <v> <x> [<cost>]'", lineno, toks[0][0])
        p = pair(_vertex(toks[0], lineno, n), _vertex(toks[1], lineno, n))
        if p[0] == p[1]:
            raise ParseError("pair of identical vertices", lineno, toks[1][0])
        if p in x:
            raise ParseError(f"pair {p} listed twice", lineno, toks[0][0])
        x[p] = _rational(toks[2], lineno, "x value")
        if len(toks) == 4:
            cost[p] = _rational(toks[3], lineno, "cost")
        elif x[p] != 0:
            raise ParseError(f"pair {p} has x > 0 but no cost", lineno, toks[2][0])
    return HalfIntegralSolution(n, x, cost, full)


def format_solution(s: HalfIntegralSolution) -> str:
    out = [f"subtour {s.n}"]
    for p in sorted(s.x):
        c = f" {render_rational(s.cost[p])}" if p in s.cost else ""
        out.append(f"{p[0]} {p[1]} {render_rational(s.x[p])}{c}")
    if s.full_cost:
        out.append("costs")
        out += [f"{a} {b} {render_rational(c)}" for (a, b), c in sorted(s.full_cost.items())]
    return "\n".join(out) + "\n"


def _jsonable(value):
    if isinstance(value, Fraction):
        return render_rational(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def certificate_to_json(cert: SubgraphCertificate, graph: MultiGraph | None, source_hash: str) -> dict:
    """JSON form of a certificate.

    Edge multisets keyed by edge id are listed with their endpoints looked up
    in ``graph``; multisets keyed by vertex pairs are listed as pairs.
    """
    edges = []
    for key, m in sorted(cert.edges.items()):
        if isinstance(key, tuple):
            edges.append({"u": key[0], "v": key[1], "multiplicity": m})
        else:
            u, v = graph.endpoints(key)
            edges.append({"id": key, "u": u, "v": v, "multiplicity": m})
    out = {
        "algorithm": cert.algorithm,
        "input_hash": source_hash,
        "edges": edges,
        "cost": render_rational(cert.cost),
        "bound": render_rational(cert.bound),
        "bound_holds": cert.bound_holds,
        "checks": dict(cert.checks),
    }
    if cert.trace_length is not None:
        out["trace_length"] = cert.trace_length
    for key, value in cert.details.items():
        if key != "trace":
            out[key] = _jsonable(value)
    return out


def decomposition_to_json(comb: ConvexCombination, e: int, checks: dict, source_hash: str) -> dict:
    return {
        "algorithm": "convex-decomposition",
        "input_hash": source_hash,
        "designated": e,
        "items": [
            {"weight": render_rational(w), "edges": sorted(h.elements())} for w, h in comb.items
        ],
        "checks": checks,
        "identity_holds": all(checks.values()),
    }
