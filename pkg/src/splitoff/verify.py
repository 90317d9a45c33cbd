"""Independent re-checking of JSON certificates against their input files."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction

from .connectivity import is_two_edge_connected_multiset, is_two_edge_connected_spanning
from .convex_oracle import ConvexCombination, check_convex_combination
from .errors import DomainError
from .formats import input_hash, parse_multigraph, parse_solution
from .half_integral import pair

_PER_EDGE_LIMIT = {"two-thirds": 1, "cubic-seven-eighths": 2}


def _claimed(doc: dict, key: str) -> Fraction:
    try:
        return Fraction(doc[key])
    except (KeyError, ValueError, TypeError):
        raise DomainError(f"certificate field {key!r} missing or not a rational") from None


def _verify_id_certificate(doc: dict, text: str) -> dict[str, bool]:
    g = parse_multigraph(text)
    algo = doc["algorithm"]
    h: Counter = Counter()
    endpoints_ok = True
    for item in doc.get("edges", []):
        eid = item.get("id")
        if not isinstance(eid, int) or not g.has_edge(eid):
            endpoints_ok = False
            continue
        endpoints_ok &= pair(*g.endpoints(eid)) == pair(item["u"], item["v"])
        h[eid] += item["multiplicity"]
    cost = sum((g.cost(i) * m for i, m in h.items()), Fraction(0))
    total = g.total_cost()
    checks = {
        "edges_match_input": endpoints_ok,
        "multiplicity": all(0 < m <= _PER_EDGE_LIMIT[algo] for m in h.values()),
        "two_edge_connected_spanning": is_two_edge_connected_spanning(g, h),
        "cost_matches": cost == _claimed(doc, "cost"),
    }
    if algo == "two-thirds":
        e = doc.get("designated")
        if not isinstance(e, int) or not g.has_edge(e):
            raise DomainError("certificate names no valid designated edge")
        checks["avoids_designated"] = e not in h
        bound = Fraction(2, 3) * (total - g.cost(e))
    else:
        bound = Fraction(7, 8) * total
    checks["bound_matches"] = bound == _claimed(doc, "bound")
    checks["bound_holds"] = cost <= bound and doc.get("bound_holds") is True
    return checks


def _verify_half_integral(doc: dict, text: str) -> dict[str, bool]:
    s = parse_solution(text)
    pairs: Counter = Counter()
    for item in doc.get("edges", []):
        pairs[pair(item["u"], item["v"])] += item["multiplicity"]
    in_range = all(0 <= a < b < s.n for a, b in pairs)
    try:
        cost = sum((s.cost_of(p) * m for p, m in pairs.items()), Fraction(0))
        priced = True
    except DomainError:
        cost, priced = None, False
    bound = Fraction(4, 3) * s.objective()
    return {
        "edges_match_input": in_range and priced,
        "multiplicity": all(0 < m <= 2 for m in pairs.values()),
        "two_edge_connected_spanning": in_range and is_two_edge_connected_multiset(range(s.n), pairs),
        "cost_matches": priced and cost == _claimed(doc, "cost"),
        "bound_matches": bound == _claimed(doc, "bound"),
        "bound_holds": priced and cost <= bound and doc.get("bound_holds") is True,
    }


def _verify_convex(doc: dict, text: str) -> dict[str, bool]:
    g = parse_multigraph(text)
    items = []
    for item in doc.get("items", []):
        items.append((Fraction(item["weight"]), Counter(item["edges"])))
    e = doc.get("designated")
    if not isinstance(e, int) or not g.has_edge(e):
        raise DomainError("certificate names no valid designated edge")
    checks = check_convex_combination(g, e, ConvexCombination(items))
    checks["identity_flag_consistent"] = doc.get("identity_holds") is True
    return checks


def verify_certificate(doc: dict, text: str) -> dict[str, bool]:
    """Re-derive every claim of ``doc`` from the input file contents ``text``.

    Returns named booleans; the certificate is valid iff all are true.
    """
    algo = doc.get("algorithm")
    if algo in _PER_EDGE_LIMIT:
        checks = _verify_id_certificate(doc, text)
    elif algo == "half-integral":
        checks = _verify_half_integral(doc, text)
    elif algo == "convex-decomposition":
        checks = _verify_convex(doc, text)
    else:
        raise DomainError(f"unknown certificate algorithm {algo!r}")
    checks["input_hash_matches"] = doc.get("input_hash") == input_hash(text)
    return checks
