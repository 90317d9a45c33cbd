"""Size fences for the exhaustive oracles.

Defaults can be overridden with the ``SPLITOFF_LIMITS`` environment variable,
e.g. ``SPLITOFF_LIMITS="convex=12,brute=20"``.
"""

from __future__ import annotations

import os

from .errors import DomainError

DEFAULT_LIMITS = {
    "convex": 10,  # vertices, convex decomposition
    "brute": 24,  # edges, 2EC subgraph enumeration
    "factor": 16,  # vertices, 2-factor search in cubic graphs
    "matching": 18,  # odd-degree vertices, exact matching DP
}


def parse_limits(text: str) -> dict[str, int]:
    out = {}
    for chunk in filter(None, (c.strip() for c in text.split(","))):
        key, sep, value = chunk.partition("=")
        key = key.strip()
        if not sep or key not in DEFAULT_LIMITS:
            raise DomainError(f"bad SPLITOFF_LIMITS entry {chunk!r}")
        try:
            out[key] = int(value)
        except ValueError:
            raise DomainError(f"bad SPLITOFF_LIMITS value {chunk!r}") from None
    return out


def get_limit(name: str) -> int:
    limits = dict(DEFAULT_LIMITS)
    limits.update(parse_limits(os.environ.get("SPLITOFF_LIMITS", "")))
    return limits[name]
