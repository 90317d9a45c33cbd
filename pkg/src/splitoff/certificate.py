"""Machine-checkable answers: an edge multiset, its exact cost and the bound it claims."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


@dataclass
class SubgraphCertificate:
    algorithm: str
    edges: Counter  # edge id (or vertex pair) -> multiplicity
    cost: Fraction
    bound: Fraction
    checks: dict[str, bool] = field(default_factory=dict)
    trace_length: int | None = None
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def bound_holds(self) -> bool:
        return self.cost <= self.bound

    @property
    def ok(self) -> bool:
        return self.bound_holds and all(self.checks.values())
