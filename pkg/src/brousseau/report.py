"""Uniform pass/fail reporting for identity sweeps.

Every verification routine walks its index range in a fixed order and stops
at the first mismatch, so failure witnesses are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of checking one identity over an explicit index range.

    ``first_failure`` is a ``(index, lhs, rhs)`` triple and is present exactly
    when ``status == "failed"``.
    """

    identity_id: str
    range_checked: str
    status: str
    first_failure: tuple | None = None

    def __post_init__(self):
        if self.status not in ("verified", "failed"):
            raise ValueError(f"bad status {self.status!r}")
        if (self.status == "failed") != (self.first_failure is not None):
            raise ValueError("failed reports carry a witness, verified ones must not")

    @property
    def ok(self) -> bool:
        return self.status == "verified"


def run_check(identity_id: str, range_checked: str, cases: Iterable[tuple]) -> IdentityReport:
    """Compare ``(index, lhs, rhs)`` cases in order; report the first mismatch, if any."""
    for index, lhs, rhs in cases:
        if lhs != rhs:
            return IdentityReport(identity_id, range_checked, "failed", (index, lhs, rhs))
    return IdentityReport(identity_id, range_checked, "verified")
