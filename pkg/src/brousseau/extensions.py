"""Cubic-weight identities beyond Fibonacci, and a solver that derives the
weight polynomial for an arbitrary two-term recurrence.

For any recurrence R_0 = 0, R_1 = 1, R_n = a R_{n-1} + b R_{n-2} and power p,
``derive_summand`` looks for rational c_0 .. c_p with

    R_n - n^p = sum_{i=1..n} (c_0 + c_1 i + ... + c_p i^p) R_{n-i}

by solving the exact linear system read off rows n = 2 .. p+2 (the n = 1 row
is identically 0 = 0 and carries no information), then verifying the
candidate on every n up to a caller-chosen bound. Nothing here presumes such
a polynomial exists: a rank-deficient system and a failed verification are
reported through distinct errors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, SingularSystemError, SummandVerificationError
from .exact_arith import IntPoly
from .report import IdentityReport, run_check
from .sequences import PELL, RecurrenceSpec, rec_values

__all__ = [
    "DerivedSummand",
    "cubic_summand",
    "pell_cubic_check",
    "general_cubic_check",
    "general_cubic_grid_check",
    "derive_summand",
    "solve_exact",
]


def cubic_summand(spec: RecurrenceSpec) -> IntPoly:
    """Degree-3 weight (a+b-1) i^3 - 3(b+1) i^2 + 3(b-1) i - (b+1)."""
    a, b = spec.a, spec.b
    return IntPoly((-(b + 1), 3 * (b - 1), -3 * (b + 1), a + b - 1))


def _cubic_sweep(identity_id: str, spec: RecurrenceSpec, n_max: int) -> IdentityReport:
    if n_max < 0:
        raise DomainError("n_max must be >= 0")
    weight = cubic_summand(spec)
    values = rec_values(spec, n_max)
    weights = [weight(i) for i in range(n_max + 1)]

    def cases():
        for n in range(n_max + 1):
            lhs = values[n] - n**3
            rhs = sum(weights[i] * values[n - i] for i in range(1, n + 1))
            yield n, lhs, rhs

    return run_check(identity_id, f"n=0..{n_max}", cases())


def pell_cubic_check(n_max: int) -> IdentityReport:
    """P_n - n^3 = 2 sum_{i=1..n} (i^3 - 3 i^2 - 1) P_{n-i} on the Pell numbers."""
    return _cubic_sweep("pell-cubic", PELL, n_max)


def general_cubic_check(spec: RecurrenceSpec, n_max: int) -> IdentityReport:
    """The cubic weight identity for one arbitrary recurrence."""
    return _cubic_sweep(f"general-cubic[a={spec.a},b={spec.b}]", spec, n_max)


def general_cubic_grid_check(a_max: int, b_max: int, n_max: int) -> IdentityReport:
    """The cubic weight identity across the whole grid 1 <= a <= a_max, 1 <= b <= b_max."""

    def cases():
        for a in range(1, a_max + 1):
            for b in range(1, b_max + 1):
                report = general_cubic_check(RecurrenceSpec(a, b), n_max)
                if report.ok:
                    yield (a, b), True, True
                else:
                    n, lhs, rhs = report.first_failure
                    yield (a, b, n), lhs, rhs

    return run_check(
        "general-cubic", f"a=1..{a_max}, b=1..{b_max}, n=0..{n_max}", cases()
    )


@dataclass(frozen=True)
class DerivedSummand:
    """A solved weight polynomial together with how far it was verified."""

    spec: RecurrenceSpec
    power: int
    coeffs: tuple[Fraction, ...]
    verified_to: int

    def weight(self, i: int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * i + c
        return acc


def solve_exact(matrix: list[list[int]], rhs: list[int]) -> list[Fraction]:
    """Solve a square integer system exactly.

    Forward elimination is fraction-free (each 2x2 cross product divides
    exactly by the previous pivot), back substitution runs over rationals.
    Raises SingularSystemError when some pivot column vanishes, which covers
    both inconsistent and underdetermined systems.
    """
    size = len(matrix)
    if any(len(row) != size for row in matrix) or len(rhs) != size:
        raise ValueError("system is not square")
    m = [[int(v) for v in row] + [int(r)] for row, r in zip(matrix, rhs)]
    prev_pivot = 1
    for col in range(size):
        pivot_row = next((r for r in range(col, size) if m[r][col] != 0), None)
        if pivot_row is None:
            raise SingularSystemError(f"no pivot available in column {col}")
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
        for r in range(col + 1, size):
            for c in range(col + 1, size + 1):
                m[r][c] = (m[col][col] * m[r][c] - m[r][col] * m[col][c]) // prev_pivot
            m[r][col] = 0
        prev_pivot = m[col][col]
    solution = [Fraction(0)] * size
    for r in range(size - 1, -1, -1):
        acc = Fraction(m[r][size])
        for c in range(r + 1, size):
            acc -= m[r][c] * solution[c]
        solution[r] = acc / m[r][r]
    return solution


def derive_summand(spec: RecurrenceSpec, p: int, verify_to: int) -> DerivedSummand:
    """Derive the degree-p weight polynomial for ``spec`` and verify it.

    Raises SingularSystemError when the sampled rows do not pin down a unique
    polynomial, and SummandVerificationError when the solved candidate breaks
    at some n <= verify_to. Both outcomes are reported, never masked.
    """
    if p < 1:
        raise DomainError("p must be >= 1")
    if verify_to < p + 3:
        raise DomainError("verify_to must be at least p + 3 to probe beyond the sample")
    values = rec_values(spec, verify_to)
    matrix = []
    rhs = []
    for n in range(2, p + 3):
        matrix.append(
            [sum(i**j * values[n - i] for i in range(1, n + 1)) for j in range(p + 1)]
        )
        rhs.append(values[n] - n**p)
    coeffs = tuple(solve_exact(matrix, rhs))
    weights = [Fraction(0)]
    for i in range(1, verify_to + 1):
        acc = Fraction(0)
        for c in reversed(coeffs):
            acc = acc * i + c
        weights.append(acc)
    for n in range(verify_to + 1):
        lhs = values[n] - (n**p)
        total = sum((weights[i] * values[n - i] for i in range(1, n + 1)), Fraction(0))
        if lhs != total:
            raise SummandVerificationError(n, lhs, total)
    return DerivedSummand(spec, p, coeffs, verify_to)
