"""Independent recomputations of the two coefficient sequences, plus
standalone identity checkers.

Each alternative formula here recomputes A_k or B_k through a different
classical route (binomial cross-relations, Stirling numbers of both kinds,
Eulerian numbers, exponential generating functions, and one conjectured
Bernoulli recursion). None of them shares machinery with the binomial
recursion in :mod:`brousseau.core`, so agreement over a range is a genuine
cross-check and the first index of disagreement pinpoints a divergence.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial, lcm
from typing import Iterator

from .core import CoeffTable, brute_sum
from .errors import DomainError, IntegralityError
from .exact_arith import IntPoly, RatSeries, exp_series
from .report import IdentityReport, run_check
from .sequences import (
    bernoulli_plus,
    binomial,
    eulerian,
    fibonacci_values,
    stirling1_signed,
    stirling2,
)

__all__ = [
    "ALT_METHODS",
    "alt_value",
    "method_min_k",
    "cross_method_check",
    "egf_coefficients",
    "egf_check",
    "zeitlin_firstkind_check",
    "zeitlin_firstkind_sweep",
    "shannon_ollerton_cases",
    "shannon_ollerton_check",
    "erbacher_fuchs_check",
    "IdentityReport",
]

# Supported (method, sequence) pairs and the smallest k each formula covers.
# The k = 0 floor of 1 marks formulas whose empty sum at k = 0 would disagree
# with the A_0 = B_0 = 1 table convention.
_MIN_K = {
    "ledin": 0,
    "dresden_inverse": 1,
    "hoggatt": 1,
    "zeitlin_stirling2": 0,
    "kmt_eulerian": 1,
    "adegoke": 1,
}
_SUPPORTED = {
    ("ledin", "A"),
    ("ledin", "B"),
    ("dresden_inverse", "A"),
    ("hoggatt", "A"),
    ("hoggatt", "B"),
    ("zeitlin_stirling2", "A"),
    ("zeitlin_stirling2", "B"),
    ("kmt_eulerian", "A"),
    ("kmt_eulerian", "B"),
    ("adegoke", "B"),
}
ALT_METHODS = tuple(sorted(_MIN_K))


def method_min_k(method: str) -> int:
    if method not in _MIN_K:
        raise DomainError(f"unknown method {method!r}")
    return _MIN_K[method]


def alt_value(method: str, which: str, k: int, table: CoeffTable) -> int:
    """Recompute A_k or B_k (``which``) by the named alternative formula.

    Formulas that consume earlier sequence values read them from ``table``,
    so a mismatch against the table at index k cannot be blamed on indices
    below k.
    """
    if (method, which) not in _SUPPORTED:
        raise DomainError(f"unsupported combination {method!r} / {which!r}")
    if k < _MIN_K[method]:
        raise DomainError(f"{method} needs k >= {_MIN_K[method]}")
    if k > table.k_max:
        raise DomainError(f"table holds k <= {table.k_max}")
    if method == "ledin":
        return _ledin(which, k, table)
    if method == "dresden_inverse":
        return sum(binomial(k, j) * table.B[j] for j in range(k))
    if method == "hoggatt":
        return _hoggatt(which, k, table)
    if method == "zeitlin_stirling2":
        return _zeitlin_stirling2(which, k)
    if method == "kmt_eulerian":
        return _kmt_eulerian(which, k)
    return _adegoke(k, table)


def _ledin(which: str, k: int, table: CoeffTable) -> int:
    if which == "A":
        # (-1)^k A_k = sum_j C(k, j) B_j (-1)^j, solved for A_k.
        total = sum(binomial(k, j) * table.B[j] * (-1) ** j for j in range(k + 1))
        return (-1) ** k * total
    return sum(binomial(k, j) * table.A[j] for j in range(k + 1))


def _hoggatt(which: str, k: int, table: CoeffTable) -> int:
    seq = table.A if which == "A" else table.B
    total = sum((2 ** (k - j) - 1) * binomial(k, j) * seq[j] for j in range(k))
    return total if which == "A" else total + 1


def _zeitlin_stirling2(which: str, k: int) -> int:
    fib = fibonacci_values(k + 2)
    offset = 1 if which == "A" else 2
    return sum(factorial(j) * fib[j + offset] * stirling2(k, j) for j in range(k + 1))


def _kmt_eulerian(which: str, k: int) -> int:
    fib = fibonacci_values(2 * k + 1)
    offset = 1 if which == "A" else 2
    return sum(eulerian(k, j) * fib[k + j + offset] for j in range(k))


def _adegoke(k: int, table: CoeffTable) -> int:
    acc = sum(
        binomial(k, j) * (2 ** (k - j) + 1) * (-1) ** j * table.B[j] for j in range(k)
    )
    return (-1) ** k * (1 - acc)


def cross_method_check(method: str, which: str, k_max: int, table: CoeffTable) -> IdentityReport:
    """Alternative formula against the recursion table for every supported k."""
    start = _MIN_K[method]
    seq = table.A if which == "A" else table.B
    cases = ((k, alt_value(method, which, k, table), seq[k]) for k in range(start, k_max + 1))
    return run_check(f"{method}[{which}]", f"k={start}..{k_max}", cases)


def egf_coefficients(which: str, k_max: int) -> list[int]:
    """k! times the k-th Taylor coefficient of the sequence's exponential
    generating function, for k = 0 .. k_max, as exact integers.

    The B sequence uses e^x / (e^x - e^(2x) + 1); the A sequence uses
    1 / (e^x - e^(2x) + 1) - 1, whose constant term is 0 rather than the
    table convention A_0 = 1, so entry 0 of the A result is set to 1 here
    and the genuine series comparison starts at k = 1.
    """
    if which not in ("A", "B"):
        raise DomainError(f"unknown sequence {which!r}")
    if k_max < 0:
        raise DomainError("k_max must be >= 0")
    base = exp_series(1, k_max) - exp_series(2, k_max) + RatSeries.one(k_max)
    inverse = base.inverse()
    if which == "B":
        series = exp_series(1, k_max) * inverse
    else:
        series = inverse - RatSeries.one(k_max)
    out = []
    for k, c in enumerate(series.coeffs):
        value = c * factorial(k)
        if value.denominator != 1:
            raise IntegralityError(f"coefficient {k} is not integral: {value}")
        out.append(int(value))
    if which == "A":
        out[0] = 1
    return out


def egf_check(k_max: int, table: CoeffTable) -> IdentityReport:
    """Generating-function coefficients against the recursion table."""
    a_vals = egf_coefficients("A", k_max)
    b_vals = egf_coefficients("B", k_max)

    def cases():
        for k in range(k_max + 1):
            yield ("A", k), a_vals[k], table.A[k]
        for k in range(k_max + 1):
            yield ("B", k), b_vals[k], table.B[k]

    return run_check("egf", f"k=0..{k_max}", cases())


def _zeitlin1_sides(n: int, table: CoeffTable) -> tuple[tuple[int, int], tuple[int, int]]:
    fib = fibonacci_values(n + 2)
    lhs_a = factorial(n) * fib[n + 1]
    lhs_b = factorial(n) * fib[n + 2]
    rhs_a = sum(stirling1_signed(n, k) * table.A[k] for k in range(1, n + 1))
    rhs_b = sum(stirling1_signed(n, k) * table.B[k] for k in range(1, n + 1))
    return (lhs_a, rhs_a), (lhs_b, rhs_b)


def zeitlin_firstkind_check(n: int, table: CoeffTable) -> tuple[bool, bool]:
    """Whether n! F_{n+1} = sum_k s(n,k) A_k and n! F_{n+2} = sum_k s(n,k) B_k.

    Uses signed Stirling numbers of the first kind; the unsigned variant
    already fails at n = 2 (it gives 6 where 2! F_3 = 4).
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    if table.k_max < n:
        raise DomainError(f"table holds k <= {table.k_max}, need k = {n}")
    (lhs_a, rhs_a), (lhs_b, rhs_b) = _zeitlin1_sides(n, table)
    return lhs_a == rhs_a, lhs_b == rhs_b


def zeitlin_firstkind_sweep(n_max: int, table: CoeffTable) -> IdentityReport:
    def cases():
        for n in range(1, n_max + 1):
            (lhs_a, rhs_a), (lhs_b, rhs_b) = _zeitlin1_sides(n, table)
            yield ("A", n), lhs_a, rhs_a
            yield ("B", n), lhs_b, rhs_b

    return run_check("zeitlin1", f"n=1..{n_max}", cases())


def shannon_ollerton_cases(k_max: int, table: CoeffTable) -> Iterator[tuple[int, Fraction, Fraction]]:
    """Both sides of the conjectured Bernoulli recursion for B_k, k = 2 .. k_max.

    B_k = k (5/2 B_{k-1} + (-1)^(k-1))
          - sum_{j=1..k-2} (-1)^(k+j) B_j sum_{r=j..k} C(k,r) C(r,j) Bern_{k-r}

    with Bernoulli numbers in the plus convention. The double sum is taken
    literally; denominators are cleared once (2 times the lcm of the
    Bernoulli denominators) so the inner arithmetic stays in plain integers,
    and each yielded pair is reduced back to exact rationals.
    """
    if k_max < 2:
        raise DomainError("k_max must be >= 2")
    if table.k_max < k_max:
        raise DomainError(f"table holds k <= {table.k_max}")
    bern = [bernoulli_plus(m) for m in range(k_max + 1)]
    den = 1
    for value in bern:
        den = lcm(den, value.denominator)
    scaled_bern = [int(value * den) for value in bern]
    b_seq = table.B
    for k in range(2, k_max + 1):
        row = [comb(k, r) for r in range(k + 1)]
        lhs = 2 * den * b_seq[k]
        rhs = k * (5 * den * b_seq[k - 1] + 2 * den * (-1) ** (k - 1))
        for j in range(1, k - 1):
            inner = 0
            for r in range(j, k + 1):
                inner += row[r] * comb(r, j) * scaled_bern[k - r]
            rhs -= (-1) ** (k + j) * b_seq[j] * 2 * inner
        yield k, Fraction(lhs, 2 * den), Fraction(rhs, 2 * den)


def shannon_ollerton_check(k_max: int, table: CoeffTable) -> IdentityReport:
    """Exact verification of the conjectured Bernoulli recursion for B_k."""
    return run_check(
        "shannon-ollerton", f"k=2..{k_max}", shannon_ollerton_cases(k_max, table)
    )


def erbacher_fuchs_check(n_max: int) -> IdentityReport:
    """Classical cubic-sum solution, written on F_{n+2} and F_{n+3}, against
    the brute-force oracle:

    sum_{i=0..n} i^3 F_i = (n^3 + 6n - 12) F_{n+2} + (-3n^2 + 9n - 19) F_{n+3} + 50.
    """
    if n_max < 0:
        raise DomainError("n_max must be >= 0")
    fib = fibonacci_values(n_max + 3)
    cubic = IntPoly((-12, 6, 0, 1))
    quadratic = IntPoly((-19, 9, -3))

    def cases():
        for n in range(n_max + 1):
            closed = cubic(n) * fib[n + 2] + quadratic(n) * fib[n + 3] + 50
            yield n, closed, brute_sum(3, n)

    return run_check("erbacher-fuchs", f"n=0..{n_max}", cases())
