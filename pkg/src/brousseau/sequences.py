"""Integer and rational sequence generators.

Covers two-term linear recurrences (Fibonacci, Pell, and arbitrary integer
pairs), guarded binomials, both Stirling triangles, the Eulerian triangle,
and Bernoulli numbers in the plus convention. Triangle generators memoize
whole rows as immutable tuples, so a sweep over many entries costs one pass
per row rather than one per lookup.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import DomainError

__all__ = [
    "RecurrenceSpec",
    "FIBONACCI",
    "PELL",
    "rec_value",
    "rec_values",
    "fibonacci",
    "fibonacci_values",
    "binomial",
    "stirling2",
    "stirling1_signed",
    "eulerian",
    "bernoulli_plus",
]


@dataclass(frozen=True)
class RecurrenceSpec:
    """Two-term linear recurrence R_0 = 0, R_1 = 1, R_n = a R_{n-1} + b R_{n-2}."""

    a: int
    b: int


FIBONACCI = RecurrenceSpec(1, 1)
PELL = RecurrenceSpec(2, 1)


def rec_values(spec: RecurrenceSpec, n_max: int) -> list[int]:
    """All terms R_0 .. R_{n_max} of the recurrence."""
    if n_max < 0:
        raise DomainError("n_max must be >= 0")
    out = [0, 1]
    for _ in range(n_max - 1):
        out.append(spec.a * out[-1] + spec.b * out[-2])
    return out[: n_max + 1]


def rec_value(spec: RecurrenceSpec, n: int) -> int:
    if n < 0:
        raise DomainError("n must be >= 0")
    prev, cur = 0, 1
    for _ in range(n):
        prev, cur = cur, spec.a * cur + spec.b * prev
    return prev


def fibonacci(n: int) -> int:
    return rec_value(FIBONACCI, n)


def fibonacci_values(n_max: int) -> list[int]:
    return rec_values(FIBONACCI, n_max)


def binomial(n: int, k: int) -> int:
    """C(n, k), with 0 for k < 0 or k > n."""
    if n < 0:
        raise DomainError("n must be >= 0")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def _stirling2_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _stirling2_row(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        above = prev[k] if k < n else 0
        row[k] = k * above + prev[k - 1]
    return tuple(row)


def stirling2(n: int, k: int) -> int:
    """Stirling set number: partitions of an n-set into k nonempty blocks."""
    if n < 0 or k < 0:
        raise DomainError("indices must be >= 0")
    if k > n:
        return 0
    return _stirling2_row(n)[k]


@lru_cache(maxsize=None)
def _stirling1_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _stirling1_row(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        above = prev[k] if k < n else 0
        row[k] = prev[k - 1] - (n - 1) * above
    return tuple(row)


def stirling1_signed(n: int, k: int) -> int:
    """Signed Stirling cycle number s(n, k); the matrix inverse of stirling2."""
    if n < 0 or k < 0:
        raise DomainError("indices must be >= 0")
    if k > n:
        return 0
    return _stirling1_row(n)[k]


@lru_cache(maxsize=None)
def _eulerian_row(n: int) -> tuple[int, ...]:
    """Row n of the Eulerian triangle, entries k = 0 .. n-1 (row 0 is (1,))."""
    if n == 0:
        return (1,)
    prev = _eulerian_row(n - 1)
    row = [0] * n
    for k in range(n):
        left = prev[k] if k < len(prev) else 0
        diag = prev[k - 1] if 0 <= k - 1 < len(prev) else 0
        row[k] = (k + 1) * left + (n - k) * diag
    return tuple(row)


def eulerian(n: int, k: int) -> int:
    """Eulerian number: permutations of n elements with exactly k ascents.

    Zero outside 0 <= k <= n-1, except for the conventional value 1 at
    n = k = 0.
    """
    if n < 0:
        raise DomainError("n must be >= 0")
    if n == 0:
        return 1 if k == 0 else 0
    if k < 0 or k > n - 1:
        return 0
    return _eulerian_row(n)[k]


# Bernoulli numbers, plus convention (index 1 is +1/2). They satisfy
# sum_{k=0..n} C(n+1, k) B_k = n + 1, which gives each value from the
# earlier ones. The cache only ever grows and is swapped in wholesale, so
# concurrent readers always see a consistent prefix.
_BERNOULLI: list[Fraction] = [Fraction(1)]


def bernoulli_plus(n: int) -> Fraction:
    """Bernoulli number B_n in the plus convention (B_1 = +1/2)."""
    if n < 0:
        raise DomainError("n must be >= 0")
    cache = _BERNOULLI
    if n < len(cache):
        return cache[n]
    values = list(cache)
    for m in range(len(values), n + 1):
        acc = Fraction(0)
        for k in range(m):
            acc += comb(m + 1, k) * values[k]
        values.append((m + 1 - acc) / (m + 1))
    globals()["_BERNOULLI"] = values
    return values[n]
