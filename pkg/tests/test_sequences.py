"""Sequence and triangle generators."""

from fractions import Fraction

import pytest

from brousseau.errors import DomainError
from brousseau.sequences import (
    FIBONACCI,
    PELL,
    RecurrenceSpec,
    bernoulli_plus,
    binomial,
    eulerian,
    fibonacci,
    fibonacci_values,
    rec_value,
    rec_values,
    stirling1_signed,
    stirling2,
)


def _fib_fast_doubling(n: int) -> int:
    """Independent of rec_value: F(2m) = F(m) (2 F(m+1) - F(m)),
    F(2m+1) = F(m)^2 + F(m+1)^2."""

    def pair(m):
        if m == 0:
            return 0, 1
        f, g = pair(m >> 1)
        c = f * (2 * g - f)
        d = f * f + g * g
        if m & 1:
            return d, c + d
        return c, d

    return pair(n)[0]


def test_rec_value_examples():
    assert rec_value(FIBONACCI, 0) == 0
    assert rec_value(FIBONACCI, 10) == 55
    assert rec_value(PELL, 5) == 29
    assert rec_values(PELL, 5) == [0, 1, 2, 5, 12, 29]
    assert rec_values(RecurrenceSpec(1, 1), 0) == [0]
    with pytest.raises(DomainError):
        rec_value(FIBONACCI, -1)


def test_fibonacci_agrees_with_fast_doubling():
    values = fibonacci_values(1000)
    for n in range(0, 1001, 37):
        assert values[n] == _fib_fast_doubling(n)
    assert fibonacci(1000) == _fib_fast_doubling(1000)


def test_binomial():
    assert binomial(5, 2) == 10
    assert binomial(5, 0) == 1
    assert binomial(5, 6) == 0
    assert binomial(5, -1) == 0
    with pytest.raises(DomainError):
        binomial(-1, 0)


def test_binomial_row_sums():
    # Full rows sum to 2^p; odd positions alone sum to 2^(p-1).
    for p in range(1, 31):
        assert sum(binomial(p, k) for k in range(p + 1)) == 2**p
        assert sum(binomial(p, 2 * j + 1) for j in range((p + 1) // 2)) == 2 ** (p - 1)


def test_stirling2_values():
    assert stirling2(0, 0) == 1
    assert stirling2(4, 2) == 7
    assert stirling2(5, 5) == 1
    assert stirling2(5, 0) == 0
    assert stirling2(3, 7) == 0


def test_stirling1_signed_values():
    assert stirling1_signed(2, 1) == -1
    assert stirling1_signed(3, 1) == 2
    assert stirling1_signed(3, 2) == -3
    assert stirling1_signed(4, 2) == 11
    assert stirling1_signed(4, 4) == 1


def test_stirling_inversion():
    for n in range(11):
        for m in range(11):
            total = sum(stirling1_signed(n, k) * stirling2(k, m) for k in range(n + 1))
            assert total == (1 if n == m else 0)


def test_eulerian_values():
    assert eulerian(0, 0) == 1
    assert eulerian(1, 0) == 1
    assert eulerian(2, 1) == 1
    assert eulerian(3, 1) == 4
    assert eulerian(4, 2) == 11
    assert eulerian(3, 3) == 0
    assert eulerian(3, -1) == 0
    assert eulerian(0, 1) == 0


def test_eulerian_row_sums():
    for n in range(1, 13):
        total = sum(eulerian(n, k) for k in range(n))
        expect = 1
        for i in range(2, n + 1):
            expect *= i
        assert total == expect


def test_bernoulli_plus_values():
    assert bernoulli_plus(0) == 1
    assert bernoulli_plus(1) == Fraction(1, 2)
    assert bernoulli_plus(2) == Fraction(1, 6)
    assert bernoulli_plus(4) == Fraction(-1, 30)
    assert bernoulli_plus(12) == Fraction(-691, 2730)
    with pytest.raises(DomainError):
        bernoulli_plus(-1)


def test_bernoulli_plus_odd_indices_vanish():
    for m in range(1, 26):
        assert bernoulli_plus(2 * m + 1) == 0
