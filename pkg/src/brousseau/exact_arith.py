"""Exact dense polynomials over the integers and truncated rational power series.

Everything here is immutable and exact. Polynomial coefficients are Python
ints in ascending powers, with the zero polynomial stored as the empty tuple
so that equal polynomials always compare equal. Series coefficients are
``fractions.Fraction`` values; a series carries a fixed truncation order
chosen at construction, and binary operations insist both operands share it,
so truncation is always an explicit caller decision rather than a silent one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import InvertibilityError

__all__ = ["IntPoly", "RatSeries", "exp_series"]


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial, coefficients in ascending powers."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = tuple(int(v) for v in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        """Degree of the polynomial, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, n: int) -> int:
        # Horner evaluation, highest power first.
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * n + c
        return acc

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> IntPoly:
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(tuple(out))

    def __sub__(self, other) -> IntPoly:
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(tuple(other * c for c in self.coeffs))
        if not isinstance(other, IntPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(tuple(out))

    __rmul__ = __mul__


@dataclass(frozen=True)
class RatSeries:
    """Taylor coefficients c_0 .. c_K of a power series truncated at order K."""

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("series order must be >= 0")
        c = tuple(Fraction(v) for v in self.coeffs)
        if len(c) != self.order + 1:
            raise ValueError(f"expected {self.order + 1} coefficients, got {len(c)}")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def constant(cls, value, order: int) -> RatSeries:
        return cls(order, (Fraction(value),) + (Fraction(0),) * order)

    @classmethod
    def one(cls, order: int) -> RatSeries:
        return cls.constant(1, order)

    def _require_same_order(self, other: RatSeries) -> None:
        if self.order != other.order:
            raise ValueError(f"series order mismatch: {self.order} != {other.order}")

    def __add__(self, other) -> RatSeries:
        if not isinstance(other, RatSeries):
            return NotImplemented
        self._require_same_order(other)
        return RatSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other) -> RatSeries:
        if not isinstance(other, RatSeries):
            return NotImplemented
        self._require_same_order(other)
        return RatSeries(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other) -> RatSeries:
        """Cauchy product, truncated back to the shared order."""
        if not isinstance(other, RatSeries):
            return NotImplemented
        self._require_same_order(other)
        out = [Fraction(0)] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(self.order + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return RatSeries(self.order, tuple(out))

    def inverse(self) -> RatSeries:
        """Multiplicative inverse modulo x^(order+1).

        Requires a nonzero constant term; the coefficients then satisfy the
        usual triangular recurrence b_k = -(1/a_0) * sum_{i=1..k} a_i b_{k-i}.
        """
        a = self.coeffs
        if a[0] == 0:
            raise InvertibilityError("series has zero constant term")
        inv0 = Fraction(1) / a[0]
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = Fraction(0)
            for i in range(1, k + 1):
                acc += a[i] * out[k - i]
            out.append(-inv0 * acc)
        return RatSeries(self.order, tuple(out))


def exp_series(c: int, order: int) -> RatSeries:
    """e^(c x) truncated at the given order: coefficient of x^j is c^j / j!."""
    return RatSeries(order, tuple(Fraction(c**j, factorial(j)) for j in range(order + 1)))
