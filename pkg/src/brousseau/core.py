"""Coefficient tables, closed forms, and brute-force oracles for weighted
Fibonacci sums.

Two integer sequences drive everything here (OEIS A000556 and A000557).
Both satisfy a pure binomial recursion, and from their values this module
assembles exact closed forms for the convolution sum_{i=0..n} i^p F_{n-i}
and for the weighted sum sum_{i=0..n} i^p F_i, each in the shape
P(n) F_n + Q(n) F_{n+1} + C(n) with integer polynomials.

The ``brute_*`` functions evaluate the defining sums literally and know
nothing about the closed forms, so they double as independent oracles for
the ``check_*`` sweeps at the bottom of the module.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .exact_arith import IntPoly
from .report import IdentityReport, run_check
from .sequences import binomial, fibonacci_values

__all__ = [
    "CoeffTable",
    "ClosedForm",
    "coeff_table",
    "summand_coeffs",
    "convolution_closed",
    "brousseau_closed",
    "brute_convolution",
    "brute_sum",
    "eval_closed",
    "check_summand_identity",
    "check_convolution_forms",
    "check_sum_forms",
    "check_convolution_recursion",
]


@dataclass(frozen=True)
class CoeffTable:
    """Paired prefixes A[0..k_max], B[0..k_max] plus the producing method's tag."""

    k_max: int
    A: tuple[int, ...]
    B: tuple[int, ...]
    method: str = "recursion"

    def __post_init__(self):
        if self.k_max < 0:
            raise DomainError("k_max must be >= 0")
        if len(self.A) != self.k_max + 1 or len(self.B) != self.k_max + 1:
            raise ValueError("table length does not match k_max")
        if self.A[0] != 1 or self.B[0] != 1:
            raise ValueError("both sequences start at 1")

    def prefix(self, k_max: int) -> CoeffTable:
        if k_max > self.k_max:
            raise DomainError("cannot extend a table by slicing")
        return CoeffTable(k_max, self.A[: k_max + 1], self.B[: k_max + 1], self.method)


def coeff_table(k_max: int) -> CoeffTable:
    """Build both coefficient sequences by their binomial recursions.

    A_p = (-1)^p + 2 sum_j C(p, 2j+1) A_{p-2j-1}   (A000556: 1, 1, 5, 31, 257, ...)
    B_p =          2 sum_j C(p, 2j+1) B_{p-2j-1}   (A000557: 1, 2, 8, 50, 416, ...)
    """
    if k_max < 0:
        raise DomainError("k_max must be >= 0")
    a_seq = [1]
    b_seq = [1]
    for p in range(1, k_max + 1):
        sum_a = 0
        sum_b = 0
        for j in range((p + 1) // 2):
            c = binomial(p, 2 * j + 1)
            sum_a += c * a_seq[p - 2 * j - 1]
            sum_b += c * b_seq[p - 2 * j - 1]
        a_seq.append((-1) ** p + 2 * sum_a)
        b_seq.append(2 * sum_b)
    return CoeffTable(k_max, tuple(a_seq), tuple(b_seq))


def summand_coeffs(p: int) -> IntPoly:
    """Monic degree-p weight w with F_n - n^p = sum_{i=1..n} w(i) F_{n-i}.

    w(i) = i^p - 2 sum_j C(p, 2j+1) i^(p-2j-1), defined for p >= 1.
    """
    if p < 1:
        raise DomainError("summand polynomial is defined for p >= 1")
    coeffs = [0] * (p + 1)
    coeffs[p] = 1
    for j in range((p + 1) // 2):
        coeffs[p - 2 * j - 1] -= 2 * binomial(p, 2 * j + 1)
    return IntPoly(tuple(coeffs))


@dataclass(frozen=True)
class ClosedForm:
    """Expression fn_poly(n) * F_n + fn1_poly(n) * F_{n+1} + const_poly(n)."""

    power: int
    fn_poly: IntPoly
    fn1_poly: IntPoly
    const_poly: IntPoly


def convolution_closed(p: int, table: CoeffTable) -> ClosedForm:
    """Closed form of sum_{i=0..n} i^p F_{n-i}: constant Fibonacci multipliers
    A_p and B_p, minus the binomial transform of B as a polynomial in n."""
    _require_power(p, table)
    tail = [0] * (p + 1)
    for k in range(p + 1):
        tail[p - k] = -binomial(p, k) * table.B[k]
    return ClosedForm(p, IntPoly((table.A[p],)), IntPoly((table.B[p],)), IntPoly(tuple(tail)))


def brousseau_closed(p: int, table: CoeffTable) -> ClosedForm:
    """Closed form of sum_{i=0..n} i^p F_i: degree-p Fibonacci multipliers
    built from alternating binomial transforms of A and B, constant tail."""
    _require_power(p, table)
    fn = [0] * (p + 1)
    fn1 = [0] * (p + 1)
    for k in range(p + 1):
        sign = -1 if k % 2 else 1
        fn[p - k] = sign * binomial(p, k) * table.A[k]
        fn1[p - k] = sign * binomial(p, k) * table.B[k]
    const = -table.B[p] if p % 2 == 0 else table.B[p]
    return ClosedForm(p, IntPoly(tuple(fn)), IntPoly(tuple(fn1)), IntPoly((const,)))


def _require_power(p: int, table: CoeffTable) -> None:
    if p < 0:
        raise DomainError("power must be >= 0")
    if p > table.k_max:
        raise DomainError(f"table holds k <= {table.k_max}, need k = {p}")


def _weight(p: int, i: int) -> int:
    # The p = 0 weight is the constant 1, including at i = 0.
    return 1 if p == 0 else i**p


def brute_convolution(p: int, n: int) -> int:
    """sum_{i=0..n} i^p F_{n-i}, evaluated literally."""
    if p < 0 or n < 0:
        raise DomainError("p and n must be >= 0")
    fib = fibonacci_values(n)
    return sum(_weight(p, i) * fib[n - i] for i in range(n + 1))


def brute_sum(p: int, n: int) -> int:
    """sum_{i=0..n} i^p F_i, evaluated literally."""
    if p < 0 or n < 0:
        raise DomainError("p and n must be >= 0")
    fib = fibonacci_values(n)
    return sum(_weight(p, i) * fib[i] for i in range(n + 1))


def eval_closed(form: ClosedForm, n: int) -> int:
    """Evaluate a closed form at n using exact Fibonacci values."""
    if n < 0:
        raise DomainError("n must be >= 0")
    fib = fibonacci_values(n + 1)
    return form.fn_poly(n) * fib[n] + form.fn1_poly(n) * fib[n + 1] + form.const_poly(n)


def check_summand_identity(p_max: int, n_max: int) -> IdentityReport:
    """Rebuild F_n - n^p from the weight polynomial over a (p, n) grid."""
    if p_max < 1 or n_max < 0:
        raise DomainError("need p_max >= 1 and n_max >= 0")
    fib = fibonacci_values(n_max)

    def cases():
        for p in range(1, p_max + 1):
            weights = [summand_coeffs(p)(i) for i in range(n_max + 1)]
            for n in range(n_max + 1):
                lhs = fib[n] - n**p
                rhs = sum(weights[i] * fib[n - i] for i in range(1, n + 1))
                yield (p, n), lhs, rhs

    return run_check("theorem1", f"p=1..{p_max}, n=0..{n_max}", cases())


def check_convolution_forms(p_max: int, n_max: int, table: CoeffTable | None = None) -> IdentityReport:
    """Closed convolution forms against the literal sums over a (p, n) grid."""
    table = coeff_table(p_max) if table is None else table
    fib = fibonacci_values(n_max + 1)

    def cases():
        for p in range(p_max + 1):
            form = convolution_closed(p, table)
            weights = [_weight(p, i) for i in range(n_max + 1)]
            for n in range(n_max + 1):
                brute = sum(weights[i] * fib[n - i] for i in range(n + 1))
                closed = form.fn_poly(n) * fib[n] + form.fn1_poly(n) * fib[n + 1] + form.const_poly(n)
                yield (p, n), closed, brute

    return run_check("theorem2", f"p=0..{p_max}, n=0..{n_max}", cases())


def check_sum_forms(p_max: int, n_max: int, table: CoeffTable | None = None) -> IdentityReport:
    """Closed weighted-sum forms against literal running sums over a (p, n) grid."""
    table = coeff_table(p_max) if table is None else table
    fib = fibonacci_values(n_max + 1)

    def cases():
        for p in range(p_max + 1):
            form = brousseau_closed(p, table)
            running = 0
            for n in range(n_max + 1):
                running += _weight(p, n) * fib[n]
                closed = form.fn_poly(n) * fib[n] + form.fn1_poly(n) * fib[n + 1] + form.const_poly(n)
                yield (p, n), closed, running

    return run_check("theorem3", f"p=0..{p_max}, n=0..{n_max}", cases())


def check_convolution_recursion(p_max: int, n_max: int) -> IdentityReport:
    """Odd-binomial recursion between convolutions of decreasing powers.

    conv_p(n) = (-1)^p F_n - n^p + 2 sum_j C(p, 2j+1) conv_{p-2j-1}(n),
    with every convolution value taken from the brute-force oracle.
    """
    if p_max < 1 or n_max < 0:
        raise DomainError("need p_max >= 1 and n_max >= 0")
    fib = fibonacci_values(n_max)
    conv = [
        [sum(_weight(p, i) * fib[n - i] for i in range(n + 1)) for n in range(n_max + 1)]
        for p in range(p_max + 1)
    ]

    def cases():
        for p in range(1, p_max + 1):
            for n in range(n_max + 1):
                acc = 0
                for j in range((p + 1) // 2):
                    acc += binomial(p, 2 * j + 1) * conv[p - 2 * j - 1][n]
                rhs = (-1) ** p * fib[n] - n**p + 2 * acc
                yield (p, n), conv[p][n], rhs

    return run_check("convolution-recursion", f"p=1..{p_max}, n=0..{n_max}", cases())
