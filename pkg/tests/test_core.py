"""Coefficient tables, closed forms, and their brute-force oracles."""

import pytest

from brousseau.core import (
    CoeffTable,
    brousseau_closed,
    brute_convolution,
    brute_sum,
    check_convolution_forms,
    check_convolution_recursion,
    check_sum_forms,
    check_summand_identity,
    coeff_table,
    convolution_closed,
    eval_closed,
    summand_coeffs,
)
from brousseau.errors import DomainError
from brousseau.exact_arith import IntPoly
from brousseau.sequences import binomial


def test_summand_coeffs_examples():
    assert summand_coeffs(1).coeffs == (-2, 1)
    assert summand_coeffs(3).coeffs == (-2, 0, -6, 1)
    assert summand_coeffs(4).coeffs == (0, -8, 0, -8, 1)


def test_summand_coeffs_rejects_p_zero():
    with pytest.raises(DomainError):
        summand_coeffs(0)


def test_summand_is_monic_with_zero_even_tail():
    # Below the leading term, only odd drops from the top power carry weight.
    for p in range(1, 13):
        poly = summand_coeffs(p)
        assert poly.degree == p
        assert poly.coeffs[p] == 1
        for e in range(p):
            if (p - e) % 2 == 0:
                assert poly.coeffs[e] == 0
            else:
                assert poly.coeffs[e] == -2 * binomial(p, p - e)
                assert poly.coeffs[e] < 0


def test_coeff_table_values():
    table = coeff_table(5)
    assert table.A == (1, 1, 5, 31, 257, 2671)
    assert table.B == (1, 2, 8, 50, 416, 4322)
    assert table.method == "recursion"

    assert coeff_table(0).A == (1,)
    assert coeff_table(0).B == (1,)


def test_coeff_table_invariants():
    table = coeff_table(40)
    assert table.A[0] == table.B[0] == 1
    for k in range(41):
        assert table.A[k] > 0
        assert table.B[k] > 0
        if k >= 1:
            assert table.B[k] >= table.A[k]


def test_coeff_table_prefix():
    table = coeff_table(8)
    small = table.prefix(3)
    assert small.k_max == 3
    assert small.A == table.A[:4]
    with pytest.raises(DomainError):
        small.prefix(5)


def test_coeff_table_validation():
    with pytest.raises(ValueError):
        CoeffTable(1, (1,), (1, 2))
    with pytest.raises(ValueError):
        CoeffTable(1, (2, 1), (1, 2))
    with pytest.raises(DomainError):
        coeff_table(-1)


def test_convolution_closed_shapes():
    table = coeff_table(3)
    form = convolution_closed(3, table)
    assert form.fn_poly.coeffs == (31,)
    assert form.fn1_poly.coeffs == (50,)
    assert form.const_poly.coeffs == (-50, -24, -6, -1)

    form0 = convolution_closed(0, table)
    assert form0.fn_poly.coeffs == (1,)
    assert form0.fn1_poly.coeffs == (1,)
    assert form0.const_poly.coeffs == (-1,)

    form2 = convolution_closed(2, table)
    assert form2.const_poly.coeffs == (-8, -4, -1)


def test_brousseau_closed_shapes():
    table = coeff_table(3)
    form = brousseau_closed(3, table)
    assert form.fn_poly.coeffs == (-31, 15, -3, 1)
    assert form.fn1_poly.coeffs == (-50, 24, -6, 1)
    assert form.const_poly.coeffs == (50,)

    form0 = brousseau_closed(0, table)
    assert form0.fn_poly.coeffs == (1,)
    assert form0.fn1_poly.coeffs == (1,)
    assert form0.const_poly.coeffs == (-1,)

    form2 = brousseau_closed(2, table)
    assert form2.fn_poly.coeffs == (5, -2, 1)
    assert form2.fn1_poly.coeffs == (8, -4, 1)
    assert form2.const_poly.coeffs == (-8,)


def test_closed_forms_need_enough_table():
    table = coeff_table(2)
    with pytest.raises(DomainError):
        convolution_closed(3, table)
    with pytest.raises(DomainError):
        brousseau_closed(-1, table)


def test_sum_form_parity_structure():
    # fn_poly coefficient at degree p-k is C(p,k) (-1)^k A_k; same with B for
    # fn1_poly; the tail constant is -(-1)^p B_p.
    table = coeff_table(10)
    for p in range(11):
        form = brousseau_closed(p, table)
        for k in range(p + 1):
            sign = -1 if k % 2 else 1
            want = sign * binomial(p, k) * table.A[k]
            got = form.fn_poly.coeffs[p - k] if p - k < len(form.fn_poly.coeffs) else 0
            assert got == want
            want_b = sign * binomial(p, k) * table.B[k]
            got_b = form.fn1_poly.coeffs[p - k] if p - k < len(form.fn1_poly.coeffs) else 0
            assert got_b == want_b
        assert form.const_poly.coeffs == (-((-1) ** p) * table.B[p],)


def test_brute_examples():
    assert brute_convolution(2, 3) == 5
    assert brute_convolution(0, 0) == 0
    assert brute_convolution(1, 4) == 7
    assert brute_sum(3, 4) == 255
    assert brute_sum(0, 3) == 4
    assert brute_sum(5, 0) == 0
    with pytest.raises(DomainError):
        brute_sum(-1, 3)
    with pytest.raises(DomainError):
        brute_convolution(2, -1)


def test_eval_closed_examples():
    table = coeff_table(3)
    assert eval_closed(brousseau_closed(0, table), 10) == 143
    assert eval_closed(brousseau_closed(3, table), 4) == 255
    assert eval_closed(convolution_closed(3, table), 0) == 0
    with pytest.raises(DomainError):
        eval_closed(brousseau_closed(1, table), -1)


def test_summand_identity_sweep():
    assert check_summand_identity(6, 40).ok


def test_closed_form_sweeps():
    assert check_convolution_forms(6, 60).ok
    assert check_sum_forms(6, 60).ok


def test_convolution_recursion_sweep():
    assert check_convolution_recursion(8, 50).ok


def test_power_difference_identity():
    # (n-1)^p + n^p - (n+1)^p equals the summand polynomial in n, as
    # polynomials and on a grid of evaluations.
    def shifted_power(p, shift):
        return IntPoly(tuple(binomial(p, k) * shift ** (p - k) for k in range(p + 1)))

    for p in range(1, 11):
        lhs = shifted_power(p, -1) + shifted_power(p, 0) - shifted_power(p, 1)
        assert lhs == summand_coeffs(p)
        for n in range(-20, 21):
            assert lhs(n) == summand_coeffs(p)(n)
