"""Alternative-formula cross-checks and standalone identity checkers."""

from fractions import Fraction

import pytest

from brousseau.core import brute_sum, coeff_table
from brousseau.errors import DomainError
from brousseau.identities import (
    ALT_METHODS,
    alt_value,
    cross_method_check,
    egf_check,
    egf_coefficients,
    erbacher_fuchs_check,
    method_min_k,
    shannon_ollerton_cases,
    shannon_ollerton_check,
    zeitlin_firstkind_check,
    zeitlin_firstkind_sweep,
)
from brousseau.report import IdentityReport, run_check
from brousseau.sequences import fibonacci_values

TABLE = coeff_table(60)


def test_alt_value_examples():
    assert alt_value("kmt_eulerian", "A", 2, TABLE) == 5
    assert alt_value("dresden_inverse", "A", 3, TABLE) == 31
    assert alt_value("hoggatt", "B", 2, TABLE) == 8
    assert alt_value("ledin", "A", 2, TABLE) == 5
    assert alt_value("ledin", "B", 3, TABLE) == 50
    assert alt_value("zeitlin_stirling2", "B", 2, TABLE) == 8
    assert alt_value("adegoke", "B", 4, TABLE) == 416


def test_alt_value_rejects_unsupported_pairs():
    with pytest.raises(DomainError):
        alt_value("dresden_inverse", "B", 3, TABLE)
    with pytest.raises(DomainError):
        alt_value("adegoke", "A", 3, TABLE)
    with pytest.raises(DomainError):
        alt_value("nonsense", "A", 3, TABLE)


def test_alt_value_respects_method_minimum():
    for method in ("hoggatt", "dresden_inverse", "adegoke", "kmt_eulerian"):
        assert method_min_k(method) == 1
        which = "A" if method in ("hoggatt", "dresden_inverse", "kmt_eulerian") else "B"
        with pytest.raises(DomainError):
            alt_value(method, which, 0, TABLE)
    # These two hold at k = 0 as well.
    assert alt_value("ledin", "A", 0, TABLE) == 1
    assert alt_value("zeitlin_stirling2", "B", 0, TABLE) == 1


def test_alt_value_needs_table_coverage():
    small = coeff_table(3)
    with pytest.raises(DomainError):
        alt_value("ledin", "A", 4, small)


def test_all_methods_match_table_to_40():
    pairs = [
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
    ]
    for method, which in pairs:
        report = cross_method_check(method, which, 40, TABLE)
        assert report.ok, report
    assert set(ALT_METHODS) == {m for m, _ in pairs}


def test_egf_coefficients_examples():
    assert egf_coefficients("A", 2) == [1, 1, 5]
    assert egf_coefficients("B", 0) == [1]
    assert egf_coefficients("B", 4) == [1, 2, 8, 50, 416]
    with pytest.raises(DomainError):
        egf_coefficients("C", 3)
    with pytest.raises(DomainError):
        egf_coefficients("A", -1)


def test_egf_matches_table():
    assert egf_check(40, TABLE).ok


def test_zeitlin_firstkind_signed_anchor():
    # 2! F_3 = 4 = s(2,1) A_1 + s(2,2) A_2 = -1 + 5; the unsigned
    # convention would give 6 instead.
    fib = fibonacci_values(4)
    assert 2 * fib[3] == 4
    assert -TABLE.A[1] + TABLE.A[2] == 4
    assert TABLE.A[1] + TABLE.A[2] == 6
    assert zeitlin_firstkind_check(2, TABLE) == (True, True)


def test_zeitlin_firstkind_small_n():
    for n in (1, 2, 3):
        assert zeitlin_firstkind_check(n, TABLE) == (True, True)
    with pytest.raises(DomainError):
        zeitlin_firstkind_check(0, TABLE)
    with pytest.raises(DomainError):
        zeitlin_firstkind_check(61, TABLE)


def test_zeitlin_firstkind_sweep():
    assert zeitlin_firstkind_sweep(30, TABLE).ok


def test_shannon_ollerton_small():
    assert shannon_ollerton_check(2, TABLE).ok
    assert shannon_ollerton_check(3, TABLE).ok
    assert shannon_ollerton_check(50, TABLE).ok
    with pytest.raises(DomainError):
        shannon_ollerton_check(1, TABLE)


def test_shannon_ollerton_sides_are_exact_rationals():
    seen = list(shannon_ollerton_cases(6, TABLE))
    assert [k for k, _, _ in seen] == [2, 3, 4, 5, 6]
    for k, lhs, rhs in seen:
        assert isinstance(lhs, Fraction) and isinstance(rhs, Fraction)
        assert lhs == rhs == TABLE.B[k]


def test_erbacher_fuchs_examples():
    fib = fibonacci_values(5)
    # n = 1: (1 + 6 - 12) F_3 + (-3 + 9 - 19) F_4 + 50 = -10 - 39 + 50 = 1
    assert (1 + 6 - 12) * fib[3] + (-3 + 9 - 19) * fib[4] + 50 == brute_sum(3, 1) == 1
    assert erbacher_fuchs_check(100).ok


def test_report_invariants():
    report = run_check("demo", "n=0..2", [(0, 1, 1), (1, 2, 2)])
    assert report.ok and report.first_failure is None

    failed = run_check("demo", "n=0..2", [(0, 1, 1), (1, 2, 3), (2, 9, 9)])
    assert failed.status == "failed"
    assert failed.first_failure == (1, 2, 3)

    with pytest.raises(ValueError):
        IdentityReport("demo", "n=0..2", "failed", None)
    with pytest.raises(ValueError):
        IdentityReport("demo", "n=0..2", "verified", (0, 1, 2))
    with pytest.raises(ValueError):
        IdentityReport("demo", "n=0..2", "maybe", None)
