"""Exact arithmetic for weighted Fibonacci sums.

The package computes the coefficient sequences behind closed forms of
sum i^p F_i and sum i^p F_{n-i} (OEIS A000556 and A000557), renders the
closed forms, and cross-verifies every identity it uses against independent
brute-force oracles and alternative classical formulas.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .core import (
    ClosedForm,
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
from .errors import (
    DomainError,
    IntegralityError,
    InvertibilityError,
    SingularSystemError,
    SummandVerificationError,
)
from .exact_arith import IntPoly, RatSeries, exp_series
from .extensions import (
    DerivedSummand,
    cubic_summand,
    derive_summand,
    general_cubic_check,
    general_cubic_grid_check,
    pell_cubic_check,
)
from .identities import (
    alt_value,
    cross_method_check,
    egf_check,
    egf_coefficients,
    erbacher_fuchs_check,
    shannon_ollerton_check,
    zeitlin_firstkind_check,
    zeitlin_firstkind_sweep,
)
from .report import IdentityReport, run_check
from .sequences import (
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

__all__ = [
    "__version__",
    "ClosedForm",
    "CoeffTable",
    "DerivedSummand",
    "DomainError",
    "FIBONACCI",
    "IdentityReport",
    "IntPoly",
    "IntegralityError",
    "InvertibilityError",
    "PELL",
    "RatSeries",
    "RecurrenceSpec",
    "SingularSystemError",
    "SummandVerificationError",
    "alt_value",
    "bernoulli_plus",
    "binomial",
    "brousseau_closed",
    "brute_convolution",
    "brute_sum",
    "check_convolution_forms",
    "check_convolution_recursion",
    "check_sum_forms",
    "check_summand_identity",
    "coeff_table",
    "convolution_closed",
    "cross_method_check",
    "cubic_summand",
    "derive_summand",
    "egf_check",
    "egf_coefficients",
    "erbacher_fuchs_check",
    "eulerian",
    "eval_closed",
    "exp_series",
    "fibonacci",
    "fibonacci_values",
    "general_cubic_check",
    "general_cubic_grid_check",
    "pell_cubic_check",
    "rec_value",
    "rec_values",
    "run_check",
    "shannon_ollerton_check",
    "stirling1_signed",
    "stirling2",
    "summand_coeffs",
    "zeitlin_firstkind_check",
    "zeitlin_firstkind_sweep",
]
