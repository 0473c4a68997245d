"""Command-line interface.

Subcommands: ``coeffs`` (coefficient table), ``formula`` (closed-form
rendering), ``verify`` (identity suites), ``conjecture`` (the Bernoulli
recursion runner), ``oracle`` (brute-force sums), ``series`` (recurrence
terms). Exit codes: 0 on success, 1 when a verification fails, 2 on usage
errors. Output is deterministic: the same invocation against the same cache
state produces byte-identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path

from . import __version__
from .core import (
    CoeffTable,
    ClosedForm,
    brousseau_closed,
    brute_convolution,
    brute_sum,
    check_convolution_forms,
    check_sum_forms,
    check_summand_identity,
    coeff_table,
    convolution_closed,
    eval_closed,
)
from .exact_arith import IntPoly
from .extensions import general_cubic_check, general_cubic_grid_check, pell_cubic_check
from .identities import (
    cross_method_check,
    egf_check,
    erbacher_fuchs_check,
    shannon_ollerton_cases,
    zeitlin_firstkind_sweep,
)
from .report import IdentityReport, run_check
from .sequences import RecurrenceSpec, rec_values

CACHE_ENV = "BROUSSEAU_CACHE_DIR"
CACHE_FILE = "coeff_table.json"
CACHE_SCHEMA_VERSION = 1

SUITES = (
    "theorem1",
    "theorem2",
    "theorem3",
    "ledin",
    "dresden",
    "hoggatt",
    "zeitlin2",
    "zeitlin1",
    "eulerian",
    "egf",
    "adegoke",
    "erbacher-fuchs",
    "pell",
    "general",
)


def dumps_canonical(obj) -> str:
    """Canonical JSON: sorted keys, no whitespace. Re-serializing a parse of
    this output reproduces it byte for byte."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# ---------------------------------------------------------------- rendering

def format_poly(poly: IntPoly, var: str = "n") -> str:
    """Descending powers, explicit signs, unit coefficients omitted."""
    if not poly:
        return "0"
    parts: list[str] = []
    for e in range(poly.degree, -1, -1):
        c = poly.coeffs[e]
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            head = "" if mag == 1 else str(mag)
            body = f"{head}{var}" if e == 1 else f"{head}{var}^{e}"
        sign = "-" if c < 0 else ("" if not parts else "+")
        parts.append(sign + body)
    return "".join(parts)


def _fibonacci_term(poly: IntPoly, symbol: str) -> tuple[str, str]:
    """Sign and body of one ``poly * F_...`` term."""
    if poly.degree >= 1:
        return "+", f"({format_poly(poly)}){symbol}"
    value = poly.coeffs[0] if poly else 0
    sign = "-" if value < 0 else "+"
    mag = abs(value)
    return sign, symbol if mag == 1 else f"{mag}{symbol}"


def format_closed_form(form: ClosedForm) -> str:
    """Render P(n) F_n + Q(n) F_{n+1} + C(n) as a flat string.

    The string is equally valid as plain text and as LaTeX, e.g.
    ``(n^3-3n^2+15n-31)F_n + (n^3-6n^2+24n-50)F_{n+1} + 50``.
    """
    sign_p, body_p = _fibonacci_term(form.fn_poly, "F_n")
    sign_q, body_q = _fibonacci_term(form.fn1_poly, "F_{n+1}")
    out = ("-" if sign_p == "-" else "") + body_p
    out += f" {sign_q} {body_q}"
    tail = form.const_poly
    if tail.degree <= 0:
        value = tail.coeffs[0] if tail else 0
        if value != 0:
            out += f" {'-' if value < 0 else '+'} {abs(value)}"
    else:
        negated = -tail
        if all(c >= 0 for c in negated.coeffs):
            out += f" - ({format_poly(negated)})"
        else:
            out += f" + ({format_poly(tail)})"
    return out


def _emit_table(columns: list[str], rows: list[tuple], fmt: str) -> None:
    if fmt == "csv":
        print(",".join(columns))
        for row in rows:
            print(",".join(str(v) for v in row))
    elif fmt == "latex":
        print("\\begin{tabular}{" + "r" * len(columns) + "}")
        print(" & ".join(columns) + " \\\\")
        for row in rows:
            print(" & ".join(str(v) for v in row) + " \\\\")
        print("\\end{tabular}")
    else:
        for row in rows:
            print(" ".join(str(v) for v in row))


# ------------------------------------------------------------------- cache

def _cache_dir(args) -> Path | None:
    if getattr(args, "cache_dir", None):
        return Path(args.cache_dir)
    env = os.environ.get(CACHE_ENV)
    return Path(env) if env else None


def load_cached_table(path: Path) -> CoeffTable | None:
    """Parse and validate the cache file; None when missing or untrustworthy.

    The first five entries are re-derived from the recursion and compared
    before the cached values are trusted.
    """
    try:
        doc = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if not isinstance(doc, dict) or doc.get("schema_version") != CACHE_SCHEMA_VERSION:
        return None
    k_max = doc.get("k_max")
    try:
        a_vals = tuple(int(s) for s in doc["A"])
        b_vals = tuple(int(s) for s in doc["B"])
    except (KeyError, TypeError, ValueError):
        return None
    if not isinstance(k_max, int) or k_max < 0:
        return None
    if len(a_vals) != k_max + 1 or len(b_vals) != k_max + 1:
        return None
    probe = coeff_table(min(4, k_max))
    if a_vals[: probe.k_max + 1] != probe.A or b_vals[: probe.k_max + 1] != probe.B:
        return None
    return CoeffTable(k_max, a_vals, b_vals, method="cache")


def store_table(path: Path, table: CoeffTable) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    doc = {
        "schema_version": CACHE_SCHEMA_VERSION,
        "k_max": table.k_max,
        "A": [str(v) for v in table.A],
        "B": [str(v) for v in table.B],
    }
    path.write_text(dumps_canonical(doc) + "\n")


def get_table(k_max: int, cache_dir: Path | None) -> CoeffTable:
    """Coefficient table of the requested size, through the cache when one is
    configured. A cache hit never changes values: entries are validated on
    load, and a miss recomputes and rewrites the file."""
    if cache_dir is None:
        return coeff_table(k_max)
    path = cache_dir / CACHE_FILE
    cached = load_cached_table(path)
    if cached is not None and cached.k_max >= k_max:
        return cached.prefix(k_max) if cached.k_max > k_max else cached
    table = coeff_table(k_max)
    store_table(path, table)
    return table


# ------------------------------------------------------------- subcommands

def cmd_coeffs(args, parser) -> int:
    table = get_table(args.max_k, _cache_dir(args))
    if args.format == "json":
        payload = {
            "schema_version": 1,
            "rows": [
                {"k": k, "A": str(table.A[k]), "B": str(table.B[k])}
                for k in range(args.max_k + 1)
            ],
        }
        print(dumps_canonical(payload))
    else:
        rows = [(k, table.A[k], table.B[k]) for k in range(args.max_k + 1)]
        _emit_table(["k", "A", "B"], rows, args.format)
    return 0


def cmd_formula(args, parser) -> int:
    table = get_table(args.power, _cache_dir(args))
    build = brousseau_closed if args.kind == "sum" else convolution_closed
    form = build(args.power, table)
    if args.format == "json":
        payload = {
            "schema_version": 1,
            "kind": args.kind,
            "power": args.power,
            "fn": [str(c) for c in form.fn_poly.coeffs],
            "fn_next": [str(c) for c in form.fn1_poly.coeffs],
            "constant": [str(c) for c in form.const_poly.coeffs],
        }
        print(dumps_canonical(payload))
    elif args.format == "csv":
        print("part,degree,coefficient")
        for name, poly in (
            ("fn", form.fn_poly),
            ("fn_next", form.fn1_poly),
            ("constant", form.const_poly),
        ):
            for degree, c in enumerate(poly.coeffs):
                print(f"{name},{degree},{c}")
    else:
        print(format_closed_form(form))
    return 0


def cmd_oracle(args, parser) -> int:
    value = (
        brute_sum(args.power, args.n)
        if args.kind == "sum"
        else brute_convolution(args.power, args.n)
    )
    print(value)
    return 0


def cmd_series(args, parser) -> int:
    spec = RecurrenceSpec(args.a, args.b)
    values = rec_values(spec, args.max_n)
    if args.format == "json":
        payload = {
            "schema_version": 1,
            "a": args.a,
            "b": args.b,
            "rows": [{"n": n, "R": str(values[n])} for n in range(args.max_n + 1)],
        }
        print(dumps_canonical(payload))
    else:
        rows = [(n, values[n]) for n in range(args.max_n + 1)]
        _emit_table(["n", "R"], rows, args.format)
    return 0


def _spot_check(kind: str, seed: int, p_max: int, n_max: int, table: CoeffTable) -> IdentityReport:
    """Randomized samples beyond the deterministic grid, seeded for
    reproducible output."""
    rng = random.Random(seed)
    build = brousseau_closed if kind == "theorem3" else convolution_closed
    brute = brute_sum if kind == "theorem3" else brute_convolution

    def cases():
        for _ in range(20):
            p = rng.randint(0, p_max)
            n = rng.randint(0, 4 * n_max)
            yield (p, n), eval_closed(build(p, table), n), brute(p, n)

    return run_check(f"spot[{kind}]", f"20 samples, seed={seed}", cases())


def _run_suite(name: str, args, table: CoeffTable, parser) -> list[IdentityReport]:
    k_max = args.max_k
    if name == "theorem1":
        reports = [check_summand_identity(args.max_p, args.max_n)]
    elif name == "theorem2":
        reports = [check_convolution_forms(args.max_p, args.max_n, table)]
        if args.seed is not None:
            reports.append(_spot_check("theorem2", args.seed, args.max_p, args.max_n, table))
    elif name == "theorem3":
        reports = [check_sum_forms(args.max_p, args.max_n, table)]
        if args.seed is not None:
            reports.append(_spot_check("theorem3", args.seed, args.max_p, args.max_n, table))
    elif name == "ledin":
        reports = [
            cross_method_check("ledin", "A", k_max, table),
            cross_method_check("ledin", "B", k_max, table),
        ]
    elif name == "dresden":
        reports = [cross_method_check("dresden_inverse", "A", k_max, table)]
    elif name == "hoggatt":
        reports = [
            cross_method_check("hoggatt", "A", k_max, table),
            cross_method_check("hoggatt", "B", k_max, table),
        ]
    elif name == "zeitlin2":
        reports = [
            cross_method_check("zeitlin_stirling2", "A", k_max, table),
            cross_method_check("zeitlin_stirling2", "B", k_max, table),
        ]
    elif name == "zeitlin1":
        reports = [zeitlin_firstkind_sweep(k_max, table)]
    elif name == "eulerian":
        reports = [
            cross_method_check("kmt_eulerian", "A", k_max, table),
            cross_method_check("kmt_eulerian", "B", k_max, table),
        ]
    elif name == "egf":
        reports = [egf_check(k_max, table)]
    elif name == "adegoke":
        reports = [cross_method_check("adegoke", "B", k_max, table)]
    elif name == "erbacher-fuchs":
        reports = [erbacher_fuchs_check(args.max_n)]
    elif name == "pell":
        reports = [pell_cubic_check(args.max_n)]
    else:
        if (args.a is None) != (args.b is None):
            parser.error("--a and --b must be given together")
        if args.a is not None:
            reports = [general_cubic_check(RecurrenceSpec(args.a, args.b), args.max_n)]
        else:
            reports = [general_cubic_grid_check(5, 5, args.max_n)]
    return reports


def _report_line(report: IdentityReport) -> str:
    if report.ok:
        return f"ok {report.identity_id} ({report.range_checked})"
    index, lhs, rhs = report.first_failure
    return (
        f"FAIL {report.identity_id} ({report.range_checked}) "
        f"at {index}: lhs={lhs} rhs={rhs}"
    )


def cmd_verify(args, parser) -> int:
    selected = SUITES if args.suite == "all" else (args.suite,)
    table = get_table(max(args.max_k, args.max_p), _cache_dir(args))
    reports: list[IdentityReport] = []
    for name in selected:
        reports.extend(_run_suite(name, args, table, parser))
    if args.format == "json":
        payload = [
            {
                "identity_id": r.identity_id,
                "range_checked": r.range_checked,
                "status": r.status,
                "first_failure": None
                if r.first_failure is None
                else {
                    "index": str(r.first_failure[0]),
                    "lhs": str(r.first_failure[1]),
                    "rhs": str(r.first_failure[2]),
                },
            }
            for r in reports
        ]
        print(dumps_canonical(payload))
    else:
        for r in reports:
            print(_report_line(r))
    return 0 if all(r.ok for r in reports) else 1


def cmd_conjecture(args, parser) -> int:
    if args.max_k < 2:
        parser.error("--max-k must be >= 2")
    table = get_table(args.max_k, _cache_dir(args))
    stride = args.stride
    for k, lhs, rhs in shannon_ollerton_cases(args.max_k, table):
        if lhs != rhs:
            # A counterexample would be a publishable event; print it whole.
            print(f"FAIL shannon-ollerton at k={k}:")
            print(f"  lhs={lhs}")
            print(f"  rhs={rhs}")
            return 1
        if stride and k % stride == 0:
            print(f"k={k} ok")
    print(f"ok shannon-ollerton (k=2..{args.max_k})")
    return 0


# ------------------------------------------------------------------ parser

def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brousseau",
        description="Exact closed forms and identity checks for weighted Fibonacci sums.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_coeffs = sub.add_parser("coeffs", help="print the coefficient table")
    p_coeffs.add_argument("--max-k", type=_nonnegative, required=True)
    p_coeffs.add_argument("--format", choices=("text", "csv", "json", "latex"), default="text")
    p_coeffs.add_argument("--cache-dir")
    p_coeffs.set_defaults(func=cmd_coeffs)

    p_formula = sub.add_parser("formula", help="print a closed form")
    p_formula.add_argument("--kind", choices=("sum", "convolution"), required=True)
    p_formula.add_argument("--power", type=_nonnegative, required=True)
    p_formula.add_argument("--format", choices=("text", "csv", "json", "latex"), default="text")
    p_formula.add_argument("--cache-dir")
    p_formula.set_defaults(func=cmd_formula)

    p_verify = sub.add_parser("verify", help="run identity suites")
    p_verify.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p_verify.add_argument("--max-k", type=_nonnegative, default=40)
    p_verify.add_argument("--max-n", type=_nonnegative, default=100)
    p_verify.add_argument("--max-p", type=_nonnegative, default=8)
    p_verify.add_argument("--a", type=int, default=None)
    p_verify.add_argument("--b", type=int, default=None)
    p_verify.add_argument("--seed", type=int, default=None)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument("--cache-dir")
    p_verify.set_defaults(func=cmd_verify)

    p_conj = sub.add_parser("conjecture", help="verify the Bernoulli recursion for B_k")
    p_conj.add_argument("--max-k", type=_nonnegative, default=100)
    p_conj.add_argument("--stride", type=_nonnegative, default=50)
    p_conj.add_argument("--cache-dir")
    p_conj.set_defaults(func=cmd_conjecture)

    p_oracle = sub.add_parser("oracle", help="evaluate a brute-force sum")
    p_oracle.add_argument("--kind", choices=("sum", "convolution"), required=True)
    p_oracle.add_argument("--power", type=_nonnegative, required=True)
    p_oracle.add_argument("--n", type=_nonnegative, required=True)
    p_oracle.set_defaults(func=cmd_oracle)

    p_series = sub.add_parser("series", help="print terms of a two-term recurrence")
    p_series.add_argument("--a", type=int, default=1)
    p_series.add_argument("--b", type=int, default=1)
    p_series.add_argument("--max-n", type=_nonnegative, default=10)
    p_series.add_argument("--format", choices=("text", "csv", "json", "latex"), default="text")
    p_series.set_defaults(func=cmd_series)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
