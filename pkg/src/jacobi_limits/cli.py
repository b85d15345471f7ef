"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 domain error, 4 internal inconsistency between independent formulas.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Any, Optional

from . import asymptotics as asy
from .errors import ConsistencyError, DomainError
from .oracle import RNG_NAME, ChainConfig, mc_sample_pk
from .schur import ScalingParams, ik_closed

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_DOMAIN, EXIT_INTERNAL = 0, 1, 2, 3, 4
SIG_DIGITS = 12


def exact_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def decimal_str(x: Fraction, digits: int = SIG_DIGITS) -> str:
    """Display rendering: ``digits`` significant digits, round-half-even."""
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_HALF_EVEN
        d = Decimal(x.numerator) / Decimal(x.denominator)
    return format(d, f".{digits}g")


@dataclass
class OutputRecord:
    command: str
    inputs: dict[str, str]
    value: Fraction
    provenance: str
    extra: dict[str, Any] = field(default_factory=dict)

    def as_dict(self) -> dict[str, Any]:
        out = {"command": self.command, "inputs": self.inputs,
               "value": exact_str(self.value), "decimal": decimal_str(self.value),
               "provenance": self.provenance}
        out.update(self.extra)
        return out

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)


# -- argument types ----------------------------------------------------------

def rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def int_list(text: str) -> list[int]:
    items = [s for s in text.replace(" ", "").split(",") if s]
    if not items:
        raise argparse.ArgumentTypeError("empty list")
    return [positive_int(s) for s in items]


def _inputs(args, names) -> dict[str, str]:
    return {n: str(getattr(args, n)) for n in names}


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


# -- commands ----------------------------------------------------------------

def cmd_ik(args) -> int:
    value = ik_closed(args.k, args.a, args.b, args.n)
    rec = OutputRecord("ik", _inputs(args, ("k", "n", "a", "b")), value,
                       "hook-sum product formula for <p_k>/<1>")
    _emit(rec.to_json(), args.out)
    return EXIT_OK


def limit_forms(k: int, a1: Fraction, b1: Fraction) -> dict[str, Fraction]:
    """Every available formula for the limit at (a1, b1), keyed by name."""
    forms = {"general": asy.ik_limit(k, a1, b1),
             "expanded": asy.ik_limit_expanded(k, a1, b1)}
    l1, l2 = asy.l1l2_from_slopes(a1, b1)
    forms["l1l2"] = asy.ik_limit_l1l2(k, l1, l2)
    special = asy.special_case(k, a1, b1)
    if special is not None:
        forms[special[0]] = special[1]
        if special[0] == "dyck":
            forms["novaes"] = asy.limit_novaes(k, a1 + 1)
    return forms


def cmd_limit(args) -> int:
    k, a1, b1 = args.k, args.a1, args.b1
    asy.LimitQuery.of(k, a1, b1)  # validates the scaling
    forms = limit_forms(k, a1, b1)
    if len(set(forms.values())) != 1:
        detail = ", ".join(f"{n}={exact_str(v)}" for n, v in forms.items())
        raise ConsistencyError(f"limit formulas disagree: {detail}")
    special = asy.special_case(k, a1, b1)
    name = special[0] if special else None
    if args.form == "l1l2":
        chosen, prov = forms["l1l2"], "limit in the (l1, l2) chart via binomial transform"
    elif args.form == "auto-special" and special:
        chosen, prov = special[1], f"special-case formula: {name}"
    else:
        chosen, prov = forms["general"], "general limit formula in (a1, b1)"
    extra: dict[str, Any] = {"special": name,
                             "forms": {n: exact_str(v) for n, v in forms.items()}}
    if name == "catalan":
        extra["in_l"] = {"l": exact_str(b1 + 1), "numerator": asy.catalan_numerator(k).to_str("l"),
                         "denominator": f"(1 + l)^{2 * k - 1}"}
    elif name == "dyck":
        extra["in_l"] = {"l": exact_str(a1 + 1), "numerator": asy.dyck_numerator(k).to_str("l"),
                         "denominator": f"(1 + l)^{2 * k - 1}"}
    rec = OutputRecord("limit", _inputs(args, ("k", "a1", "b1", "form")), chosen, prov, extra)
    _emit(rec.to_json(), args.out)
    return EXIT_OK


TABLE_HEADER = ["k", "N", "ik_over_n", "limit", "abs_err",
                "ik_over_n_exact", "limit_exact", "abs_err_exact"]


def table_rows(k_max: int, params: ScalingParams, ns: list[int], skip_degenerate: bool = False):
    """Yield table rows in (k, N) order; degenerate cells raise unless skipped."""
    for k in range(1, k_max + 1):
        lim = asy.ik_limit(k, params.a1, params.b1)
        for n in ns:
            a, b = params.at(n)
            try:
                v = ik_closed(k, a, b, n) / n
            except DomainError as exc:
                if not skip_degenerate:
                    raise
                print(f"skipping k={k}, N={n}: {exc}", file=sys.stderr)
                continue
            err = abs(v - lim)
            yield [str(k), str(n), decimal_str(v), decimal_str(lim), decimal_str(err),
                   exact_str(v), exact_str(lim), exact_str(err)]


def cmd_table(args) -> int:
    params = ScalingParams(args.a1, args.a0, args.b1, args.b0)
    asy.LimitQuery.of(1, params.a1, params.b1)
    rows = list(table_rows(args.k_max, params, sorted(set(args.n_list)), args.skip_degenerate))
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TABLE_HEADER)
    w.writerows(rows)
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


def _colour(text: str, code: str) -> str:
    if os.environ.get("NO_COLOR") or not sys.stdout.isatty():
        return text
    return f"\033[{code}m{text}\033[0m"


def cmd_verify(args) -> int:
    from .verify import run_suite
    results = run_suite(args.suite)
    ok = all(r.passed for r in results)
    if args.json:
        report = {"suite": args.suite, "passed": ok,
                  "checks": [{"suite": r.suite, "name": r.name, "passed": r.passed,
                              "cases": r.cases, "failures": r.failures[:10]} for r in results]}
        _emit(json.dumps(report, indent=2), args.out)
    else:
        lines = []
        for r in results:
            line = r.line()
            lines.append(_colour(line, "32" if r.passed else "31"))
        n_ok = sum(r.passed for r in results)
        lines.append(f"{n_ok}/{len(results)} checks passed")
        _emit("\n".join(lines), args.out)
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_mc(args) -> int:
    if args.a <= 0 or args.b <= 0:
        raise DomainError(f"need a, b > 0, got a={args.a}, b={args.b}")
    cfg = ChainConfig(seed=args.seed, burn_in=args.burn_in, thinning=args.thinning,
                      step_width=args.step_width, samples=args.samples, batches=args.batches)
    mean, se = mc_sample_pk(args.k, args.n, float(args.a), float(args.b), cfg)
    exact = ik_closed(args.k, args.a, args.b, args.n)
    z = (mean - float(exact)) / se if se > 0 else float("inf")
    extra = {"estimate": mean, "std_error": se, "estimate_over_n": mean / args.n,
             "std_error_over_n": se / args.n, "z_score": z, "rng": RNG_NAME}
    inputs = _inputs(args, ("k", "n", "a", "b", "seed", "samples", "burn_in", "thinning",
                            "step_width", "batches"))
    rec = OutputRecord("mc", inputs, exact, "exact reference from the hook-sum formula; "
                       "estimate from a Metropolis chain", extra)
    _emit(rec.to_json(), args.out)
    return EXIT_OK


# -- parser ------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="jacobi-limits",
                description="Exact Jacobi-ensemble moments, their large-N limits and checks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("ik", help="exact I_k = <p_k>/<1> at finite N")
    s.add_argument("--k", type=positive_int, required=True)
    s.add_argument("--n", type=positive_int, required=True)
    s.add_argument("--a", type=rational, required=True)
    s.add_argument("--b", type=rational, required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_ik)

    s = sub.add_parser("limit", help="lim I_k/N for a = a1 N + a0, b = b1 N + b0")
    s.add_argument("--k", type=positive_int, required=True)
    s.add_argument("--a1", type=rational, required=True)
    s.add_argument("--b1", type=rational, required=True)
    s.add_argument("--form", choices=("general", "l1l2", "auto-special"), default="general")
    s.add_argument("--out")
    s.set_defaults(func=cmd_limit)

    s = sub.add_parser("table", help="finite-N convergence table as CSV")
    s.add_argument("--k-max", type=positive_int, required=True)
    s.add_argument("--a1", type=rational, default=Fraction(0))
    s.add_argument("--b1", type=rational, default=Fraction(0))
    s.add_argument("--a0", type=rational, default=Fraction(1))
    s.add_argument("--b0", type=rational, default=Fraction(1))
    s.add_argument("--n-list", type=int_list, required=True, help="comma separated, e.g. 10,100")
    s.add_argument("--skip-degenerate", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("verify", help="run the invariant suites")
    s.add_argument("--suite", choices=("all", "identities", "oracles", "limits", "conjecture"),
                   default="all")
    s.add_argument("--json", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("mc", help="Metropolis estimate of <p_k> against the exact value")
    s.add_argument("--k", type=positive_int, required=True)
    s.add_argument("--n", type=positive_int, required=True)
    s.add_argument("--a", type=rational, required=True)
    s.add_argument("--b", type=rational, required=True)
    s.add_argument("--seed", type=nonneg_int, default=42)
    s.add_argument("--samples", type=positive_int, default=100_000)
    s.add_argument("--burn-in", type=positive_int, default=2000)
    s.add_argument("--thinning", type=positive_int, default=1)
    s.add_argument("--step-width", type=float, default=0.3)
    s.add_argument("--batches", type=positive_int, default=50)
    s.add_argument("--out")
    s.set_defaults(func=cmd_mc)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
