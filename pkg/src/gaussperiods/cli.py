"""Command line frontend.

Exit codes: 0 success, 1 bad input, 2 q not eligible, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import TextIO

from .complexity import (
    CharSpec,
    check_eligibility,
    complexity,
    complexity_from_distribution,
    complexity_from_matrix,
    complexity_profile,
    n2_distribution,
    theorem_1_1,
)
from .cyclostats import (
    GaussParams,
    TauDistribution,
    brute_force_matrix,
    distribution_from_matrix,
    is_s_injective,
    tau_distribution,
)
from .errors import GaussPeriodError, ParameterError
from .exceptional import exceptional_primes
from .ntheory import is_prime

EXIT_OK = 0
EXIT_BAD_INPUT = 1
EXIT_INELIGIBLE = 2
EXIT_MISMATCH = 3

VERIFY_PRIMES = (2, 3, 5, 7, 11, 13)


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


@dataclass
class ReportRow:
    """One table row; a and a_star hold nonzero entries only."""

    k: int
    n: int
    r: int
    a: dict[int, int] = field(default_factory=dict)
    a_star: dict[int, int] = field(default_factory=dict)

    @classmethod
    def from_distribution(cls, dist: TauDistribution) -> ReportRow:
        a, s = dist.nonzero()
        p = dist.params
        return cls(p.k, p.n, p.r, a, s)

    def to_distribution(self) -> TauDistribution:
        params = GaussParams(self.k, self.n)
        a = tuple(self.a.get(t, 0) for t in range(self.k + 1))
        s = tuple(self.a_star.get(t, 0) for t in range(self.k + 1))
        return TauDistribution(params, a, s)

    @staticmethod
    def csv_header(k: int) -> str:
        cols = ["k", "n", "r"] + [f"a{t}" for t in range(k + 1)] + [f"as{t}" for t in range(k + 1)]
        return ",".join(cols)

    def to_csv(self) -> str:
        vals = [self.k, self.n, self.r]
        vals += [self.a.get(t, 0) for t in range(self.k + 1)]
        vals += [self.a_star.get(t, 0) for t in range(self.k + 1)]
        return ",".join(map(str, vals))

    @classmethod
    def from_csv(cls, line: str) -> ReportRow:
        vals = [int(x) for x in line.strip().split(",")]
        k, n, r = vals[:3]
        a = vals[3 : k + 4]
        s = vals[k + 4 : 2 * k + 5]
        if len(s) != k + 1 or len(vals) != 2 * k + 5:
            raise ValueError(f"malformed row: {line!r}")
        return cls(k, n, r, {t: c for t, c in enumerate(a) if c}, {t: c for t, c in enumerate(s) if c})

    def to_json(self) -> str:
        return _dumps(
            {
                "k": self.k,
                "n": self.n,
                "r": self.r,
                "a": {str(t): c for t, c in sorted(self.a.items())},
                "a_star": {str(t): c for t, c in sorted(self.a_star.items())},
            }
        )

    @classmethod
    def from_json(cls, text: str) -> ReportRow:
        obj = json.loads(text)
        return cls(
            obj["k"],
            obj["n"],
            obj["r"],
            {int(t): c for t, c in obj["a"].items()},
            {int(t): c for t, c in obj["a_star"].items()},
        )

    def to_text(self) -> str:
        def fmt(d):
            return "  ".join(f"{t}:{c}" for t, c in sorted(d.items())) or "-"

        return f"k={self.k} n={self.n} r={self.r}\n  a      {fmt(self.a)}\n  a_star {fmt(self.a_star)}"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_BAD_INPUT, f"{self.prog}: error: {message}\n")


def _params(k: int, n: int) -> GaussParams:
    return GaussParams(k, n)


def _char_from_args(args) -> CharSpec:
    if args.char is not None:
        if not is_prime(args.char):
            raise ParameterError(f"--char {args.char} is not prime")
        return CharSpec(args.char, args.char, 1)
    if args.q is None:
        raise ParameterError("one of -q or --char is required")
    return CharSpec.from_q(args.q)


def cmd_complexity(args, out: TextIO) -> int:
    params = _params(args.k, args.n)
    char = _char_from_args(args)
    report = check_eligibility(params, char)
    value = complexity(params, char).value if report.eligible else None
    elig = {
        "e": report.e,
        "quotient": report.quotient,
        "gcd": report.gcd_value,
        "eligible": report.eligible,
    }
    if args.format == "json":
        print(
            _dumps(
                {
                    "k": params.k,
                    "n": params.n,
                    "r": params.r,
                    "q": char.q,
                    "p": char.p,
                    "value": value,
                    "path": "generic_algorithm" if value is not None else None,
                    "eligibility": elig,
                }
            ),
            file=out,
        )
    elif args.format == "csv":
        print("k,n,r,q,p,value,e,quotient,gcd,eligible", file=out)
        print(
            f"{params.k},{params.n},{params.r},{char.q},{char.p},"
            f"{'' if value is None else value},{report.e},{report.quotient},"
            f"{report.gcd_value},{int(report.eligible)}",
            file=out,
        )
    else:
        if value is None:
            print(f"C({params.n},{params.k};{char.q}): not eligible", file=out)
        else:
            print(f"C({params.n},{params.k};{char.q}) = {value}", file=out)
            print("path: generic_algorithm", file=out)
        print(
            f"r = {params.r}, e = {report.e}, nk/e = {report.quotient}, "
            f"gcd(nk/e, n) = {report.gcd_value}, eligible = {report.eligible}",
            file=out,
        )
    return EXIT_OK if report.eligible else EXIT_INELIGIBLE


def cmd_profile(args, out: TextIO) -> int:
    params = _params(args.k, args.n)
    entries = complexity_profile(params)
    if args.format == "json":
        obj = [
            {"class": e.label, "value": e.value if e.eligible is not False else None, "eligible": e.eligible}
            for e in entries
        ]
        print(_dumps({"k": params.k, "n": params.n, "r": params.r, "profile": obj}), file=out)
    elif args.format == "csv":
        print("class,value,eligible", file=out)
        for e in entries:
            elig = "" if e.eligible is None else int(e.eligible)
            val = e.value if e.eligible is not False else ""
            print(f"{e.label},{val},{elig}", file=out)
    else:
        print(f"C({params.n},{params.k};q), r = {params.r}", file=out)
        for e in entries:
            val = "ineligible" if e.eligible is False else str(e.value)
            print(f"  {e.label:<8} {val}", file=out)
    return EXIT_OK


def cmd_distribution(args, out: TextIO) -> int:
    params = _params(args.k, args.n)
    if args.method == "brute":
        dist = distribution_from_matrix(brute_force_matrix(params))
    elif args.method == "n2":
        if params.n != 2:
            raise ParameterError("the n2 method needs n = 2")
        dist = n2_distribution(params.k)
    else:
        dist = tau_distribution(params)
    row = ReportRow.from_distribution(dist)
    if args.format == "json":
        print(row.to_json(), file=out)
    elif args.format == "csv":
        print(ReportRow.csv_header(params.k), file=out)
        print(row.to_csv(), file=out)
    else:
        print(row.to_text(), file=out)
    return EXIT_OK


def _parse_range(text: str) -> range:
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError:
        raise ParameterError(f"malformed range {text!r}, expected A..B") from None
    if lo < 1 or hi < lo or hi - lo > 1000:
        raise ParameterError(f"bad range {text!r}")
    return range(lo, hi + 1)


def cmd_exceptional(args, out: TextIO) -> int:
    if args.range is not None:
        ks = _parse_range(args.range)
    elif args.k is not None and args.k >= 1:
        ks = range(args.k, args.k + 1)
    else:
        raise ParameterError("give -k K (K >= 1) or --range A..B")
    records = [exceptional_primes(k, threads=args.threads) for k in ks]
    if args.format == "json":
        for rec in records:
            print(
                _dumps(
                    {
                        "k": rec.k,
                        "entries": [[n, r] for n, r in rec.entries],
                        "witnesses": {str(r): [list(p) for p in rec.witnesses[r]] for r in rec.primes},
                    }
                ),
                file=out,
            )
    elif args.format == "csv":
        print("k,n,r,u,v,u2,v2", file=out)
        for rec in records:
            for n, r in rec.entries:
                (u, v), (u2, v2) = rec.witnesses[r]
                print(f"{rec.k},{n},{r},{u},{v},{u2},{v2}", file=out)
    else:
        for rec in records:
            body = ", ".join(f"({n}, {r})" for n, r in rec.entries) or "(empty)"
            print(f"k={rec.k}: {body}", file=out)
            for n, r in rec.entries:
                print(f"  r={r} witness {rec.witnesses[r]}", file=out)
    return EXIT_OK


def table_rows(k: int, threads: int = 1) -> list[ReportRow]:
    rec = exceptional_primes(k, threads=threads)
    return [ReportRow.from_distribution(tau_distribution(GaussParams(k, n))) for n, _ in rec.entries]


def cmd_table(args, out: TextIO) -> int:
    if args.k < 1:
        raise ParameterError("k must be >= 1")
    rows = table_rows(args.k, args.threads)
    if args.format == "csv":
        print(ReportRow.csv_header(args.k), file=out)
        for row in rows:
            print(row.to_csv(), file=out)
    elif args.format == "json":
        for row in rows:
            print(row.to_json(), file=out)
    else:
        if not rows:
            print(f"k={args.k}: no exceptional primes", file=out)
        for row in rows:
            print(row.to_text(), file=out)
    return EXIT_OK


def cmd_formula(args, out: TextIO) -> int:
    if not is_prime(args.p):
        raise ParameterError(f"p = {args.p} is not prime")
    value = theorem_1_1(args.k, args.n, args.p)
    if args.format == "json":
        print(_dumps({"k": args.k, "n": args.n, "p": args.p, "value": value}), file=out)
    elif args.format == "csv":
        print("k,n,p,value", file=out)
        print(f"{args.k},{args.n},{args.p},{value}", file=out)
    else:
        print(f"closed form C({args.n},{args.k};p={args.p}) = {value}", file=out)
    return EXIT_OK


@dataclass
class VerifySummary:
    primes: int = 0
    oracle: int = 0
    definition: int = 0
    closed_form: int = 0
    closed_form_skipped: int = 0
    n2: int = 0
    first_mismatch: str | None = None

    def fail(self, msg: str) -> None:
        if self.first_mismatch is None:
            self.first_mismatch = msg


def verify(k: int, r_max: int) -> VerifySummary:
    """Cross-check every route on all primes r = nk + 1 <= r_max, n >= 2."""
    summary = VerifySummary()
    for n in range(2, (r_max - 1) // k + 1):
        if not is_prime(n * k + 1):
            continue
        params = GaussParams(k, n)
        summary.primes += 1
        dist = tau_distribution(params)
        matrix = brute_force_matrix(params)
        summary.oracle += 1
        if distribution_from_matrix(matrix) != dist:
            summary.fail(f"oracle: k={k} n={n} r={params.r}")
        injective = is_s_injective(params)
        for p in VERIFY_PRIMES:
            if p == params.r or not check_eligibility(params, CharSpec(p, p, 1)).eligible:
                continue
            generic = complexity_from_distribution(dist, p)
            summary.definition += 1
            if generic != complexity_from_matrix(matrix, p):
                summary.fail(f"definition: k={k} n={n} r={params.r} p={p}")
            if injective:
                summary.closed_form += 1
                if theorem_1_1(k, n, p) != generic:
                    summary.fail(f"closed form: k={k} n={n} r={params.r} p={p}")
            else:
                summary.closed_form_skipped += 1
        if n == 2:
            summary.n2 += 1
            if n2_distribution(k) != dist:
                summary.fail(f"n=2 closed form: k={k} r={params.r}")
    return summary


def cmd_verify(args, out: TextIO) -> int:
    if args.k < 1 or args.r_max < 2:
        raise ParameterError("need k >= 1 and --r-max >= 2")
    s = verify(args.k, args.r_max)
    if args.format == "json":
        print(_dumps(s.__dict__), file=out)
    else:
        print(f"k={args.k}, primes r <= {args.r_max}: {s.primes}", file=out)
        print(f"  algorithm vs brute force      {s.oracle}", file=out)
        print(f"  complexity vs definition      {s.definition}", file=out)
        print(f"  closed form vs algorithm      {s.closed_form} ({s.closed_form_skipped} skipped, exceptional)", file=out)
        print(f"  n=2 closed form vs algorithm  {s.n2}", file=out)
        print("  mismatches: " + (s.first_mismatch or "0"), file=out)
    return EXIT_OK if s.first_mismatch is None else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--threads", type=int, default=1, metavar="N")

    parser = _Parser(prog="gaussperiods", description="Complexity of Gauss period normal bases.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("complexity", parents=[common], help="C(n,k;q) by the generic algorithm")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-q", type=int)
    p.add_argument("--char", type=int, metavar="P", help="use q = P")
    p.set_defaults(func=cmd_complexity)

    p = sub.add_parser("profile", parents=[common], help="C for every characteristic class")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("distribution", parents=[common], help="a(tau) and a_star(tau)")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--method", choices=("algorithm", "brute", "n2"), default="algorithm")
    p.set_defaults(func=cmd_distribution)

    p = sub.add_parser("exceptional", parents=[common], help="exceptional primes via resultants")
    p.add_argument("-k", type=int)
    p.add_argument("--range", metavar="A..B")
    p.set_defaults(func=cmd_exceptional)

    p = sub.add_parser("table", parents=[common], help="distributions for every exceptional prime")
    p.add_argument("-k", type=int, required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("formula", parents=[common], help="closed form for non-exceptional r")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-p", type=int, required=True)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("verify", parents=[common], help="cross-check all routes")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--r-max", type=int, required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = out or sys.stdout
    try:
        return args.func(args, out)
    except (ParameterError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except GaussPeriodError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
