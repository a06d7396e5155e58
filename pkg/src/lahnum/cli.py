"""Command-line front end: ``lahnum {table,verify,props,series}``.

Exit codes: 0 success, 1 usage error, 2 verification failure.
Big integers are written as decimal strings in JSON; reals carry 17
significant digits in CSV and text output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .exact_core import LahTable
from .factorial_basis import alternating_generating_series, lah_generating_series
from .integral_verify import DEFAULT_GRID, IdentityReport, VerificationError, run_suite
from .sequence_props import (
    absolute_convexity_check,
    convexity_check,
    lah_total_sequence,
    root_certificate,
)

TABLE_CAP = 500
FORMATS = ("json", "csv", "text")
GRID_KEYS = frozenset(DEFAULT_GRID)

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class SuiteConfig:
    n_max: int = 6
    tol: float = 1e-8
    grid: dict[str, list] = field(default_factory=dict)
    output_format: str = "text"
    output_path: Optional[str] = None

    def __post_init__(self) -> None:
        if not self.tol > 0:
            raise UsageError(f"--tol must be positive, got {self.tol}")
        if self.n_max < 1:
            raise UsageError(f"--n-max must be >= 1, got {self.n_max}")
        unknown = set(self.grid) - GRID_KEYS
        if unknown:
            raise UsageError(f"unknown grid keys: {sorted(unknown)}")
        if self.output_format not in FORMATS:
            raise UsageError(f"unknown format {self.output_format!r}")

    def suite_grid(self) -> dict[str, list]:
        return {"n": list(range(1, self.n_max + 1)), **self.grid}


def fmt_real(v: float) -> str:
    return format(v, ".17g")


def _csv_text(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# -- table -----------------------------------------------------------------

def cmd_table(n_max: int, fmt: str = "text") -> str:
    """Render the Lah triangle through row ``n_max`` with the row totals."""
    if n_max < 1:
        raise UsageError("--n-max must be >= 1")
    if n_max > TABLE_CAP:
        raise UsageError(f"refusing n_max={n_max}: above the safety cap of {TABLE_CAP}")
    table = LahTable.build(n_max)
    totals = table.totals()
    if fmt == "json":
        rows = [
            {"n": n, "values": [str(v) for v in table.row(n)], "total": str(totals[n - 1])}
            for n in range(1, n_max + 1)
        ]
        return json.dumps(rows, indent=1)
    if fmt == "csv":
        lines = [
            (n, k, table[(n, k)], totals[n - 1])
            for n in range(1, n_max + 1)
            for k in range(1, n + 1)
        ]
        return _csv_text(("n", "k", "value", "total"), lines)
    out = []
    for n in range(1, n_max + 1):
        out.append(f"{n:>3}: " + " ".join(str(v) for v in table.row(n)) + f"  | total {totals[n - 1]}")
    return "\n".join(out) + "\n"


# -- verify ----------------------------------------------------------------

def _report_row(r: IdentityReport) -> list:
    q = r.rhs
    return [
        r.identity_id,
        json.dumps(r.parameters, sort_keys=True),
        fmt_real(r.lhs),
        "" if q is None else fmt_real(q.value),
        "" if q is None else fmt_real(q.error_estimate),
        fmt_real(r.abs_error),
        fmt_real(r.rel_error),
        str(r.passed).lower(),
    ]


def render_reports(reports: Sequence[IdentityReport], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in reports], indent=1)
    if fmt == "csv":
        header = ("identity_id", "parameters", "lhs", "rhs_value", "error_estimate",
                  "abs_error", "rel_error", "passed")
        return _csv_text(header, [_report_row(r) for r in reports])
    lines = []
    for r in reports:
        params = " ".join(f"{k}={v}" for k, v in r.parameters.items())
        lines.append(
            f"{'PASS' if r.passed else 'FAIL'} {r.identity_id} [{params}] "
            f"lhs={fmt_real(r.lhs)} abs_err={r.abs_error:.3g} rel_err={r.rel_error:.3g}"
        )
    passed = sum(r.passed for r in reports)
    lines.append(f"{passed}/{len(reports)} checks passed")
    return "\n".join(lines) + "\n"


def cmd_verify(config: SuiteConfig) -> tuple[int, str]:
    """Run the identity catalog. Returns ``(exit_status, rendered_reports)``."""
    reports = run_suite(config.tol, config.suite_grid())
    status = EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED
    return status, render_reports(reports, config.output_format)


# -- props -----------------------------------------------------------------

def cmd_props(n_max: int = 20, max_total: int = 25, m_max: int = 12, fmt: str = "text") -> tuple[int, str]:
    """Absolute convexity of the Lah row sums and root certificates for ``P_{m,1}``."""
    if min(n_max, max_total, m_max) < 1:
        raise UsageError("--n-max, --max-total and --m-max must be >= 1")
    seq = lah_total_sequence(max(n_max, max_total))
    violations = absolute_convexity_check(seq, max_total, start=1)
    convex = convexity_check(seq, (1, n_max), start=1)
    certs = [root_certificate(m) for m in range(1, m_max + 1)]
    good = sum(c.real_distinct_nonpositive for c in certs)
    summary = (
        f"violations: {'none' if not violations else len(violations)}; "
        f"certificates: {good}/{len(certs)} real-distinct-nonpositive"
    )
    ok = not violations and convex and good == len(certs)
    status = EXIT_OK if ok else EXIT_FAILED
    if fmt == "json":
        body = json.dumps({
            "max_total": max_total,
            "convex_window": [1, n_max],
            "convex": convex,
            "violations": [{"n": n, "k": k, "value": str(v)} for n, k, v in violations],
            "certificates": [c.to_dict() for c in certs],
            "summary": summary,
        }, indent=1)
    elif fmt == "csv":
        header = ("m", "degree", "root_count_negative", "root_count_zero",
                  "root_count_positive", "distinct", "all_real")
        rows = [[c.to_dict()[h] for h in header] for c in certs]
        body = _csv_text(header, rows)
        if violations:
            body += _csv_text(("n", "k", "value"), violations)
    else:
        lines = [summary, f"convex on n=1..{n_max}: {convex}"]
        lines += [f"  Delta^{2 * k} L_{n} = {v}" for n, k, v in violations]
        for c in certs:
            lines.append(
                f"  m={c.m}: zero={c.root_count_zero} negative={c.root_count_negative} "
                f"positive={c.root_count_positive} distinct={c.distinct} all_real={c.all_real}"
            )
        body = "\n".join(lines) + "\n"
    return status, body


# -- series ----------------------------------------------------------------

def cmd_series(ks: Sequence[int], order: int, alternating: bool = False, fmt: str = "text") -> str:
    """Coefficients of the Lah generating functions, with ``n!`` times each."""
    rows = []
    for k in ks:
        if k < 1 or order < k:
            raise UsageError(f"need 1 <= k <= order, got k={k}, order={order}")
        s = (alternating_generating_series if alternating else lah_generating_series)(k, order)
        for n in range(order + 1):
            c = s[n]
            rows.append((k, n, c, c * math.factorial(n)))
    if fmt == "json":
        return json.dumps([
            {"k": k, "n": n, "coefficient": str(c), "scaled": str(sc)} for k, n, c, sc in rows
        ], indent=1)
    if fmt == "csv":
        return _csv_text(("k", "n", "coefficient", "scaled"), [(k, n, str(c), str(sc)) for k, n, c, sc in rows])
    return "".join(f"k={k} n={n}: {c}  (n! * coeff = {sc})\n" for k, n, c, sc in rows)


# -- argument parsing --------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _float_list(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lahnum", description="Lah numbers: tables and identity checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p: argparse.ArgumentParser, n_max_default: int) -> None:
        p.add_argument("--n-max", type=int, default=n_max_default)
        p.add_argument("--format", choices=FORMATS, default="text")
        p.add_argument("--out", default=None, help="write to this file instead of stdout")

    p = sub.add_parser("table", help="print the Lah triangle and row totals")
    common(p, 10)

    p = sub.add_parser("verify", help="run the identity catalog")
    common(p, 6)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--grid-x", type=_float_list, default=None)
    p.add_argument("--grid-z", type=_float_list, default=None)
    p.add_argument("--grid-k", type=_int_list, default=None)

    p = sub.add_parser("props", help="absolute convexity and root certificates")
    common(p, 20)
    p.add_argument("--max-total", type=int, default=25)
    p.add_argument("--m-max", type=int, default=12)

    p = sub.add_parser("series", help="generating-function coefficients")
    common(p, 10)
    p.add_argument("--grid-k", type=_int_list, default=[1, 2, 3])
    p.add_argument("--alternating", action="store_true")
    return parser


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    status = EXIT_OK
    try:
        if args.command == "table":
            text = cmd_table(args.n_max, args.format)
        elif args.command == "verify":
            grid = {}
            for key, val in (("x", args.grid_x), ("z", args.grid_z), ("k", args.grid_k)):
                if val is not None:
                    if not val:
                        raise UsageError(f"--grid-{key} is empty")
                    grid[key] = val
            config = SuiteConfig(args.n_max, args.tol, grid, args.format, args.out)
            status, text = cmd_verify(config)
        elif args.command == "props":
            status, text = cmd_props(args.n_max, args.max_total, args.m_max, args.format)
        else:
            text = cmd_series(args.grid_k, args.n_max, args.alternating, args.format)
    except UsageError as exc:
        print(f"lahnum: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as exc:
        print(f"lahnum: verification failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    _emit(text, args.out)
    if status != EXIT_OK:
        print("lahnum: one or more checks failed", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
