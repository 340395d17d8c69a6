"""Command-line front end: ``qudit-ns <subcommand> [flags]``.

Exit codes: 0 success, 1 usage or validation error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .optimizer import DEFAULT_BUDGET, Method, Optimum, maximize
from .partitions import PartitionError, make_partition
from .radicals import qubit_rstar
from .rates import balanced_rate_series, code_rate, round_sig
from .schur_weyl import BudgetExceeded, decomposition, frobenius, qubit_multiplicity
from .verify import CHECKS, VerificationReport, run_check

FORMATS = ("table", "csv", "json")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _tuple_csv(parts) -> str:
    return "(" + ";".join(str(x) for x in parts) + ")"


def _tuple_table(parts) -> str:
    return "(" + ",".join(str(x) for x in parts) + ")"


def _table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows]
    return "\n".join(lines) + "\n"


def _csv(header: list[str], rows: list[list[str]]) -> str:
    return "\n".join(",".join(r) for r in [header] + rows) + "\n"


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _emit(fmt: str, header, rows, obj, table_rows=None, footer: str = "") -> str:
    if fmt == "json":
        return _json(obj)
    if fmt == "csv":
        return _csv(header, rows) + footer
    return _table(header, table_rows if table_rows is not None else rows) + footer


# -- subcommands ----------------------------------------------------------------


def _require(cond: bool, msg: str):
    if not cond:
        raise UsageError(msg)


def cmd_decompose(args) -> str:
    _require(args.d is not None and args.d >= 2, "--d is required and must be >= 2")
    _require(args.n is not None and args.n >= 1, "--n is required and must be >= 1")
    table = decomposition(args.d, args.n, budget=args.budget)
    expected = args.d**args.n
    marker = "ok" if table.consistent else "MISMATCH"
    rows = [[_tuple_csv(b.partition), str(b.multiplicity), str(b.dimension)] for b in table.blocks]
    trows = [[_tuple_table(b.partition), str(b.multiplicity), str(b.dimension)] for b in table.blocks]
    obj = {
        "d": table.d,
        "n": table.n,
        "blocks": [
            {"partition": list(b.partition.parts), "f": str(b.multiplicity), "g": str(b.dimension)}
            for b in table.blocks
        ],
        "total": str(table.total),
        "expected": str(expected),
        "consistent": table.consistent,
    }
    if args.format == "csv":
        footer = f"total,{table.total},{marker}\n"
    else:
        footer = f"total = {table.total} = {args.d}^{args.n} [{marker}]\n"
    return _emit(args.format, ["partition", "f", "g"], rows, obj, trows, footer)


def optimum_json(opt: Optimum) -> dict:
    return {
        "d": opt.d,
        "n": opt.n,
        "max_multiplicity": str(opt.max_multiplicity),
        "argmax": [list(p.parts) for p in opt.argmax],
        "tie": opt.tie,
        "method": opt.method.value,
    }


def cmd_maximize(args, err: TextIO) -> str:
    _require(args.d is not None and args.d >= 2, "--d is required and must be >= 2")
    _require(args.n is not None and args.n >= 1, "--n is required and must be >= 1")
    opt = maximize(args.d, args.n, method=args.method, budget=args.budget)
    if opt.method is Method.LOCAL and opt.heuristic:
        err.write(f"warning: local search for d={opt.d} is heuristic; the result may not be the global maximum\n")
    header = ["d", "n", "partition", "f", "tie", "method"]
    rows = [[str(opt.d), str(opt.n), _tuple_csv(p), str(opt.max_multiplicity), str(opt.tie).lower(), opt.method.value] for p in opt.argmax]
    trows = [[r[0], r[1], _tuple_table(p), *r[3:]] for r, p in zip(rows, opt.argmax)]
    return _emit(args.format, header, rows, optimum_json(opt), trows)


def cmd_rate(args) -> str:
    if args.partition:
        try:
            parts = [int(x) for x in args.partition.replace(";", ",").strip("()").split(",") if x.strip()]
        except ValueError:
            raise UsageError(f"--partition must be comma-separated integers, got {args.partition!r}")
        p = make_partition(parts, args.d if args.d else len(parts))
    else:
        _require(args.d is not None and args.d >= 2, "--d is required (or give --partition)")
        _require(args.n is not None and args.n >= 1, "--n is required and must be >= 1 (or give --partition)")
        p = maximize(args.d, args.n, budget=args.budget).partition
    _require(p.d >= 2, "--d must be >= 2")
    _require(p.n >= 1, "partition must have n >= 1")
    f = frobenius(p.parts)
    rate = round_sig(code_rate(p))
    header = ["d", "n", "partition", "f", "rate"]
    rows = [[str(p.d), str(p.n), _tuple_csv(p), str(f), repr(rate)]]
    obj = {"d": p.d, "n": p.n, "partition": list(p.parts), "f": str(f), "rate": rate}
    return _emit(args.format, header, rows, obj, [[rows[0][0], rows[0][1], _tuple_table(p), *rows[0][3:]]])


def cmd_rate_series(args) -> str:
    _require(args.d is not None and args.d >= 2, "--d is required and must be >= 2")
    _require(args.kmax is not None and args.kmax >= 1, "--kmax is required and must be >= 1")
    series = balanced_rate_series(args.d, args.kmax)
    header = ["k", "n", "rate", "f_bits"]
    rows = [[str(e.k), str(e.n), repr(round_sig(e.rate)), str(e.f_bits)] for e in series.entries]
    obj = {
        "d": series.d,
        "entries": [{"k": e.k, "n": e.n, "rate": round_sig(e.rate), "f_bits": e.f_bits} for e in series.entries],
    }
    return _emit(args.format, header, rows, obj)


def qubit_table_rows(n_max: int) -> list[tuple[int, int, int, int]]:
    """(n, r*, f(n-r*, r*), floor(log2 f)) for n = 3..n_max."""
    out = []
    for n in range(3, n_max + 1):
        r = qubit_rstar(n)
        f = qubit_multiplicity(n, r)
        out.append((n, r, f, f.bit_length() - 1))
    return out


def cmd_qubit_table(args) -> str:
    _require(args.nmax is not None and args.nmax >= 3, "--nmax is required and must be >= 3")
    data = qubit_table_rows(args.nmax)
    header = ["n", "r*", "f", "floor_log2_f"]
    rows = [[str(x) for x in row] for row in data]
    obj = {"rows": [{"n": n, "r_star": r, "f": str(f), "floor_log2_f": b} for n, r, f, b in data]}
    return _emit(args.format, header, rows, obj)


def report_json(rep: VerificationReport) -> dict:
    return {
        "check": rep.check_name,
        "params": rep.params,
        "status": rep.status,
        "counterexamples": [{"input": i, "expected": e, "actual": a} for i, e, a in rep.counterexamples],
    }


def cmd_verify(args, err: TextIO) -> tuple[str, int]:
    _require(args.check is not None, f"--check is required; choose from {', '.join(CHECKS)}")
    _require(args.check in CHECKS, f"unknown check {args.check!r} for --check; choose from {', '.join(CHECKS)}")
    for flag in ("nmax", "kmax", "d"):
        v = getattr(args, flag)
        _require(v is None or v >= 1, f"--{flag} must be >= 1")
    rep = run_check(args.check, d=args.d, nmax=args.nmax, kmax=args.kmax, jobs=args.jobs)
    err.write(f"elapsed: {rep.elapsed:.2f}s\n")
    header = ["check", "status", "input", "expected", "actual"]
    rows = [[rep.check_name, rep.status, *c] for c in rep.counterexamples] or [[rep.check_name, rep.status, "", "", ""]]
    out = _emit(args.format, header, rows, report_json(rep))
    return out, 0 if rep.status == "pass" else 2


# -- entry point ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--d", type=int, help="local dimension of each qudit")
    common.add_argument("--n", type=int, help="number of physical qudits")
    common.add_argument("--nmax", type=int, help="largest n in a sweep or table")
    common.add_argument("--kmax", type=int, help="largest k in a balanced-rate series")
    common.add_argument("--method", default="auto", choices=["auto", "brute", "closed", "local", "incremental"])
    common.add_argument("--format", default="table", choices=FORMATS)
    common.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max partitions to enumerate")

    parser = _Parser(prog="qudit-ns", description="Noiseless subsystems of collective rotation channels.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.add_parser("decompose", parents=[common], help="list the blocks I_f (x) M_g")
    sub.add_parser("maximize", parents=[common], help="partitions maximizing f")
    rate = sub.add_parser("rate", parents=[common], help="log_d f / n for one partition")
    rate.add_argument("--partition", help="comma-separated parts, e.g. 6,4")
    sub.add_parser("rate-series", parents=[common], help="rates of (k,...,k) for k = 1..kmax")
    sub.add_parser("qubit-table", parents=[common], help="r*, f and floor(log2 f) for d = 2")
    verify = sub.add_parser("verify", parents=[common], help="run an invariant sweep")
    verify.add_argument("--check", help="one of: " + ", ".join(CHECKS))
    return parser


def run_cli(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
        if args.command is None:
            raise UsageError(f"qudit-ns: error: a subcommand is required\n{parser.format_usage()}")
        _require(args.jobs >= 1, "--jobs must be >= 1")
        _require(args.budget >= 1, "--budget must be >= 1")
        code = 0
        if args.command == "decompose":
            text = cmd_decompose(args)
        elif args.command == "maximize":
            text = cmd_maximize(args, err)
        elif args.command == "rate":
            text = cmd_rate(args)
        elif args.command == "rate-series":
            text = cmd_rate_series(args)
        elif args.command == "qubit-table":
            text = cmd_qubit_table(args)
        else:
            text, code = cmd_verify(args, err)
    except SystemExit as exc:  # --help
        return 0 if not exc.code else 1
    except UsageError as exc:
        msg = str(exc).rstrip("\n")
        if "usage:" not in msg:
            msg = f"qudit-ns: error: {msg}\n{parser.format_usage().rstrip()}"
        err.write(msg + "\n")
        return 1
    except (BudgetExceeded, PartitionError, ValueError) as exc:
        err.write(f"qudit-ns: error: {exc}\n")
        return 1
    out.write(text)
    return code


def main() -> None:
    sys.exit(run_cli())
