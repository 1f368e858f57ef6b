"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (printed to stderr as
``error:<code>: <message>``), 2 on a usage error.
"""

import argparse
import dataclasses
import json
import sys

from . import bench
from .errors import DecPeriodError, OracleRangeExceeded
from .expansion import expand, format_expansion
from .factor import factorize
from .period import ORACLE_CAP, iter_oracle, period_length, prime_record
from .scan import scan_full_reptend, scan_wieferich_m

SCHEMA_VERSION = 1


def _fraction(text):
    q, sep, n = text.partition("/")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected q/n, got {text!r}")
    try:
        return int(q), int(n)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers in q/n, got {text!r}") from None


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def build_parser():
    parser = argparse.ArgumentParser(prog="decperiod", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("period", help="preperiod and period length of 1/n")
    p.add_argument("n", type=int)

    p = sub.add_parser("expand", help="exact decimal expansion of q/n")
    p.add_argument("fraction", type=_fraction, metavar="q/n")
    p.add_argument("--max-period-digits", type=int, metavar="K", help="truncate the displayed period")

    p = sub.add_parser("factor", help="prime factorization of n")
    p.add_argument("n", type=int)

    p = sub.add_parser("record", help="l_p, m_p and full-reptend flag of a prime")
    p.add_argument("p", type=int)

    p = sub.add_parser("scan", help="prime scans")
    p.add_argument("kind", choices=["reptend", "wieferich"])
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--workers", type=_positive, default=1)

    p = sub.add_parser("verify", help="check period against the long-division oracle for 1..N")
    p.add_argument("--limit", type=_positive, required=True)

    p = sub.add_parser("bench", help="time the fast path against the oracle")
    p.add_argument("--limit", type=_positive, required=True)
    p.add_argument("--samples", type=_positive, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--min", type=_positive, default=2, dest="lo", help="smallest sampled n (default 2)")

    for name in sub.choices:
        sub.choices[name].add_argument("--json", action="store_true", help="emit a JSON record")
    return parser


def _cmd_period(args):
    return {"n": args.n}, dataclasses.asdict(period_length(args.n))


def _cmd_expand(args):
    q, n = args.fraction
    return {"q": q, "n": n}, dataclasses.asdict(expand(q, n))


def _cmd_factor(args):
    fac = factorize(args.n)
    return {"n": args.n}, {"n": fac.n, "factors": [list(pe) for pe in fac.factors]}


def _cmd_record(args):
    return {"p": args.p}, dataclasses.asdict(prime_record(args.p))


def _cmd_scan(args):
    run = scan_full_reptend if args.kind == "reptend" else scan_wieferich_m
    report = run(args.limit, workers=args.workers)
    results = dataclasses.asdict(report)
    results["kind"] = report.kind.value
    results["hits"] = list(report.hits)
    return {"kind": args.kind, "limit": args.limit}, results


def _cmd_verify(args):
    if args.limit > ORACLE_CAP:
        raise OracleRangeExceeded(f"verify is capped at {ORACLE_CAP}, got {args.limit}")
    checked = 0
    first = None
    mismatches = 0
    for slow in iter_oracle(range(1, args.limit + 1)):
        checked += 1
        fast = period_length(slow.n)
        if fast != slow:
            mismatches += 1
            if first is None:
                first = {"n": slow.n, "fast": dataclasses.asdict(fast), "oracle": dataclasses.asdict(slow)}
    results = {"checked": checked, "mismatches": mismatches, "first_mismatch": first}
    return {"limit": args.limit}, results


def _cmd_bench(args):
    ns = bench.sample_inputs(args.samples, args.lo, args.limit, args.seed)
    res = bench.compare(ns)
    results = {
        "samples": list(res.samples),
        "fast_seconds": res.fast_seconds,
        "naive_seconds": res.naive_seconds,
        "speedup": res.speedup,
        "mismatches": res.mismatches,
    }
    inputs = {"limit": args.limit, "samples": args.samples, "seed": args.seed, "min": args.lo}
    return inputs, results


_COMMANDS = {
    "period": _cmd_period,
    "expand": _cmd_expand,
    "factor": _cmd_factor,
    "record": _cmd_record,
    "scan": _cmd_scan,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}


def to_json(command, inputs, results):
    record = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
    }
    return json.dumps(record, sort_keys=True)


def _plain_value(value):
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return " ".join(_plain_value(v) if not isinstance(v, list) else "^".join(map(str, v)) for v in value)
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True)
    return str(value)


def to_plain(command, results, args):
    lines = []
    trunc = getattr(args, "max_period_digits", None)
    for key, value in results.items():
        if command == "expand" and key == "period_digits" and trunc is not None and len(value) > trunc:
            value = value[:trunc] + f"…(truncated, full length {len(value)})"
        lines.append(f"{key}: {_plain_value(value)}")
    if command == "expand":
        e = expand(*args.fraction)
        lines.append(f"decimal: {format_expansion(e, trunc)}")
    if command == "factor":
        lines.append(f"product: {factorize(args.n)}")
    return "\n".join(lines)


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        inputs, results = _COMMANDS[args.command](args)
    except DecPeriodError as exc:
        print(f"error:{exc.code}: {exc}", file=stderr)
        return 1
    if args.json:
        print(to_json(args.command, inputs, results), file=stdout)
    else:
        print(to_plain(args.command, results, args), file=stdout)
    if args.command == "verify" and results["mismatches"]:
        print(f"error:verify_mismatch: {results['mismatches']} mismatches, first at n={results['first_mismatch']['n']}",
              file=stderr)
        return 1
    return 0


def main():
    sys.exit(run())
