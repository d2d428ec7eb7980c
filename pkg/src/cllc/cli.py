"""Command line front end: ``cllc <subcommand> ...``.

Exit codes: 0 all checks pass, 1 counterexample (a property failed),
2 usage error, 3 internal consistency error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .analysis import certify_real_rooted, hermite_biehler_check, is_log_concave
from .errors import ConsistencyError, UsageError
from .iopoly import f_of_partition, f_poly, reduce_partition
from .perm import Partition, Permutation
from .polynomial import parse as parse_poly
from .polynomial import to_json, to_text
from .scanner import (
    EXIT_CONSISTENCY,
    EXIT_COUNTEREXAMPLE,
    EXIT_OK,
    EXIT_USAGE,
    format_table,
    scan,
    scan_status,
    verify_identities,
    write_jsonl,
)
from .stirling import f_cyclic_closed, f_cyclic_recurrence, hultman, hultman_brute, stirling_first


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_stirling(args) -> int:
    value = stirling_first(args.n, args.k)
    _emit(args, {"n": args.n, "k": args.k, "value": str(value)}, str(value))
    return EXIT_OK


def cmd_hultman(args) -> int:
    value = hultman_brute(args.n, args.k) if args.brute else hultman(args.n, args.k)
    payload = {"n": args.n, "k": args.k, "value": str(value), "method": "brute" if args.brute else "closed"}
    _emit(args, payload, str(value))
    return EXIT_OK


def cmd_fn(args) -> int:
    n = args.n
    if n < 1:
        raise UsageError("--n must be >= 1")
    if args.method == "closed":
        p = f_cyclic_closed(n)
    elif args.method == "recurrence":
        p = f_cyclic_recurrence(max(n, 2))[n - 1]
    else:
        p = f_poly(Permutation.rho(n), workers=args.threads)
    payload = {"n": n, "method": args.method, "coeffs": to_json(p), "text": to_text(p)}
    _emit(args, payload, to_text(p))
    return EXIT_OK


def cmd_fpoly(args) -> int:
    if args.json:
        args.format = "json"
    if (args.partition is None) == (args.perm is None):
        raise UsageError("give exactly one of --partition or --perm")
    if args.perm is not None:
        pi = Permutation.parse(args.perm, args.n)
        lam = pi.cycle_type()
        if args.no_reduce:
            p = f_poly(pi, workers=args.threads)
        else:
            p = f_of_partition(lam, reduce=True, workers=args.threads)
    else:
        lam = Partition.parse(args.partition)
        p = f_of_partition(lam, reduce=not args.no_reduce, workers=args.threads)
    red = reduce_partition(lam)
    reduced = not args.no_reduce and red.core != lam
    payload = {
        "partition": list(lam.parts),
        "coeffs": to_json(p),
        "text": to_text(p),
        "reduced_from": list(red.core.parts) if reduced else None,
        "multiplier": str(red.multiplier) if reduced else "1",
    }
    _emit(args, payload, to_text(p))
    return EXIT_OK


def cmd_certify(args) -> int:
    p = parse_poly(args.poly)
    want_all = not (args.lc or args.rr or args.hb)
    out = {"polynomial": to_text(p), "coeffs": to_json(p)}
    status = EXIT_OK
    if args.lc or want_all:
        lc = is_log_concave(p)
        out["lc"] = {"log_concave": lc.log_concave, "witness": lc.witness, "contiguous": lc.contiguous}
        if not lc.log_concave:
            status = EXIT_COUNTEREXAMPLE
    if args.rr or want_all:
        cert = certify_real_rooted(p)
        out["rr"] = cert.to_json()
        if not cert.real_rooted:
            status = EXIT_COUNTEREXAMPLE
    if args.hb:
        rep = hermite_biehler_check(p, weak=not args.strict)
        out["hb"] = rep.to_json()
        if not rep.ok:
            status = EXIT_COUNTEREXAMPLE
    print(json.dumps(out, sort_keys=True))
    return status


def cmd_scan(args) -> int:
    records = scan(args.min, args.max, reduce=not args.no_reduce, workers=args.threads,
                   samples=args.samples, cache=args.cache)
    timing = not args.no_timing
    fh = open(args.out, "w") if args.out else sys.stdout
    try:
        if args.format == "json":
            write_jsonl(records, fh, timing=timing)
        else:
            fh.write(format_table(records, timing=timing) + "\n")
    finally:
        if args.out:
            fh.close()
    return scan_status(records)


def cmd_verify(args) -> int:
    report = verify_identities(args.max)
    _emit(args, report.to_json(), report.format())
    return EXIT_OK if report.ok else EXIT_CONSISTENCY


def _threads_default() -> int:
    env = os.environ.get("CLLC_THREADS")
    return int(env) if env else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cllc", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["text", "json"], default="text", help="output format")

    p = sub.add_parser("stirling", parents=[fmt], help="unsigned Stirling number of the first kind")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_stirling)

    p = sub.add_parser("hultman", parents=[fmt], help="Hultman number H(n, k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--brute", action="store_true", help="count by enumerating (n+1)-cycles")
    p.set_defaults(func=cmd_hultman)

    p = sub.add_parser("fn", parents=[fmt], help="F_n for the n-cycle type")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["closed", "recurrence", "enum"], default="closed")
    p.add_argument("--threads", type=int, default=None, help="workers for --method enum")
    p.set_defaults(func=cmd_fn)

    p = sub.add_parser("fpoly", parents=[fmt], help="F_lambda for a partition or permutation")
    p.add_argument("--partition", help='comma-separated weakly decreasing parts, e.g. "3,1,1"')
    p.add_argument("--perm", help='cycle notation "(1 2 3)(4 5)" or one-line "[2,3,1,5,4]"')
    p.add_argument("--n", type=int, default=None, help="size for --perm when trailing fixed points are omitted")
    p.add_argument("--no-reduce", action="store_true", help="enumerate directly instead of stripping unit parts")
    p.add_argument("--json", action="store_true", help="same as --format json")
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=cmd_fpoly)

    p = sub.add_parser("certify", help="log-concavity / real-rootedness / Hermite-Biehler certificate (JSON)")
    p.add_argument("--poly", required=True, help='e.g. "8 + 15*z + z^2"')
    p.add_argument("--lc", action="store_true", help="log-concavity")
    p.add_argument("--rr", action="store_true", help="real-rootedness")
    p.add_argument("--hb", action="store_true", help="Hermite-Biehler even/odd-part check")
    p.add_argument("--strict", action="store_true", help="strict (not weak) Hermite-Biehler mode")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("scan", help="certify F_lambda for every partition of min..max")
    p.add_argument("--min", type=int, default=1)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--threads", type=int, default=None, help="worker processes (env CLLC_THREADS overrides)")
    p.add_argument("--no-reduce", action="store_true", help="enumerate every partition directly")
    p.add_argument("--format", choices=["json", "table", "text"], default="table")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--cache", help="JSON-lines cache of computed F_lambda")
    p.add_argument("--samples", type=int, default=1, help="random conjugates per type-invariance check")
    p.add_argument("--no-timing", action="store_true", help="write ms = 0 so reports are byte-reproducible")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", parents=[fmt], help="check every exact identity up to --max")
    p.add_argument("--max", type=int, default=8)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if hasattr(args, "threads"):
        env = os.environ.get("CLLC_THREADS")
        if env:
            args.threads = int(env)
        elif args.threads is None:
            args.threads = 1
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"cllc {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as exc:
        print(f"cllc {args.command}: internal consistency error: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY


if __name__ == "__main__":
    sys.exit(main())
