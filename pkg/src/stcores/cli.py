"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget refusal.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import sys
from math import gcd

from . import verify as verify_mod
from .enumeration import (
    armstrong_mean,
    core_size_variance,
    exact_moments,
    exact_size_distribution,
    rational_catalan,
)
from .sampling import (
    SampleConfig,
    monte_carlo_sizes,
    normalizer,
    u2_from_size,
    write_samples_binary,
    write_samples_csv,
)
from .watson import u2_cdf, u2_tail

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _coprime(args) -> None:
    if args.s < 1 or args.t < 1:
        raise UsageError(f"--s and --t must be positive, got {args.s}, {args.t}")
    g = gcd(args.s, args.t)
    if g != 1:
        raise UsageError(f"--s {args.s} and --t {args.t} are not coprime: gcd = {g}")


@contextlib.contextmanager
def _open_out(path, binary=False):
    if path in (None, "-"):
        yield sys.stdout.buffer if binary else sys.stdout
    else:
        mode = "wb" if binary else "w"
        kw = {} if binary else {"newline": "", "encoding": "utf-8"}
        with open(path, mode, **kw) as fh:
            yield fh


def cmd_enumerate(args) -> int:
    _coprime(args)
    count = rational_catalan(args.s, args.t)
    if count > args.max_count:
        print(
            f"refusing: {count} ballot words exceeds --max-count {args.max_count}",
            file=sys.stderr,
        )
        return EXIT_BUDGET
    dist = exact_size_distribution(args.s, args.t)
    text = dist.to_csv() if args.format == "csv" else dist.to_json() + "\n"
    with _open_out(args.out) as fh:
        fh.write(text)
    return EXIT_OK


def cmd_sample(args) -> int:
    _coprime(args)
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    if not 0 <= args.seed < 2**64:
        raise UsageError("--seed must be a 64-bit unsigned integer")
    if args.shards < 1:
        raise UsageError("--shards must be at least 1")
    cfg = SampleConfig(args.s, args.t, args.n, args.seed)
    sizes = monte_carlo_sizes(cfg, shard_count=args.shards, workers=args.workers)
    if args.format == "binary":
        if args.emit not in ("all", "sizes"):
            raise UsageError("binary output carries raw sizes only")
        with _open_out(args.out, binary=True) as fh:
            write_samples_binary(fh, sizes, args.s, args.t)
    elif args.format == "json":
        norm = normalizer(args.s, args.t)
        values = {
            "sizes": [str(int(x)) for x in sizes],
            "normalized": [int(x) / norm for x in sizes],
            "u2": [u2_from_size(int(x), args.s, args.t) for x in sizes],
        }
        keys = ["sizes", "normalized"] if args.emit == "all" else [args.emit]
        doc = {"s": args.s, "t": args.t, "n": args.n, "seed": str(args.seed)}
        doc.update({k: values[k] for k in keys})
        with _open_out(args.out) as fh:
            fh.write(json.dumps(doc) + "\n")
    else:
        with _open_out(args.out) as fh:
            write_samples_csv(fh, sizes, args.s, args.t, args.emit)
    return EXIT_OK


def cmd_moments(args) -> int:
    _coprime(args)
    if args.order < 1:
        raise UsageError("--order must be at least 1")
    if rational_catalan(args.s, args.t) > args.max_count:
        print(f"refusing: enumeration exceeds --max-count {args.max_count}", file=sys.stderr)
        return EXIT_BUDGET
    m = exact_moments(exact_size_distribution(args.s, args.t), max(args.order, 2))
    mean_f = armstrong_mean(args.s, args.t)
    var_f = core_size_variance(args.s, args.t)
    ok = m.mean == mean_f and m.variance == var_f
    with _open_out(args.out) as fh:
        fh.write("quantity,exact,formula,match\n")
        fh.write(f"mean,{m.mean},{mean_f},{m.mean == mean_f}\n")
        fh.write(f"variance,{m.variance},{var_f},{m.variance == var_f}\n")
        for r in range(1, args.order + 1):
            fh.write(f"raw_{r},{m.raw[r - 1]},,\n")
        for r in range(2, args.order + 1):
            fh.write(f"central_{r},{m.central[r - 1]},,\n")
    return EXIT_OK if ok else EXIT_FAIL


def _parse_table(spec: str) -> list[float]:
    try:
        a, b, step = (float(x) for x in spec.split(":"))
    except ValueError:
        raise UsageError(f"--table expects start:stop:step, got {spec!r}")
    if step <= 0 or b < a:
        raise UsageError("--table needs step > 0 and stop >= start")
    count = int(round((b - a) / step)) + 1
    return [a + i * step for i in range(count)]


def cmd_limit(args) -> int:
    xs: list[float] = []
    for e in args.eval or []:
        try:
            xs.extend(float(v) for v in e.split(","))
        except ValueError:
            raise UsageError(f"--eval expects numbers, got {e!r}")
    if args.table:
        xs.extend(_parse_table(args.table))
    if not xs:
        raise UsageError("limit needs --eval or --table")
    with _open_out(args.out) as fh:
        fh.write("x,tail,cdf\n")
        for x in xs:
            fh.write(f"{x:.10g},{u2_tail(x):.17g},{u2_cdf(x):.17g}\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max_sum < 2:
        raise UsageError("--max-sum must be at least 2")
    with _open_out(args.out) as fh:
        ok = verify_mod.run(args.max_sum, fh)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="stcores", description="Simultaneous (s,t)-core partitions and Watson's U².")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def st_args(sp):
        sp.add_argument("--s", type=int, required=True)
        sp.add_argument("--t", type=int, required=True)

    def out_arg(sp):
        sp.add_argument("--out", default="-", help="output path, '-' for stdout")

    e = sub.add_parser("enumerate", help="exact size distribution of all (s,t)-cores")
    st_args(e)
    e.add_argument("--format", choices=("csv", "json"), default="csv")
    e.add_argument("--max-count", type=int, default=10**8)
    out_arg(e)
    e.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("sample", help="Monte Carlo core sizes")
    st_args(s)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--emit", choices=("all", "sizes", "normalized", "u2"), default="all")
    s.add_argument("--format", choices=("csv", "json", "binary"), default="csv")
    s.add_argument("--shards", type=int, default=1)
    s.add_argument("--workers", type=int, default=None)
    out_arg(s)
    s.set_defaults(func=cmd_sample)

    m = sub.add_parser("moments", help="exact moments next to the closed forms")
    st_args(m)
    m.add_argument("--order", type=int, default=2)
    m.add_argument("--max-count", type=int, default=10**8)
    out_arg(m)
    m.set_defaults(func=cmd_moments)

    lim = sub.add_parser("limit", help="tail and CDF of the limiting U² law")
    lim.add_argument("--eval", action="append", help="x value(s), comma separated")
    lim.add_argument("--table", help="start:stop:step")
    out_arg(lim)
    lim.set_defaults(func=cmd_limit)

    v = sub.add_parser("verify", help="cross-check every coprime pair with s + t <= max-sum")
    v.add_argument("--max-sum", type=int, default=12)
    out_arg(v)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"stcores: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
