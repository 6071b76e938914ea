"""Command-line entry point.

Exit codes: 0 success, 1 verification or I/O failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

from oddzeta.depthmap import dmatrix, pairs
from oddzeta.periodspace import w_basis
from oddzeta.ratcore import rank
from oddzeta.relspace import relations
from oddzeta.report import (
    SUITES,
    RunConfig,
    block_ok,
    fmt_rational,
    make_report,
    to_csv,
    to_json,
    weight_block,
)

DEFAULT_CEILING = 101
SIGN_ALIASES = {"+": "+", "plus": "+", "-": "-", "minus": "-", "full": "full"}


@dataclass(frozen=True)
class SweepConfig:
    max_n: int = DEFAULT_CEILING
    out: str | None = None
    format: str = "json"
    jobs: int = 1
    run: RunConfig = RunConfig()


def _odd_weight(parser: argparse.ArgumentParser, n: int) -> int:
    if n % 2 == 0 or n < 5:
        parser.error(f"weight must be odd and >= 5, got {n}")
    return n


def _suites(parser, text: str | None, default=("exact", "lemmas")) -> tuple:
    if not text:
        return default
    out = tuple(s.strip() for s in text.split(",") if s.strip())
    bad = [s for s in out if s not in SUITES]
    if bad or not out:
        parser.error(f"unknown suite(s) {bad}; choose from {','.join(SUITES)}")
    return tuple(s for s in SUITES if s in out)


def cmd_dims(args, parser) -> int:
    lo = _odd_weight(parser, args.n_min)
    hi = _odd_weight(parser, args.n_max if args.n_max is not None else args.n_min)
    if hi < lo:
        parser.error("empty weight range")
    rows = []
    for n in range(lo, hi + 1, 2):
        rows.append(
            {
                "N": n,
                "generators": len(pairs(n)),
                "dim_w_plus": w_basis(n - 1, "+").dim,
                "dim_w_minus": w_basis(n + 1, "-").dim,
                "rank": rank(dmatrix(n)),
                "relations": len(relations(n)),
            }
        )
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        cols = list(rows[0])
        print(" ".join(f"{c:>11}" for c in cols))
        for r in rows:
            print(" ".join(f"{r[c]:>11}" for c in cols))
    return 0


def cmd_wbasis(args, parser) -> int:
    sign = SIGN_ALIASES.get(args.sign)
    if sign is None:
        parser.error(f"sign must be one of {sorted(SIGN_ALIASES)}")
    if args.h % 2 or args.h < 4:
        parser.error(f"weight must be even and >= 4, got {args.h}")
    space = w_basis(args.h, sign)
    print(
        json.dumps(
            {
                "weight": args.h,
                "sign": sign,
                "dim": space.dim,
                "basis": [[fmt_rational(c) for c in p.dense(args.h - 1)] for p in space.basis],
            },
            indent=2,
        )
    )
    return 0


def cmd_dmatrix(args, parser) -> int:
    n = _odd_weight(parser, args.n)
    d = dmatrix(n)
    print(
        json.dumps(
            {
                "N": n,
                "pairs": [[p.m, p.n] for p in pairs(n)],
                "matrix": [[fmt_rational(x) for x in d.row(i)] for i in range(d.rows)],
                "rank": rank(d),
            },
            indent=2,
        )
    )
    return 0


def cmd_relations(args, parser) -> int:
    n = _odd_weight(parser, args.n)
    print(
        json.dumps(
            {
                "N": n,
                "indices": list(range(3, n - 1, 2)),
                "relations": [[fmt_rational(x) for x in r.coeffs] for r in relations(n)],
            },
            indent=2,
        )
    )
    return 0


def cmd_verify(args, parser) -> int:
    n = _odd_weight(parser, args.n)
    if args.suites and args.suite_list:
        parser.error("give suites either positionally or with --suites, not both")
    config = RunConfig(_suites(parser, args.suites or args.suite_list), args.eps)
    report = make_report([weight_block(n, config)], config)
    sys.stdout.write(to_json(report))
    return 0 if report["ok"] else 1


def run_sweep(config: SweepConfig) -> dict:
    weights = range(5, config.max_n + 1, 2)
    build = partial(weight_block, config=config.run)
    if config.jobs > 1:
        with ProcessPoolExecutor(config.jobs) as pool:
            blocks = list(pool.map(build, weights))
    else:
        blocks = [build(n) for n in weights]
    return make_report(blocks, config.run)


def cmd_sweep(args, parser) -> int:
    n = _odd_weight(parser, args.max_n)
    if n > args.ceiling:
        parser.error(f"--max-n {n} exceeds the ceiling {args.ceiling} (raise it with --ceiling)")
    if args.jobs < 1:
        parser.error("--jobs must be >= 1")
    config = SweepConfig(
        max_n=n,
        out=args.out,
        format=args.format,
        jobs=args.jobs,
        run=RunConfig(_suites(parser, args.suites), args.eps),
    )
    report = run_sweep(config)
    text = to_json(report) if config.format == "json" else to_csv(report)
    if config.out is None:
        sys.stdout.write(text)
    else:
        try:
            with open(config.out, "w", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"oddzeta: cannot write {config.out}: {exc}", file=sys.stderr)
            return 1
    failed = [b["N"] for b in report["weights"] if not block_ok(b)]
    if failed:
        print(f"oddzeta: verification failed at N = {failed}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oddzeta",
        description="Exact relation spaces of odd-weight double zeta values.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", help="dimension table for a range of odd weights")
    p.add_argument("n_min", type=int)
    p.add_argument("n_max", type=int, nargs="?")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("wbasis", help="basis of a restricted period polynomial space")
    p.add_argument("sign", help="+, -, plus, minus or full")
    p.add_argument("h", type=int)
    p.set_defaults(func=cmd_wbasis)

    p = sub.add_parser("dmatrix", help="derivation matrix at weight N")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_dmatrix)

    p = sub.add_parser("relations", help="relation basis at weight N")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("verify", help="run verification suites at weight N")
    p.add_argument("n", type=int)
    p.add_argument("suite_list", nargs="?", metavar="SUITES", help="comma list of exact,lemmas,numeric")
    p.add_argument("--suites", help="comma list of exact,lemmas,numeric (default exact,lemmas)")
    p.add_argument("--eps", type=float, default=1e-8)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="verify every odd weight 5..max-n")
    p.add_argument("--max-n", type=int, default=DEFAULT_CEILING)
    p.add_argument("--out")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--suites", help="comma list of exact,lemmas,numeric (default exact,lemmas)")
    p.add_argument("--eps", type=float, default=1e-8)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "eps", 1.0) <= 0:
        parser.error("--eps must be positive")
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
