"""Sweep odd weights and write a per-weight table plus the full JSON report.

    python scripts/run_sweep.py --max-n 101 --jobs 4 --out-dir results/
"""

import argparse
import time
from pathlib import Path

from oddzeta.cli import SweepConfig, run_sweep
from oddzeta.report import RunConfig, to_csv, to_json


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=101)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--suites", default="exact,lemmas")
    ap.add_argument("--out-dir", default="results")
    args = ap.parse_args()

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    config = SweepConfig(max_n=args.max_n, jobs=args.jobs, run=RunConfig(tuple(args.suites.split(","))))
    t0 = time.perf_counter()
    report = run_sweep(config)
    elapsed = time.perf_counter() - t0

    (out / "sweep.json").write_text(to_json(report))
    (out / "sweep.csv").write_text(to_csv(report))
    print(f"{'N':>4} {'gens':>5} {'rank':>5} {'W+':>4} {'W-':>4} {'rels':>5}")
    for b in report["weights"]:
        print(
            f"{b['N']:>4} {b['generator_count']:>5} {b['rank']:>5} "
            f"{b['dim_w_plus']:>4} {b['dim_w_minus']:>4} {len(b['relations']):>5}"
        )
    print(f"ok={report['ok']}  {elapsed:.1f}s  -> {out}/sweep.json, {out}/sweep.csv")


if __name__ == "__main__":
    main()
