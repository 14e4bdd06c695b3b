#!/usr/bin/env python3
"""Run the seeded theorem suite and write report.json / report.csv.

    python3 scripts/run_suite.py --seed 7 --workers 4 --out results/
    python3 scripts/run_suite.py --config suite.json
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from cmreg.harness import SuiteConfig, run_suite

log = logging.getLogger("run_suite")


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--config", help="JSON SuiteConfig; defaults to the built-in trial counts")
    ap.add_argument("--seed", type=int)
    ap.add_argument("--workers", type=int)
    ap.add_argument("--engine", choices=["homology", "resolution", "both"])
    ap.add_argument("--scale", type=float, default=1.0, help="multiply every trial count")
    ap.add_argument("--out", default="suite_out")
    a = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    cfg = SuiteConfig.from_file(a.config) if a.config else SuiteConfig.default()
    if a.seed is not None:
        cfg.master_seed = a.seed
    if a.workers:
        cfg.workers = a.workers
    if a.engine:
        cfg.engine = a.engine
    cfg.trials = {k: max(0, round(v * a.scale)) for k, v in cfg.trials.items()}

    def progress(cid, t):
        if t and t % 100 == 0:
            log.info("%s: %d trials", cid, t)

    rep = run_suite(cfg, progress)
    out = Path(a.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "report.json").write_text(rep.to_json() + "\n")
    (out / "report.csv").write_text(rep.to_csv())
    for cid, s in rep.summary().items():
        log.info("%-16s %-12s %4d/%-4d notable=%d", cid, s["kind"], s["holds"], s["trials"], s["notable"])
    log.info("%d failures, %d findings, %.1fs -> %s", len(rep.failures), len(rep.findings), rep.seconds, out)
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
