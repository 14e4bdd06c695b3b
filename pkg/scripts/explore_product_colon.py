#!/usr/bin/env python3
"""Collect evidence on reg(IJ : Q) versus reg(I) + reg(J) for monomial CIs.

Nothing here is asserted; every trial becomes a CSV row and violations are
listed at the end.

    python3 scripts/explore_product_colon.py --trials 2000 --vars 5 --out product_colon.csv
"""

from __future__ import annotations

import argparse
import csv
import sys
from collections import Counter
from dataclasses import dataclass

from cmreg.harness import SuiteConfig, run_suite


@dataclass
class ExploreConfig:
    trials: int = 500
    seed: int = 0
    max_vars: int = 5
    max_deg: int = 3
    max_q_gens: int = 3
    workers: int = 1
    out: str = "product_colon.csv"


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=ExploreConfig.trials)
    ap.add_argument("--seed", type=int, default=ExploreConfig.seed)
    ap.add_argument("--vars", type=int, default=ExploreConfig.max_vars)
    ap.add_argument("--maxdeg", type=int, default=ExploreConfig.max_deg)
    ap.add_argument("--qgens", type=int, default=ExploreConfig.max_q_gens)
    ap.add_argument("--workers", type=int, default=ExploreConfig.workers)
    ap.add_argument("--out", default=ExploreConfig.out)
    a = ap.parse_args(argv)
    ec = ExploreConfig(a.trials, a.seed, a.vars, a.maxdeg, a.qgens, a.workers, a.out)

    cfg = SuiteConfig(trials={"product_colon": ec.trials}, master_seed=ec.seed, max_vars=ec.max_vars,
                      max_deg=ec.max_deg, max_q_gens=ec.max_q_gens, workers=ec.workers)
    rep = run_suite(cfg)
    with open(ec.out, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["trial", "seed", "I", "J", "Q", "colon", "lhs", "bound", "slack", "holds"])
        for r in rep.reports:
            w.writerow([r.trial, r.seed, *r.inputs, r.details["colon"], r.lhs, r.bound,
                        r.bound - r.lhs, int(r.holds)])
    slack = Counter(r.bound - r.lhs for r in rep.reports)
    print(f"{len(rep.reports)} trials, {len(rep.findings)} violations, {rep.seconds:.1f}s -> {ec.out}")
    print("slack histogram:", dict(sorted(slack.items())))
    for r in rep.findings:
        print(f"  violation: I={r.inputs[0]} J={r.inputs[1]} Q={r.inputs[2]}  {r.lhs} > {r.bound}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
