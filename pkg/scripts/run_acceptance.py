#!/usr/bin/env python3
"""Run every verification suite over the acceptance grids.

Writes one JSON report per (suite, configuration) into the output directory
and prints a one-line summary per run.  Exit status is nonzero if any check
fails.
"""

import argparse
import pathlib
import sys
import time

from currentrep.suites import SuiteConfig, run_suite

GRIDS = [
    ("structure", [("sl", 2, 3, 0), ("sl", 2, 3, 1), ("sl", 2, 3, 2),
                   ("sl", 2, 5, 0), ("sl", 2, 5, 1), ("sl", 2, 5, 2),
                   ("gl", 3, 2, 1), ("gl", 3, 3, 1), ("gl", 3, 5, 1)]),
    ("index", [("sl", 2, 3, 0), ("sl", 2, 3, 1), ("sl", 2, 3, 2),
               ("sl", 2, 5, 0), ("sl", 2, 5, 1), ("sl", 2, 5, 2),
               ("gl", 3, 3, 1)]),
    ("reduction", [("sl", 2, 3, 1), ("sl", 2, 3, 2), ("sl", 2, 5, 1),
                   ("sl", 2, 5, 2), ("gl", 3, 3, 1)]),
    ("verma", [("sl", 2, 3, 1), ("sl", 2, 3, 2), ("sl", 2, 5, 1)]),
    ("cartan", [("sl", 2, 3, 1)]),
    ("simples", [("sl", 2, 3, 1), ("sl", 2, 5, 1), ("sl", 3, 2, 1),
                 ("gl", 3, 3, 1)]),
    ("semisimple", [("sl", 2, 3, 1)]),
    ("kw", [("sl", 2, 3, 1), ("sl", 2, 3, 2), ("sl", 2, 5, 1), ("sl", 2, 5, 2)]),
    ("partition", [("sl", 2, 3, 1), ("sl", 2, 3, 2), ("sl", 2, 5, 1),
                   ("sl", 2, 5, 2), ("sl", 3, 2, 1), ("gl", 3, 3, 1)]),
    ("blocks", [("sl", 2, 3, 1), ("gl", 3, 3, 1)]),
    ("invariants", [("sl", 2, 3, 1), ("gl", 2, 2, 1)]),
]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="reports", help="output directory")
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--samples", type=int, default=200)
    args = ap.parse_args()
    outdir = pathlib.Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    failures = 0
    for suite, grid in GRIDS:
        for kind, n, p, m in grid:
            cfg = SuiteConfig(kind=kind, n=n, p=p, m=m, suite=suite,
                              seed=args.seed, samples=args.samples)
            t0 = time.monotonic()
            rep = run_suite(cfg)
            dt = time.monotonic() - t0
            good, total = rep.counts
            name = f"{suite}_{kind}{n}_p{p}_m{m}"
            (outdir / f"{name}.json").write_text(rep.to_json() + "\n")
            status = "ok" if rep.passed else "FAIL"
            print(f"{name:30s} {good}/{total} checks {status}  ({dt:.1f}s)")
            if not rep.passed:
                failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
