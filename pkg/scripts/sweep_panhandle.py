"""Table of panhandle Ehrhart data, optionally cross-checked against the oracle.

    python3 scripts/sweep_panhandle.py --max-n 8 --oracle > pan.csv
"""

import argparse
import csv
import sys
from dataclasses import dataclass

from paving_ehrhart.cli import SWEEP_FIELDS, sweep_row
from paving_ehrhart.ehrhart import ehrhart_panhandle
from paving_ehrhart.matroid import all_panhandle_params
from paving_ehrhart.oracle import interpolate_panhandle_ehrhart


@dataclass
class Config:
    min_n: int = 2
    max_n: int = 8
    oracle: bool = False


def main(cfg: Config) -> int:
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(SWEEP_FIELDS + (["oracle_match"] if cfg.oracle else []))
    bad = 0
    for p in all_panhandle_params(cfg.max_n, cfg.min_n):
        row = sweep_row(p)
        if cfg.oracle:
            ok = interpolate_panhandle_ehrhart(p) == ehrhart_panhandle(p)
            bad += not ok
            row.append(str(int(ok)))
        w.writerow(row)
    return 1 if bad else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--min-n", type=int, default=2)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--oracle", action="store_true")
    a = ap.parse_args()
    raise SystemExit(main(Config(a.min_n, a.max_n, a.oracle)))
