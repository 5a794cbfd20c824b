"""Run every verification harness and print one status line each.

    python3 scripts/verify_conjectures.py --max-s 5 --jobs 4
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from paving_ehrhart import positivity


@dataclass
class Config:
    max_s: int = 5
    phi_max_s: int = 10
    n_extra: int = 4
    genfunc_max_s: int = 6
    lah_max_n: int = 7
    jobs: int = 1


def run(cfg: Config) -> dict:
    jobs = [
        ("big-conjecture", lambda: positivity.verify_big_conjecture(cfg.max_s, jobs=cfg.jobs)),
        ("phi-positive", lambda: positivity.verify_phi_positive(cfg.phi_max_s, cfg.n_extra, jobs=cfg.jobs)),
        ("tilde-phi-positive", lambda: positivity.verify_tilde_phi_positive(cfg.phi_max_s, cfg.n_extra, jobs=cfg.jobs)),
        ("genfunc", lambda: positivity.verify_genfunc_sweep(cfg.genfunc_max_s, 3, 3)),
        ("weighted-lah", lambda: positivity.verify_weighted_lah(cfg.lah_max_n)),
    ]
    out = {}
    for name, fn in jobs:
        t0 = time.perf_counter()
        rep = fn()
        out[name] = rep
        print(f"{name:20s} {rep['status']:14s} {rep['tuples_checked']:>7} tuples  {time.perf_counter() - t0:6.2f}s")
    return out


def main() -> int:
    ap = argparse.ArgumentParser()
    for field, default in asdict(Config()).items():
        ap.add_argument("--" + field.replace("_", "-"), type=int, default=default)
    ap.add_argument("--json", help="write the full reports here")
    args = ap.parse_args()
    cfg = Config(**{k: getattr(args, k) for k in asdict(Config())})
    reports = run(cfg)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"config": asdict(cfg), "reports": reports}, fh, indent=1, sort_keys=True)
    return 0 if all(r["status"] == "certified" for r in reports.values()) else 1


if __name__ == "__main__":
    raise SystemExit(main())
