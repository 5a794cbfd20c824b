"""Command-line interface.

Exit codes: 0 success / certified, 1 counterexample found, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import designs, ehrhart, oracle, positivity, volume
from .exactmath import Polynomial, has_positive_coefficients
from .matroid import Matroid, PanhandleParams, PavingProfile, all_panhandle_params, paving_profile


class UsageError(Exception):
    pass


def _load_json(path: str, what: str) -> dict:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {what} file {path!r}: {exc.strerror}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"{what} file {path!r} is not valid JSON: {exc}")
    if not isinstance(data, dict):
        raise UsageError(f"{what} file {path!r} must hold a JSON object")
    return data


def _load_matroid(path: str) -> Matroid:
    try:
        return Matroid.from_dict(_load_json(path, "matroid"))
    except (ValueError, TypeError) as exc:
        raise UsageError(f"matroid file {path!r}: {exc}")


def _load_profile(args) -> PavingProfile:
    if args.profile:
        try:
            return PavingProfile.from_dict(_load_json(args.profile, "profile"))
        except (ValueError, TypeError) as exc:
            raise UsageError(f"profile file {args.profile!r}: {exc}")
    if args.matroid:
        m = _load_matroid(args.matroid)
        try:
            return paving_profile(m)
        except ValueError as exc:
            raise UsageError(f"matroid file {args.matroid!r}: {exc}")
    raise UsageError("paving needs --profile FILE or --matroid FILE")


def _require(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"missing required flag(s): {' '.join(missing)}")


def _steiner_params(args) -> tuple[int, int, int]:
    if args.steiner:
        try:
            system = designs.SteinerSystem.from_dict(_load_json(args.steiner, "Steiner"))
        except (ValueError, TypeError) as exc:
            raise UsageError(f"Steiner file {args.steiner!r}: {exc}")
        if system.blocks is not None:
            if not designs.validate_steiner(system):
                raise UsageError(f"Steiner file {args.steiner!r}: field 'blocks' is not a valid S(t,k,n)")
            print("note: explicit Steiner system validated", file=sys.stderr)
        return system.t, system.k, system.n
    _require(args, "t", "k", "n")
    print("note: formula-only (existence of the design is not checked)", file=sys.stderr)
    return args.t, args.k, args.n


# ---------------------------------------------------------------------------
# output


def _emit_polynomial(p: Polynomial, fmt: str, out) -> None:
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["k", "coefficient"])
        for k, c in enumerate(p.to_dict()["coeffs"]):
            w.writerow([k, c])
    else:
        out.write(p.to_json() + "\n")


def _emit_value(name: str, value: int, fmt: str, out) -> None:
    if fmt == "csv":
        out.write(f"{name}\n{value}\n")
    else:
        out.write(json.dumps({name: str(value)}, sort_keys=True) + "\n")


def _emit_report(report: dict, fmt: str, out) -> int:
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["conjecture", "status", "tuples_checked", "counterexamples"])
        w.writerow([report["conjecture"], report["status"], report["tuples_checked"], len(report["counterexamples"])])
    else:
        out.write(json.dumps(report, sort_keys=True) + "\n")
    return 0 if report["status"] == "certified" else 1


# ---------------------------------------------------------------------------
# commands


def _panhandle(args) -> PanhandleParams:
    _require(args, "r", "s", "n")
    return PanhandleParams(args.r, args.s, args.n)


def cmd_ehrhart(args, out) -> int:
    kind = args.kind
    if kind == "hypersimplex":
        _require(args, "r", "n")
        poly = ehrhart.ehrhart_hypersimplex(args.r, args.n)
    elif kind == "panhandle":
        poly = ehrhart.ehrhart_panhandle(_panhandle(args), method=args.method)
    elif kind == "paving":
        poly = ehrhart.ehrhart_paving(_load_profile(args))
    elif kind == "steiner":
        poly = designs.ehrhart_steiner(*_steiner_params(args))
    else:
        _require(args, "q")
        poly = designs.ehrhart_projective_plane(args.q, args.dim)
    _emit_polynomial(poly, args.format or "json", out)
    return 0


def cmd_volume(args, out) -> int:
    kind = args.kind
    if kind == "hypersimplex":
        _require(args, "r", "n")
        vol = volume.volume_hypersimplex(args.r, args.n)
    elif kind == "panhandle":
        vol = volume.volume_panhandle(_panhandle(args))
    elif kind == "paving":
        vol = volume.volume_paving(_load_profile(args))
    elif kind == "steiner":
        vol = designs.volume_steiner(*_steiner_params(args))
    else:
        _require(args, "q")
        vol = designs.volume_projective_plane(args.q, args.dim)
    _emit_value("volume", vol, args.format or "json", out)
    return 0


def cmd_oracle(args, out) -> int:
    _require(args, "t")
    ts = range(args.t + 1) if args.upto else [args.t]
    if args.kind == "panhandle":
        p = _panhandle(args)
        rows = [(t, oracle.count_panhandle_points(p, t)) for t in ts]
    else:
        if not args.matroid:
            raise UsageError("oracle matroid needs --matroid FILE")
        m = _load_matroid(args.matroid)
        rows = [(t, oracle.count_matroid_points(m, t)) for t in ts]
    if (args.format or "csv") == "json":
        out.write(json.dumps({"counts": [[str(t), str(c)] for t, c in rows]}) + "\n")
    else:
        out.write("t,count\n")
        for t, c in rows:
            out.write(f"{t},{c}\n")
    return 0


def cmd_verify(args, out) -> int:
    what, fmt = args.what, args.format or "json"
    if what == "big-conjecture":
        report = positivity.verify_big_conjecture(args.max_s or 5, jobs=args.jobs)
    elif what == "phi-positive":
        report = positivity.verify_phi_positive(args.max_s or 10, args.n_extra or 4, jobs=args.jobs)
    elif what == "tilde-phi-positive":
        report = positivity.verify_tilde_phi_positive(args.max_s or 10, args.n_extra or 4, jobs=args.jobs)
    elif what == "genfunc":
        report = positivity.verify_genfunc_sweep(args.max_s or 6, args.n_extra or 3, args.max_u if args.max_u is not None else 3)
    else:
        report = positivity.verify_weighted_lah(args.max_n or 7)
    return _emit_report(report, fmt, out)


SWEEP_FIELDS = ["r", "s", "n", "volume", "leading_times_factorial", "phi_positive", "tilde_phi_positive", "ehrhart_coeffs"]


def sweep_row(p: PanhandleParams) -> list[str]:
    poly = ehrhart.ehrhart_panhandle(p)
    lead = poly.leading_coefficient * math.factorial(p.n - 1)
    return [
        str(p.r),
        str(p.s),
        str(p.n),
        str(volume.volume_panhandle(p)),
        str(lead),
        str(int(has_positive_coefficients(ehrhart.phi(p)))),
        str(int(has_positive_coefficients(ehrhart.tilde_phi(p)))),
        ";".join(poly.to_dict()["coeffs"]),
    ]


def cmd_sweep(args, out) -> int:
    grid = list(all_panhandle_params(args.max_n or 8, args.min_n or 2))
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(sweep_row, grid, chunksize=4))
    else:
        rows = [sweep_row(p) for p in grid]
    if (args.format or "csv") == "json":
        out.write(json.dumps([dict(zip(SWEEP_FIELDS, row)) for row in rows], sort_keys=True) + "\n")
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(SWEEP_FIELDS)
        w.writerows(rows)
    bad = [row for row in rows if row[3] != row[4] or row[5] != "1"]
    return 1 if bad else 0


# ---------------------------------------------------------------------------
# parser


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["json", "csv"], default=None)
    p.add_argument("--jobs", type=int, default=1)


def _params(p: argparse.ArgumentParser) -> None:
    for flag in ("r", "s", "n", "t", "k", "q"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--dim", type=int, default=2, help="projective dimension (only 2 is supported)")
    p.add_argument("--profile", help="PavingProfile JSON file")
    p.add_argument("--matroid", help="Matroid JSON file")
    p.add_argument("--steiner", help="Steiner system JSON file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="paving-ehrhart", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    kinds = ["hypersimplex", "panhandle", "paving", "steiner", "plane"]
    p = sub.add_parser("ehrhart", help="closed-form Ehrhart polynomials")
    p.add_argument("kind", choices=kinds)
    p.add_argument("--method", choices=["vandermonde", "phi"], default="vandermonde")
    _params(p)
    _common(p)
    p.set_defaults(func=cmd_ehrhart)

    p = sub.add_parser("volume", help="normalized volumes")
    p.add_argument("kind", choices=kinds)
    _params(p)
    _common(p)
    p.set_defaults(func=cmd_volume)

    p = sub.add_parser("oracle", help="brute-force lattice-point counts (CSV t,count)")
    p.add_argument("kind", choices=["panhandle", "matroid"])
    p.add_argument("--upto", action="store_true", help="emit every t from 0 to --t")
    _params(p)
    _common(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="exhaustive conjecture / identity checks")
    p.add_argument("what", choices=["big-conjecture", "phi-positive", "tilde-phi-positive", "genfunc", "weighted-lah"])
    p.add_argument("--max-s", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-u", type=int)
    p.add_argument("--n-extra", type=int, help="n ranges over s+1 .. s+N")
    _common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="CSV table over all panhandle parameters")
    p.add_argument("--max-n", type=int)
    p.add_argument("--min-n", type=int)
    _common(p)
    p.set_defaults(func=cmd_sweep)
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return 2
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run_to_string(argv: Sequence[str]) -> tuple[int, str]:
    buf = io.StringIO()
    code = run(argv, buf)
    return code, buf.getvalue()


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
