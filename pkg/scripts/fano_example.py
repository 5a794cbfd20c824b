"""Fano plane end to end: explicit matroid, oracle counts, closed form, volume.

    python3 scripts/fano_example.py
"""

import math
from dataclasses import dataclass

from paving_ehrhart.designs import ehrhart_projective_plane, fano_plane, steiner_matroid, validate_steiner, volume_projective_plane
from paving_ehrhart.ehrhart import ehrhart_hypersimplex, relaxation_delta
from paving_ehrhart.exactmath import eulerian
from paving_ehrhart.matroid import PanhandleParams, paving_profile
from paving_ehrhart.oracle import count_matroid_points
from paving_ehrhart.volume import beta, volume_panhandle


@dataclass
class Config:
    max_t: int = 4


def main(cfg: Config = Config()) -> None:
    system = fano_plane()
    assert validate_steiner(system)
    m = steiner_matroid(system)
    prof = paving_profile(m)
    print(f"lines: {' '.join(''.join(map(str, b)) for b in system.blocks)}")
    print(f"bases: {len(m.bases)}  profile: {prof.counts}")

    poly = ehrhart_projective_plane(2)
    print("ehrhart:", poly)
    katz = ehrhart_hypersimplex(3, 7)
    delta = relaxation_delta(PanhandleParams(3, 3, 7))
    assert katz - delta * 7 == poly

    print("t  oracle  formula")
    for t in range(cfg.max_t + 1):
        print(f"{t}  {count_matroid_points(m, t):>6}  {poly(t)}")

    vol = volume_projective_plane(2)
    print(f"volume: A(6,2) - 7*vol(Pan_337) = {eulerian(6, 2)} - 7*{volume_panhandle(PanhandleParams(3, 3, 7))} = {vol}")
    print(f"beta(7, {{4,5}}) = {beta(7, {4, 5})}")
    print(f"6! * leading coefficient = {poly.leading_coefficient * math.factorial(6)}")


if __name__ == "__main__":
    main()
