"""Steiner systems and finite projective planes as sources of paving matroids."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Optional

from .ehrhart import ehrhart_paving
from .exactmath import Polynomial
from .matroid import Matroid, PavingProfile, paving_matroid_from_hyperplanes
from .volume import volume_paving

MAX_VALIDATE_N = 15

FANO_LINES = ((1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7), (1, 5, 6), (2, 6, 7), (1, 3, 7))


@dataclass(frozen=True)
class SteinerSystem:
    t: int
    k: int
    n: int
    blocks: Optional[tuple] = None

    def __post_init__(self):
        if not (1 <= self.t <= self.k <= self.n):
            raise ValueError(f"need 1 <= t <= k <= n, got t={self.t}, k={self.k}, n={self.n}")
        if self.blocks is not None:
            object.__setattr__(self, "blocks", tuple(tuple(sorted(b)) for b in self.blocks))

    def to_dict(self) -> dict:
        d = {"t": self.t, "k": self.k, "n": self.n}
        if self.blocks is not None:
            d["blocks"] = [list(b) for b in self.blocks]
        return d

    @classmethod
    def from_dict(cls, data: Mapping) -> "SteinerSystem":
        for key in ("t", "k", "n"):
            if key not in data:
                raise ValueError(f"Steiner JSON is missing field '{key}'")
            if not isinstance(data[key], int):
                raise ValueError(f"field '{key}' must be an integer")
        blocks = data.get("blocks")
        if blocks is not None:
            if not isinstance(blocks, list) or not all(isinstance(b, list) for b in blocks):
                raise ValueError("field 'blocks' must be a list of integer lists")
            blocks = tuple(tuple(b) for b in blocks)
        return cls(data["t"], data["k"], data["n"], blocks)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def steiner_block_count(t: int, k: int, n: int) -> int:
    if not (0 <= t <= k <= n):
        raise ValueError(f"need t <= k <= n, got t={t}, k={k}, n={n}")
    num, den = math.comb(n, t), math.comb(k, t)
    if num % den:
        raise ValueError(f"C({n},{t})/C({k},{t}) = {num}/{den} is not an integer; no S({t},{k},{n}) exists")
    return num // den


def validate_steiner(system: SteinerSystem) -> bool:
    t, k, n = system.t, system.k, system.n
    if system.blocks is None:
        raise ValueError("validation needs explicit blocks")
    if n > MAX_VALIDATE_N:
        raise ValueError(f"validation limited to n <= {MAX_VALIDATE_N}")
    blocks = system.blocks
    if not blocks:
        return False
    for b in blocks:
        if len(b) != k or len(set(b)) != k or b[0] < 1 or b[-1] > n:
            return False
    seen: dict[tuple[int, ...], int] = {}
    for b in blocks:
        for sub in combinations(b, t):
            if sub in seen:
                return False
            seen[sub] = 1
    return len(seen) == math.comb(n, t)


def steiner_to_profile(system: SteinerSystem) -> PavingProfile:
    t, k, n = system.t, system.k, system.n
    count = steiner_block_count(t, k, n)
    if k >= n:
        raise ValueError("blocks equal to the whole ground set do not give a paving matroid")
    r = t + 1
    # blocks of size t are hyperplanes of size r-1: uniform matroid, nothing to subtract
    return PavingProfile(r, n, {k: count} if k >= r else {})


def steiner_matroid(system: SteinerSystem) -> Matroid:
    """Rank-(t+1) paving matroid whose hyperplanes are the blocks."""
    if system.blocks is None:
        raise ValueError("need explicit blocks")
    r = system.t + 1
    big = [b for b in system.blocks if len(b) >= r]
    return paving_matroid_from_hyperplanes(system.n, r, big)


def ehrhart_steiner(t: int, k: int, n: int) -> Polynomial:
    return ehrhart_paving(steiner_to_profile(SteinerSystem(t, k, n)))


def _check_plane_order(q: int, dim: int = 2) -> None:
    if dim != 2:
        raise ValueError(
            "only projective planes are supported: projective geometries of dimension "
            f"{dim} are not Steiner systems and their matroids are generally not paving"
        )
    if q < 2:
        raise ValueError("projective plane order must be at least 2")


def ehrhart_projective_plane(q: int, dim: int = 2) -> Polynomial:
    _check_plane_order(q, dim)
    return ehrhart_steiner(2, q + 1, q * q + q + 1)


def volume_steiner(t: int, k: int, n: int) -> int:
    return volume_paving(steiner_to_profile(SteinerSystem(t, k, n)))


def volume_projective_plane(q: int, dim: int = 2) -> int:
    _check_plane_order(q, dim)
    return volume_steiner(2, q + 1, q * q + q + 1)


def fano_plane() -> SteinerSystem:
    return SteinerSystem(2, 3, 7, FANO_LINES)
