"""Brute-force lattice-point counts of dilated matroid base polytopes.

Everything here is independent of the closed formulas in ``ehrhart``:
the counts come straight from the inequality description of the polytope.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exactmath import Polynomial, lagrange_interpolate
from .matroid import Matroid, PanhandleParams, _flat_masks, _popcount, components


@dataclass(frozen=True)
class OracleLimits:
    panhandle_max_n: int = 12
    panhandle_max_t: int = 8
    matroid_max_n: int = 9
    matroid_max_t: int = 6


DEFAULT_LIMITS = OracleLimits()


class GuardExceeded(ValueError):
    pass


def count_panhandle_points(p: PanhandleParams, t: int, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """#{x in [0,t]^n : sum x = t r, sum_{i>s} x_i <= t}."""
    r, s, n = p
    if t < 0:
        raise ValueError("t must be nonnegative")
    if n > limits.panhandle_max_n or t > limits.panhandle_max_t:
        raise GuardExceeded(
            f"panhandle oracle limited to n <= {limits.panhandle_max_n}, t <= {limits.panhandle_max_t}"
        )
    target = t * r
    # state: running total -> {tail sum (capped at t+1): count}
    layer = {(0, 0): 1}
    for i in range(1, n + 1):
        nxt: dict[tuple[int, int], int] = {}
        in_tail = i > s
        for (total, tail), c in layer.items():
            for x in range(min(t, target - total) + 1):
                nt = min(tail + x, t + 1) if in_tail else tail
                if nt > t:
                    break
                key = (total + x, nt)
                nxt[key] = nxt.get(key, 0) + c
        layer = nxt
    return sum(c for (total, _), c in layer.items() if total == target)


def _constraints(m: Matroid) -> list[tuple[int, int]]:
    """Flat inequalities (mask, rank) that are not implied by 0 <= x_i <= t."""
    rk = m.rank_table
    full = (1 << m.n) - 1
    out = []
    for f in _flat_masks(m):
        if f == full:
            continue
        if rk[f] == _popcount(f):
            # independent flat: implied by the box
            continue
        out.append((f, rk[f]))
    return out


def count_matroid_points(m: Matroid, t: int, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """|t P_M  cap  Z^n| from the flat-inequality description of P_M."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    if m.n > limits.matroid_max_n or t > limits.matroid_max_t:
        raise GuardExceeded(
            f"matroid oracle limited to n <= {limits.matroid_max_n}, t <= {limits.matroid_max_t}"
        )
    n = m.n
    cons = _constraints(m)
    masks = [f for f, _ in cons]
    caps = tuple(t * r for _, r in cons)
    # constraint j is "live" at coordinate i if its flat meets [i, n)
    last = [max(i for i in range(n) if f >> i & 1) if f else -1 for f in masks]
    target = t * m.rank

    @lru_cache(maxsize=None)
    def walk(i: int, remaining: int, slack: tuple) -> int:
        if i == n:
            return 1 if remaining == 0 else 0
        if remaining > t * (n - i):
            return 0
        total = 0
        hit = [j for j, f in enumerate(masks) if f >> i & 1]
        for x in range(min(t, remaining) + 1):
            sl = list(slack)
            ok = True
            for j in hit:
                sl[j] -= x
                if sl[j] < 0:
                    ok = False
                    break
            if not ok:
                break
            for j in hit:
                if last[j] == i:
                    sl[j] = 0  # constraint finished: forget its slack
            total += walk(i + 1, remaining - x, tuple(sl))
        return total

    return walk(0, target, caps)


def interpolate_matroid_ehrhart(m: Matroid, limits: OracleLimits = DEFAULT_LIMITS) -> Polynomial:
    """Ehrhart polynomial of P_M from oracle counts at t = 0..dim."""
    d = m.n - components(m)
    if d > limits.matroid_max_t:
        raise GuardExceeded(
            f"interpolation needs t up to {d}, above the limit {limits.matroid_max_t}"
        )
    return lagrange_interpolate([(t, count_matroid_points(m, t, limits)) for t in range(d + 1)])


def interpolate_panhandle_ehrhart(p: PanhandleParams, limits: OracleLimits = DEFAULT_LIMITS) -> Polynomial:
    # panhandle matroids are connected, so the polytope has dimension n-1
    return lagrange_interpolate(
        [(t, count_panhandle_points(p, t, limits)) for t in range(p.n)]
    )
