"""Normalized volumes of panhandle, relaxed and paving base polytopes via
descent-set counts, plus brute-force descent oracles."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable

from .exactmath import eulerian, multinomial
from .matroid import PanhandleParams, PavingProfile

MAX_ORACLE_N = 9


def _check_subset(n: int, S: Iterable[int]) -> tuple[int, ...]:
    S = tuple(sorted(set(S)))
    if S and (S[0] < 1 or S[-1] > n - 2):
        raise ValueError(f"descent set {S} is not a subset of [1..{n - 2}]")
    return S


def alpha(n: int, S: Iterable[int]) -> int:
    """#{w in S_{n-1} : Des(w) subset of S} as a multinomial coefficient."""
    S = _check_subset(n, S)
    cuts = (0,) + S + (n - 1,)
    return multinomial(b - a for a, b in zip(cuts, cuts[1:]))


def beta(n: int, S: Iterable[int]) -> int:
    """#{w in S_{n-1} : Des(w) = S} by inclusion-exclusion over subsets of S."""
    S = _check_subset(n, S)
    total = 0
    for k in range(len(S) + 1):
        sign = (-1) ** (len(S) - k)
        for T in combinations(S, k):
            total += sign * alpha(n, T)
    return total


def _descents(w: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


@lru_cache(maxsize=None)
def _descent_set_counts(n: int) -> Counter:
    if n > MAX_ORACLE_N:
        raise ValueError(f"descent oracle limited to n <= {MAX_ORACLE_N}")
    return Counter(_descents(w) for w in permutations(range(1, n)))


def descent_oracle(n: int, S: Iterable[int], mode: str = "equal") -> int:
    """Brute-force count over S_{n-1}: Des(w) == S (``mode='equal'``) or Des(w) within S (``'subset'``)."""
    if n < 1:
        raise ValueError("n must be positive")
    S = set(S)
    if any(not 1 <= x <= n - 2 for x in S):
        raise ValueError(f"descent set {sorted(S)} is not a subset of [1..{n - 2}]")
    counts = _descent_set_counts(n)
    if mode == "equal":
        return counts.get(tuple(sorted(S)), 0)
    if mode == "subset":
        return sum(c for d, c in counts.items() if S.issuperset(d))
    raise ValueError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
# dominance order on L(r, n)


def _parse_bits(b: str | Iterable[int]) -> tuple[int, ...]:
    bits = tuple(int(c) for c in b)
    if any(x not in (0, 1) for x in bits):
        raise ValueError(f"not a binary string: {b!r}")
    return bits


def in_L(bits: tuple[int, ...], r: int, n: int) -> bool:
    return len(bits) == n and bits[0] == 1 and bits[-1] == 0 and sum(bits) == r


def dominated(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa > sb:
            return False
    return True


def L_strings(r: int, n: int) -> list[tuple[int, ...]]:
    """All binary strings of length n starting with 1, ending with 0, with r ones."""
    if n < 2 or r < 1:
        return []
    out = []
    for ones in combinations(range(1, n - 1), r - 1):
        bits = [0] * n
        bits[0] = 1
        for i in ones:
            bits[i] = 1
        out.append(tuple(bits))
    return out


def descent_string(w: tuple[int, ...]) -> tuple[int, ...]:
    return (1,) + tuple(1 if w[i] > w[i + 1] else 0 for i in range(len(w) - 1)) + (0,)


@lru_cache(maxsize=None)
def _descent_string_counts(n: int) -> Counter:
    if n > MAX_ORACLE_N:
        raise ValueError(f"descent oracle limited to n <= {MAX_ORACLE_N}")
    return Counter(descent_string(w) for w in permutations(range(1, n)))


def delta_leq_oracle(r: int, n: int, b: str | Iterable[int]) -> int:
    """Sum over a <= b in L(r, n) of #{w in S_{n-1} : descent string of w = a}."""
    bits = _parse_bits(b)
    if not in_L(bits, r, n):
        raise ValueError(f"{b!r} is not in L({r},{n})")
    counts = _descent_string_counts(n)
    return sum(counts.get(a, 0) for a in L_strings(r, n) if dominated(a, bits))


def panhandle_chain_string(p: PanhandleParams) -> str:
    """Binary string 1 0^(n-s-1) 1^(r-1) 0^(s-r+1) of the nontrivial cyclic-flat chain."""
    r, s, n = p
    return "1" + "0" * (n - s - 1) + "1" * (r - 1) + "0" * (s - r + 1)


# ---------------------------------------------------------------------------
# volumes


def volume_hypersimplex(r: int, n: int) -> int:
    return eulerian(n - 1, r - 1)


def volume_panhandle(p: PanhandleParams) -> int:
    r, s, n = p
    window = range(n - s, n - 1)
    return sum(beta(n, S) for S in combinations(window, r - 1))


def volume_relaxation(vol_rel: int, p: PanhandleParams) -> int:
    """Volume before relaxing a stressed hyperplane of size s, given the volume after."""
    out = vol_rel - volume_panhandle(p)
    if out < 0:
        raise ValueError("negative volume: relaxed volume and parameters are inconsistent")
    return out


def volume_paving(profile: PavingProfile) -> int:
    r, n = profile.r, profile.n
    out = eulerian(n - 1, r - 1)
    for s, count in profile.counts.items():
        out -= count * volume_panhandle(PanhandleParams(r, s, n))
    return out
