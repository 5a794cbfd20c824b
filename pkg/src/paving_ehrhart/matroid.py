"""Small explicit matroids on [n], panhandle matroids, stressed hyperplanes
and relaxation.

Subsets are handled internally as bitmasks (bit i-1 <-> element i) and
exposed as sorted tuples / frozensets of 1-based elements.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping

MAX_EXPLICIT_N = 16
MAX_PANHANDLE_BASES = 10**7


def to_mask(subset: Iterable[int]) -> int:
    m = 0
    for e in subset:
        m |= 1 << (e - 1)
    return m


def from_mask(mask: int) -> tuple[int, ...]:
    out, e = [], 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _exchange_ok(masks: set[int], n: int) -> bool:
    for b in masks:
        for b2 in masks:
            if b == b2:
                continue
            diff, back = b & ~b2, b2 & ~b
            for i in range(n):
                if not diff >> i & 1:
                    continue
                base = b & ~(1 << i)
                if not any(
                    back >> j & 1 and (base | 1 << j) in masks for j in range(n)
                ):
                    return False
    return True


@dataclass(frozen=True, eq=False)
class Matroid:
    """Matroid on [n] given by its bases (each a sorted tuple)."""

    n: int
    rank: int
    bases: frozenset
    check: bool = field(default=True, repr=False)

    def __post_init__(self):
        if self.n < 0 or self.rank < 0:
            raise ValueError("n and rank must be nonnegative")
        bases = frozenset(tuple(sorted(b)) for b in self.bases)
        object.__setattr__(self, "bases", bases)
        if not bases:
            raise ValueError("a matroid needs at least one basis")
        for b in bases:
            if len(b) != self.rank or len(set(b)) != self.rank:
                raise ValueError(f"basis {b} does not have {self.rank} distinct elements")
            if b and (b[0] < 1 or b[-1] > self.n):
                raise ValueError(f"basis {b} is not a subset of [1..{self.n}]")
        if self.check and self.n <= MAX_EXPLICIT_N:
            if not _exchange_ok(self.basis_masks, self.n):
                raise ValueError("basis exchange axiom fails")

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return (self.n, self.rank, self.bases) == (other.n, other.rank, other.bases)

    def __hash__(self):
        return hash((self.n, self.rank, self.bases))

    @classmethod
    def from_bases(cls, n: int, bases: Iterable[Iterable[int]], check: bool = True) -> "Matroid":
        bases = [tuple(sorted(b)) for b in bases]
        if not bases:
            raise ValueError("a matroid needs at least one basis")
        return cls(n, len(bases[0]), frozenset(bases), check)

    @cached_property
    def basis_masks(self) -> set[int]:
        return {to_mask(b) for b in self.bases}

    @cached_property
    def rank_table(self) -> list[int]:
        """Rank of every subset of [n], indexed by bitmask."""
        if self.n > MAX_EXPLICIT_N:
            raise ValueError(f"rank table needs n <= {MAX_EXPLICIT_N}")
        size = 1 << self.n
        indep = bytearray(size)
        for b in self.basis_masks:
            indep[b] = 1
        # downward closure: T independent iff T + e independent for some e
        for mask in range(size - 1, -1, -1):
            if indep[mask]:
                continue
            for i in range(self.n):
                up = mask | 1 << i
                if up != mask and indep[up]:
                    indep[mask] = 1
                    break
        rank = [0] * size
        for mask in range(1, size):
            if indep[mask]:
                rank[mask] = _popcount(mask)
            else:
                best, rest = 0, mask
                while rest:
                    bit = rest & -rest
                    best = max(best, rank[mask ^ bit])
                    rest ^= bit
                rank[mask] = best
        return rank

    def to_dict(self) -> dict:
        return {"n": self.n, "r": self.rank, "bases": [list(b) for b in sorted(self.bases)]}

    @classmethod
    def from_dict(cls, data: Mapping) -> "Matroid":
        for key in ("n", "r", "bases"):
            if key not in data:
                raise ValueError(f"matroid JSON is missing field '{key}'")
        n, r, bases = data["n"], data["r"], data["bases"]
        if not isinstance(n, int) or n < 0:
            raise ValueError("field 'n' must be a nonnegative integer")
        if not isinstance(r, int) or r < 0:
            raise ValueError("field 'r' must be a nonnegative integer")
        if not isinstance(bases, list) or not all(isinstance(b, list) for b in bases):
            raise ValueError("field 'bases' must be a list of integer lists")
        for b in bases:
            if len(b) != r:
                raise ValueError(f"field 'bases': {b} does not have r={r} elements")
        return cls(n, r, frozenset(tuple(b) for b in bases))


def uniform_matroid(r: int, n: int) -> Matroid:
    return Matroid(n, r, frozenset(combinations(range(1, n + 1), r)), check=False)


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    """m1 on [n1] and m2 relabelled to [n1+1, n1+n2]."""
    shift = m1.n
    bases = {
        tuple(sorted(b1 + tuple(e + shift for e in b2)))
        for b1 in m1.bases
        for b2 in m2.bases
    }
    return Matroid(m1.n + m2.n, m1.rank + m2.rank, frozenset(bases), check=False)


def relabel(m: Matroid, perm: Mapping[int, int]) -> Matroid:
    bases = {tuple(sorted(perm[e] for e in b)) for b in m.bases}
    return Matroid(m.n, m.rank, frozenset(bases), check=False)


# ---------------------------------------------------------------------------
# panhandle matroids


@dataclass(frozen=True)
class PanhandleParams:
    r: int
    s: int
    n: int

    def __post_init__(self):
        if not (1 <= self.r <= self.s < self.n):
            raise ValueError(
                f"panhandle parameters need 1 <= r <= s < n, got r={self.r}, s={self.s}, n={self.n}"
            )

    def __iter__(self):
        return iter((self.r, self.s, self.n))


def all_panhandle_params(max_n: int, min_n: int = 2):
    for n in range(min_n, max_n + 1):
        for s in range(1, n):
            for r in range(1, s + 1):
                yield PanhandleParams(r, s, n)


def panhandle_basis_count(p: PanhandleParams) -> int:
    return math.comb(p.s, p.r) + math.comb(p.s, p.r - 1) * (p.n - p.s)


def panhandle_matroid(p: PanhandleParams) -> Matroid:
    r, s, n = p
    if math.comb(n, r) > MAX_PANHANDLE_BASES:
        raise ValueError(
            f"C({n},{r}) subsets exceed the enumeration guard; use the closed-form "
            "Ehrhart/volume functions instead"
        )
    bases = frozenset(
        b for b in combinations(range(1, n + 1), r) if sum(1 for e in b if e <= s) >= r - 1
    )
    return Matroid(n, r, bases, check=False)


def panhandle_rank(p: PanhandleParams, subset: Iterable[int]) -> int:
    subset = set(subset)
    t1 = sum(1 for e in subset if e <= p.s)
    has_tail = any(e > p.s for e in subset)
    return min(t1 + 1, p.r) if has_tail else min(t1, p.r)


# ---------------------------------------------------------------------------
# rank, flats, hyperplanes


def rank_of(m: Matroid, subset: Iterable[int]) -> int:
    mask = to_mask(subset)
    if mask >> m.n:
        raise ValueError("subset is not contained in the ground set")
    return max(_popcount(mask & b) for b in m.basis_masks)


def _flat_masks(m: Matroid) -> list[int]:
    rk = m.rank_table
    full = (1 << m.n) - 1
    out = []
    for mask in range(1 << m.n):
        r0 = rk[mask]
        rest = full & ~mask
        ok = True
        while rest:
            bit = rest & -rest
            if rk[mask | bit] == r0:
                ok = False
                break
            rest ^= bit
        if ok:
            out.append(mask)
    return out


def flats(m: Matroid) -> set[frozenset]:
    return {frozenset(from_mask(f)) for f in _flat_masks(m)}


def hyperplanes(m: Matroid) -> set[frozenset]:
    rk = m.rank_table
    return {frozenset(from_mask(f)) for f in _flat_masks(m) if rk[f] == m.rank - 1}


def is_hyperplane(m: Matroid, subset: Iterable[int]) -> bool:
    mask = to_mask(subset)
    rk = m.rank_table
    if rk[mask] != m.rank - 1:
        return False
    return all(rk[mask | 1 << i] > rk[mask] for i in range(m.n) if not mask >> i & 1)


def is_independent(m: Matroid, subset: Iterable[int]) -> bool:
    mask = to_mask(subset)
    return any(mask & b == mask for b in m.basis_masks)


def is_stressed_hyperplane(m: Matroid, h: Iterable[int]) -> bool:
    h = tuple(sorted(set(h)))
    if not is_hyperplane(m, h):
        raise ValueError(f"{h} is not a hyperplane")
    return all(is_independent(m, sub) for sub in combinations(h, m.rank - 1))


def _contains_basis(m: Matroid, mask: int) -> bool:
    return any(b & mask == b for b in m.basis_masks)


def _relaxed_masks(m: Matroid, s: Iterable[int]) -> set[int]:
    s = tuple(sorted(set(s)))
    if len(s) < m.rank:
        raise ValueError(f"relaxation set {s} has fewer than r={m.rank} elements")
    if _contains_basis(m, to_mask(s)):
        raise ValueError(f"relaxation set {s} contains a basis")
    return m.basis_masks | {to_mask(c) for c in combinations(s, m.rank)}


def can_relax(m: Matroid, s: Iterable[int]) -> bool:
    return _exchange_ok(_relaxed_masks(m, s), m.n)


def relax(m: Matroid, s: Iterable[int]) -> Matroid:
    masks = _relaxed_masks(m, s)
    if not _exchange_ok(masks, m.n):
        raise ValueError("the relaxed family is not a matroid basis system")
    return Matroid(m.n, m.rank, frozenset(from_mask(b) for b in masks), check=False)


def is_paving(m: Matroid) -> bool:
    # every (r-1)-subset independent <=> no circuit of size < r
    if m.rank <= 1:
        return True
    return all(is_independent(m, sub) for sub in combinations(range(1, m.n + 1), m.rank - 1))


# ---------------------------------------------------------------------------
# paving profiles


@dataclass(frozen=True)
class PavingProfile:
    """Rank, ground-set size and hyperplane counts by size (sizes in [r, n-1])."""

    r: int
    n: int
    counts: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if not (1 <= self.r < self.n):
            raise ValueError(f"profile needs 1 <= r < n, got r={self.r}, n={self.n}")
        clean = {}
        for s, c in dict(self.counts).items():
            if not (self.r <= s <= self.n - 1):
                raise ValueError(f"hyperplane size {s} outside [{self.r}, {self.n - 1}]")
            if c < 0:
                raise ValueError(f"negative hyperplane count for size {s}")
            if c:
                clean[s] = c
        object.__setattr__(self, "counts", dict(sorted(clean.items())))

    def __hash__(self):
        return hash((self.r, self.n, tuple(self.counts.items())))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "hyperplanes_by_size": {str(s): c for s, c in self.counts.items()},
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "PavingProfile":
        for key in ("n", "r", "hyperplanes_by_size"):
            if key not in data:
                raise ValueError(f"profile JSON is missing field '{key}'")
        hs = data["hyperplanes_by_size"]
        if not isinstance(hs, dict):
            raise ValueError("field 'hyperplanes_by_size' must be an object")
        try:
            counts = {int(k): int(v) for k, v in hs.items()}
        except (TypeError, ValueError):
            raise ValueError("field 'hyperplanes_by_size' must map sizes to integer counts")
        if not isinstance(data["n"], int):
            raise ValueError("field 'n' must be an integer")
        if not isinstance(data["r"], int):
            raise ValueError("field 'r' must be an integer")
        return cls(data["r"], data["n"], counts)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def paving_profile(m: Matroid) -> PavingProfile:
    if not is_paving(m):
        raise ValueError("matroid is not paving")
    counts: dict[int, int] = {}
    for h in hyperplanes(m):
        if len(h) >= m.rank:
            counts[len(h)] = counts.get(len(h), 0) + 1
    return PavingProfile(m.rank, m.n, counts)


def paving_matroid_from_hyperplanes(n: int, r: int, big_hyperplanes: Iterable[Iterable[int]]) -> Matroid:
    """Paving matroid whose hyperplanes of size >= r are the given sets.

    Two such sets may share at most r-2 elements; the remaining hyperplanes
    are the uncovered (r-1)-sets.
    """
    hs = [to_mask(h) for h in big_hyperplanes]
    for h in hs:
        if _popcount(h) < r or h >> n:
            raise ValueError(f"{from_mask(h)} is not an r-or-larger subset of [{n}]")
    for a, b in combinations(hs, 2):
        if _popcount(a & b) > r - 2:
            raise ValueError(f"{from_mask(a)} and {from_mask(b)} share more than r-2 elements")
    bases = [
        c
        for c in combinations(range(1, n + 1), r)
        if not any(to_mask(c) & h == to_mask(c) for h in hs)
    ]
    return Matroid(n, r, frozenset(bases), check=False)


def paving_hyperplane_families(n: int, r: int, sparse: bool = False):
    """Yield every admissible family of big hyperplanes on [n] for rank r.

    A family is a tuple of bitmasks of sizes in [r, n-1] (exactly r when
    ``sparse``) pairwise meeting in at most r-2 elements. Each family is the
    big-hyperplane set of exactly one labeled paving matroid.
    """
    if not 1 <= r < n:
        raise ValueError(f"need 1 <= r < n, got r={r}, n={n}")
    sizes = [r] if sparse else range(r, n)
    cands = [to_mask(c) for s in sizes for c in combinations(range(1, n + 1), s)]

    def rec(start, chosen):
        yield tuple(chosen)
        for j in range(start, len(cands)):
            c = cands[j]
            if all(_popcount(c & h) <= r - 2 for h in chosen):
                chosen.append(c)
                yield from rec(j + 1, chosen)
                chosen.pop()

    yield from rec(0, [])


# ---------------------------------------------------------------------------
# connectivity


def _separator_masks(m: Matroid) -> list[int]:
    rk = m.rank_table
    full = (1 << m.n) - 1
    return [x for x in range(1 << m.n) if rk[x] + rk[full ^ x] == m.rank]


def component_masks(m: Matroid) -> list[int]:
    """Connected components as bitmasks (minimal nonempty separators)."""
    seps = _separator_masks(m)
    comps, seen = [], 0
    for i in range(m.n):
        if seen >> i & 1:
            continue
        comp = (1 << m.n) - 1
        for x in seps:
            if x >> i & 1:
                comp &= x
        comps.append(comp)
        seen |= comp
    return comps


def components(m: Matroid) -> int:
    return len(component_masks(m))


def is_connected(m: Matroid) -> bool:
    return components(m) <= 1
