"""Ehrhart-positivity laboratory for panhandle matroids.

psi / zeta / xi quantities, chain gangs and their statistics, weighted Lah
numbers, the weighted-permutation bijection, and exhaustive verification
harnesses that return JSON-ready reports.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Callable, Iterable, Iterator

from .exactmath import (
    Polynomial,
    binom_affine_poly,
    binomial,
    elm,
    eulerian,
    has_positive_coefficients,
    stirling_first_unsigned,
)
from .matroid import PanhandleParams

MAX_CHAIN_GANG_N = 9


# ---------------------------------------------------------------------------
# psi, zeta, P, xi


def _psi(s: int, r: int, ell: int, shift: int) -> Polynomial:
    if not 0 <= ell <= s - 1:
        raise ValueError("need 0 <= l <= s-1")
    if r > s:
        raise ValueError("need r <= s")
    out = Polynomial()
    for i in range(s - r + 1):
        out += (
            binom_affine_poly(s - r - i + 1, s - 1 - ell - i + shift, s - 1 - ell)
            * binom_affine_poly(s - r - i, s - 1 - i, ell)
            * ((-1) ** i * math.comb(s, i))
        )
    return out


def psi(s: int, r: int, ell: int) -> Polynomial:
    return _psi(s, r, ell, 0)


def tilde_psi(s: int, r: int, ell: int) -> Polynomial:
    return _psi(s, r, ell, -1)


@dataclass(frozen=True)
class PositivityParams:
    q: int
    s: int
    k: int
    ell: int
    m: int

    def __post_init__(self):
        if not 0 <= self.ell <= self.s - 1:
            raise ValueError("need 0 <= l <= s-1")
        if not 0 <= self.m <= self.k:
            raise ValueError("need 0 <= m <= k")
        if self.q < 0:
            raise ValueError("need q >= 0")


def _zeta(r: int, s: int, k: int, ell: int, m: int, tilde: bool) -> int:
    total = 0
    for i in range(s - r + 1):
        if tilde:
            first = elm(s - 1 - ell - m, -i, s - 2 - ell - i)
        else:
            first = elm(s - 1 - ell - m, -i + 1, s - 1 - ell - i)
        if not first:
            continue
        total += (
            (-1) ** i
            * math.comb(s, i)
            * (s - r - i + 1) ** m
            * (s - r - i) ** (k - m)
            * first
            * elm(ell - k + m, s - ell - i, s - 1 - i)
        )
    return total


def zeta(r: int, s: int, k: int, ell: int, m: int) -> int:
    return _zeta(r, s, k, ell, m, tilde=False)


def tilde_zeta(r: int, s: int, k: int, ell: int, m: int) -> int:
    return _zeta(r, s, k, ell, m, tilde=True)


def psi_from_zeta(s: int, r: int, ell: int, tilde: bool = False) -> Polynomial:
    """Expansion sum_k t^k sum_m zeta(...) / ((s-1-l)! l!)."""
    f = zeta if not tilde else tilde_zeta
    coeffs = [sum(f(r, s, k, ell, m) for m in range(k + 1)) for k in range(s)]
    return Polynomial(coeffs) / (math.factorial(s - 1 - ell) * math.factorial(ell))


def P_poly(s: int, k: int, ell: int, m: int) -> Polynomial:
    """Numerator of sum_n n^(k-m) (n+1)^m x^n over (1-x)^(k+1); returned in the variable t."""
    if not 0 <= m <= k:
        raise ValueError("need 0 <= m <= k")
    coeffs: dict[int, int] = {}
    # Eulerian row k has entries a = 0..k-1 (a = 0 only when k = 0)
    for a in range(max(k - m, 1)):
        ea = eulerian(k - m, a)
        if not ea:
            continue
        for b in range(max(m, 1)):
            eb = eulerian(m, b)
            if not eb:
                continue
            for c in range(m + 1):
                w = ea * eb * binomial(k - m + 1 + b - a, c) * binomial(m + a - b - 1, m - c)
                if w:
                    coeffs[k - a - c] = coeffs.get(k - a - c, 0) + w
    top = max(coeffs, default=-1)
    return Polynomial([coeffs.get(j, 0) for j in range(top + 1)])


def _xi(q: int, s: int, k: int, ell: int, m: int, tilde: bool) -> int:
    total = 0
    for i in range(q + 1):
        if tilde:
            first = elm(s - 1 - ell - m, -i, s - 2 - ell - i)
        else:
            first = elm(s - 1 - ell - m, -i + 1, s - 1 - ell - i)
        if not first:
            continue
        total += (
            (-1) ** i
            * binomial(s, i)
            * first
            * elm(ell - k + m, s - ell - i, s - 1 - i)
            * binomial(k + q - i, k)
        )
    return total


def xi(q: int, s: int, k: int, ell: int, m: int) -> int:
    return _xi(q, s, k, ell, m, tilde=False)


def tilde_xi(q: int, s: int, k: int, ell: int, m: int) -> int:
    return _xi(q, s, k, ell, m, tilde=True)


def bar_xi(q: int, s: int, k: int, ell: int, m: int) -> int:
    return xi(q, s, k - 1, ell, m - 1)


# ---------------------------------------------------------------------------
# chain gangs


@dataclass(frozen=True)
class ChainGang:
    """Set partition of [n] into internally ordered blocks, blocks sorted by leader."""

    blocks: tuple

    def __post_init__(self):
        blocks = tuple(tuple(b) for b in self.blocks)
        if any(not b for b in blocks):
            raise ValueError("blocks must be nonempty")
        blocks = tuple(sorted(blocks, key=lambda b: b[0]))
        elems = sorted(e for b in blocks for e in b)
        if elems != list(range(1, len(elems) + 1)):
            raise ValueError("blocks must partition [n]")
        object.__setattr__(self, "blocks", blocks)

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __str__(self) -> str:
        return "|".join("".join(map(str, b)) for b in self.blocks)

    @classmethod
    def parse(cls, text: str) -> "ChainGang":
        """Parse '1|32|645|78' (single-digit elements only)."""
        return cls(tuple(tuple(int(c) for c in part) for part in text.split("|")))


def block_weight(block: Iterable[int]) -> int:
    block = tuple(block)
    return sum(1 for b in block if b < block[0])


def weight(cg: ChainGang) -> int:
    return sum(block_weight(b) for b in cg.blocks)


def gamma(cg: ChainGang, ell: int) -> int:
    """Number of trailers after position ell in the delimiter-free standard word."""
    acc, done = 0, 0
    for b in cg.blocks:
        acc += len(b)
        if acc <= ell:
            done += 1
        else:
            break
    return len(cg.blocks) - done


def _raw_chain_gangs(n: int) -> Iterator[list[list[int]]]:
    # insert 1..n in turn: start a new block or go into any slot of an existing one
    def rec(e: int, blocks: list[list[int]]):
        if e > n:
            yield blocks
            return
        blocks.append([e])
        yield from rec(e + 1, blocks)
        blocks.pop()
        for b in blocks:
            for pos in range(len(b) + 1):
                b.insert(pos, e)
                yield from rec(e + 1, blocks)
                del b[pos]

    yield from rec(1, [])


def enumerate_chain_gangs(n: int) -> Iterator[ChainGang]:
    if n > MAX_CHAIN_GANG_N:
        raise ValueError(f"chain gang enumeration limited to n <= {MAX_CHAIN_GANG_N}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    for blocks in _raw_chain_gangs(n):
        yield ChainGang(tuple(tuple(b) for b in blocks))


@lru_cache(maxsize=None)
def chain_gang_statistics(n: int) -> tuple[Counter, Counter]:
    """(Counter over (q, k), Counter over (q, k, l, m)) for all chain gangs on [n]."""
    if n > MAX_CHAIN_GANG_N:
        raise ValueError(f"chain gang enumeration limited to n <= {MAX_CHAIN_GANG_N}")
    by_qk: Counter = Counter()
    by_all: Counter = Counter()
    for blocks in _raw_chain_gangs(n):
        blocks = sorted(blocks, key=lambda b: b[0])
        k = len(blocks)
        q = sum(block_weight(b) for b in blocks)
        by_qk[q, k] += 1
        # gamma(S, l) as l runs over 0..n-1
        acc, done = 0, 0
        ends = []
        for b in blocks:
            acc += len(b)
            ends.append(acc)
        for ell in range(n):
            while done < k and ends[done] <= ell:
                done += 1
            by_all[q, k, ell, k - done] += 1
    return by_qk, by_all


def count_chain_gangs(q: int, n: int, k: int, ell: int, m: int) -> int:
    """|CG(q, n, k, l, m)|."""
    return chain_gang_statistics(n)[1].get((q, k, ell, m), 0)


def weighted_lah_W(q: int, n: int, k: int) -> int:
    """W(q, n, k) by enumerating chain gangs."""
    return chain_gang_statistics(n)[0].get((q, k), 0)


def eta(q: int, n: int, k: int) -> int:
    """Double alternating sum with Stirling factors."""
    total = 0
    for j in range(q + 1):
        for i in range(j + 1):
            total += (
                (-1) ** (j + i)
                * binomial(n, j)
                * stirling_first_unsigned(j, j - i)
                * (stirling_first_unsigned(n - j, k - j + i) if n - j >= 0 else 0)
                * binomial(k - 1 + q - j, k - 1)
            )
    return total


def eta_elm_form(q: int, n: int, k: int) -> int:
    total = 0
    for j in range(q + 1):
        total += (-1) ** j * binomial(n, j) * elm(n - k, -j + 1, n - 1 - j) * binomial(k - 1 + q - j, k - 1)
    return total


# ---------------------------------------------------------------------------
# weighted permutations


@dataclass(frozen=True)
class WeightedPermutation:
    cycles: tuple
    weights: tuple

    def __post_init__(self):
        cycles = tuple(tuple(c) for c in self.cycles)
        weights = tuple(self.weights)
        if len(cycles) != len(weights):
            raise ValueError("one weight per cycle")
        elems = sorted(e for c in cycles for e in c)
        if elems != list(range(1, len(elems) + 1)) or any(not c for c in cycles):
            raise ValueError("cycles must partition [n]")
        if any(w < 0 for w in weights):
            raise ValueError("weights must be nonnegative")
        object.__setattr__(self, "cycles", cycles)
        object.__setattr__(self, "weights", weights)

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def is_properly_weighted(self) -> bool:
        return all(w < len(c) for c, w in zip(self.cycles, self.weights))

    def canonical(self) -> "WeightedPermutation":
        """Each cycle rotated to start at its minimum, cycles sorted by minimum."""
        pairs = []
        for c, w in zip(self.cycles, self.weights):
            j = c.index(min(c))
            pairs.append((c[j:] + c[:j], w))
        pairs.sort(key=lambda cw: cw[0][0])
        return WeightedPermutation(tuple(c for c, _ in pairs), tuple(w for _, w in pairs))


def chain_gang_from_weighted_permutation(wp: WeightedPermutation) -> ChainGang:
    if not wp.is_properly_weighted():
        raise ValueError("weighted permutation is not properly weighted")
    blocks = []
    for c, w in zip(wp.cycles, wp.weights):
        lead = sorted(c)[w]
        j = c.index(lead)
        blocks.append(c[j:] + c[:j])
    return ChainGang(tuple(blocks))


def weighted_permutation_from_chain_gang(cg: ChainGang) -> WeightedPermutation:
    return WeightedPermutation(cg.blocks, tuple(block_weight(b) for b in cg.blocks)).canonical()


def _cycles_of(perm: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    n, seen, out = len(perm), set(), []
    for start in range(1, n + 1):
        if start in seen:
            continue
        c, e = [], start
        while e not in seen:
            seen.add(e)
            c.append(e)
            e = perm[e - 1]
        out.append(tuple(c))
    return tuple(out)


def enumerate_weighted_permutations(n: int, proper: bool = True) -> Iterator[WeightedPermutation]:
    """All (properly) weighted permutations of [n]; improper ones capped at weight < 2|c|."""
    for perm in permutations(range(1, n + 1)):
        cycles = _cycles_of(perm)
        ranges = [range(len(c) if proper else 2 * len(c)) for c in cycles]

        def rec(i, acc):
            if i == len(cycles):
                yield WeightedPermutation(cycles, tuple(acc))
                return
            for w in ranges[i]:
                acc.append(w)
                yield from rec(i + 1, acc)
                acc.pop()

        yield from rec(0, [])


# ---------------------------------------------------------------------------
# verification harnesses


def _report(name: str, rng: dict, checked: int, bad: list) -> dict:
    bad = sorted(bad)
    return {
        "conjecture": name,
        "range": rng,
        "status": "counterexample" if bad else "certified",
        "counterexamples": [list(b) for b in bad],
        "tuples_checked": checked,
    }


def big_conjecture_tuples(max_s: int) -> Iterator[tuple[int, int, int, int, int]]:
    """(q, s, k, l, m) with 1 <= k <= s, 1 <= m <= k, 0 <= l <= s-1, 0 <= q <= s."""
    for s in range(1, max_s + 1):
        for k in range(1, s + 1):
            for ell in range(s):
                for m in range(1, k + 1):
                    for q in range(s + 1):
                        yield q, s, k, ell, m


def _check_big_conjecture_s(s: int, xi_bar: Callable = bar_xi) -> tuple[int, list]:
    checked, bad = 0, []
    for tup in big_conjecture_tuples(s):
        if tup[1] != s:
            continue
        q, s_, k, ell, m = tup
        lhs = xi_bar(q, s, k, ell, m)
        rhs = count_chain_gangs(q, s, k, ell, m)
        checked += 1
        if lhs != rhs:
            bad.append((q, s, k, ell, m, lhs, rhs))
    return checked, bad


def verify_big_conjecture(max_s: int, xi_bar: Callable = bar_xi, jobs: int = 1) -> dict:
    """bar_xi(q,s,k,l,m) == |CG(q,s,k,l,m)| over the full grid up to ``max_s``."""
    if max_s > MAX_CHAIN_GANG_N:
        raise ValueError(f"max_s limited to {MAX_CHAIN_GANG_N}")
    results = _map(jobs, _check_big_conjecture_s, range(1, max_s + 1), xi_bar)
    checked = sum(c for c, _ in results)
    bad = [b for _, bs in results for b in bs]
    return _report(
        "bar_xi(q,s,k,l,m) = |CG(q,s,k,l,m)|",
        {"max_s": max_s, "q": "0..s", "k": "1..s", "l": "0..s-1", "m": "1..k"},
        checked,
        bad,
    )


def phi_grid(max_s: int, n_extra: int) -> Iterator[PanhandleParams]:
    for s in range(1, max_s + 1):
        for r in range(1, s + 1):
            for n in range(s + 1, s + n_extra + 1):
                yield PanhandleParams(r, s, n)


def _phi_positive(p: PanhandleParams, tilde: bool) -> bool:
    from .ehrhart import phi, tilde_phi

    return has_positive_coefficients(tilde_phi(p) if tilde else phi(p))


def _verify_phi(max_s: int, n_extra: int, tilde: bool, jobs: int) -> dict:
    grid = list(phi_grid(max_s, n_extra))
    ok = _map(jobs, _phi_positive, grid, tilde)
    bad = [tuple(p) for p, good in zip(grid, ok) if not good]
    name = ("tilde_phi" if tilde else "phi") + "_{r,s,n}(t) has positive coefficients"
    return _report(name, {"max_s": max_s, "r": "1..s", "n": f"s+1..s+{n_extra}"}, len(grid), bad)


def verify_phi_positive(max_s: int = 10, n_extra: int = 4, jobs: int = 1) -> dict:
    return _verify_phi(max_s, n_extra, False, jobs)


def verify_tilde_phi_positive(max_s: int = 10, n_extra: int = 4, jobs: int = 1) -> dict:
    return _verify_phi(max_s, n_extra, True, jobs)


def genfunc_sides(r: int, s: int, n: int, u: int, i: int) -> tuple[Polynomial, Polynomial]:
    """Both sides of the generating-function identity behind the phi form, as polynomials in t."""
    if not (1 <= r <= s < n) or u < 0 or not 0 <= i <= s - r:
        raise ValueError("need 1 <= r <= s < n, u >= 0, 0 <= i <= s-r")
    a = s - r - i
    lhs = Polynomial()
    rhs = Polynomial()
    for ell in range(s):
        lhs += binom_affine_poly(a, s - 1 - i, s - 1 - ell) * Fraction(math.comb(u, ell), n - s + ell)
        rhs += (
            binom_affine_poly(a, u + s - 1 - ell - i, s - 1 - ell)
            * binom_affine_poly(a, s - 1 - i, ell)
            * (math.factorial(n - 2 - ell) * math.factorial(ell))
        )
    return lhs, rhs / math.factorial(n - 1)


def verify_genfunc_identity(r: int, s: int, n: int, u: int, i: int) -> bool:
    lhs, rhs = genfunc_sides(r, s, n, u, i)
    return lhs == rhs


def genfunc_tuples(max_s: int, n_extra: int, max_u: int) -> Iterator[tuple[int, int, int, int, int]]:
    for s in range(1, max_s + 1):
        for r in range(1, s + 1):
            for n in range(s + 1, s + n_extra + 1):
                for u in range(max_u + 1):
                    for i in range(s - r + 1):
                        yield r, s, n, u, i


def verify_genfunc_sweep(max_s: int = 6, n_extra: int = 3, max_u: int = 3) -> dict:
    tuples = list(genfunc_tuples(max_s, n_extra, max_u))
    bad = [t for t in tuples if not verify_genfunc_identity(*t)]
    return _report(
        "generating-function identity (r,s,n,u,i)",
        {"max_s": max_s, "n": f"s+1..s+{n_extra}", "u": f"0..{max_u}"},
        len(tuples),
        bad,
    )


def verify_weighted_lah(max_n: int = 7) -> dict:
    checked, bad = 0, []
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            for q in range(n + 2):
                w, e1, e2 = weighted_lah_W(q, n, k), eta(q, n, k), eta_elm_form(q, n, k)
                checked += 1
                if not w == e1 == e2:
                    bad.append((q, n, k, w, e1, e2))
    return _report("W(q,n,k) = eta(q,n,k) = eta_elm(q,n,k)", {"max_n": max_n, "q": "0..n+1"}, checked, bad)


def _map(jobs: int, fn: Callable, items: Iterable, *extra) -> list:
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(x, *extra) for x in items]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, *[[e] * len(items) for e in extra]))
