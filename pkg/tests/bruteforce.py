"""Independent brute-force oracles used as ground truth by the test suite.

Nothing here imports the closed formulas: every function counts objects
directly (permutations, subsets, lattice points) with plain loops.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations, permutations, product


def pascal_row(n):
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row


def eulerian_bf(n, k):
    """Permutations of [n] with exactly k descents."""
    if n == 0:
        return 1 if k == 0 else 0
    return sum(
        1
        for w in permutations(range(n))
        if sum(w[i] > w[i + 1] for i in range(n - 1)) == k
    )


def cycle_count(w):
    seen, c = set(), 0
    for i in range(len(w)):
        if i in seen:
            continue
        c += 1
        j = i
        while j not in seen:
            seen.add(j)
            j = w[j]
    return c


def stirling1_bf(n, k):
    """Permutations of [n] with exactly k cycles."""
    if n == 0:
        return 1 if k == 0 else 0
    return sum(1 for w in permutations(range(n)) if cycle_count(w) == k)


def elm_bf(m, a, b):
    """Elementary symmetric function e_m of the integers a..b by subset enumeration."""
    vals = list(range(a, b + 1))
    if m < 0 or m > len(vals):
        return 0
    return sum(math.prod(c) for c in combinations(vals, m))


def bounded_compositions(total, parts, cap):
    """#{x in [0,cap]^parts : sum x = total} by nested loops."""
    if total < 0:
        return 0
    return sum(1 for x in product(range(cap + 1), repeat=parts) if sum(x) == total)


def hypersimplex_points(r, n, t):
    return bounded_compositions(t * r, n, t)


def panhandle_points(r, s, n, t):
    """Nested-loop count of the dilated panhandle polytope."""
    return sum(
        1
        for x in product(range(t + 1), repeat=n)
        if sum(x) == t * r and sum(x[s:]) <= t
    )


def rank_bf(bases, subset):
    subset = set(subset)
    return max(len(subset & set(b)) for b in bases)


def matroid_points(bases, n, r, t):
    """Lattice points of t * P_M checking the rank inequality for every subset."""
    zero_based = [tuple(e - 1 for e in b) for b in bases]
    subsets = [
        (c, rank_bf(zero_based, c))
        for k in range(1, n)
        for c in combinations(range(n), k)
    ]
    count = 0
    for x in product(range(t + 1), repeat=n):
        if sum(x) != t * r:
            continue
        if all(sum(x[i] for i in c) <= t * rk for c, rk in subsets):
            count += 1
    return count


def interpolate(points):
    """Plain Lagrange interpolation returning ascending Fraction coefficients."""
    n = len(points)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for d in range(len(basis) - 1):
                basis[d] -= xj * basis[d + 1]
            denom *= xi - xj
        for d in range(len(basis)):
            coeffs[d] += yi * basis[d] / denom
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def descent_set(w):
    return frozenset(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def chain_gangs_bf(n):
    """Chain gangs on [n] as frozensets of blocks, from permutations and cut points."""
    out = set()
    for w in permutations(range(1, n + 1)):
        for cuts in product((0, 1), repeat=max(n - 1, 0)):
            blocks, cur = [], [w[0]]
            for i, c in enumerate(cuts):
                if c:
                    blocks.append(tuple(cur))
                    cur = []
                cur.append(w[i + 1])
            blocks.append(tuple(cur))
            out.add(frozenset(blocks))
    return out


def chain_gang_weight(blocks):
    return sum(sum(1 for e in b if e < b[0]) for b in blocks)


def chain_gang_gamma(blocks, ell):
    """Trailers strictly after position ell once blocks are written by increasing leader."""
    pos, trailers = 0, []
    for b in sorted(blocks, key=lambda b: b[0]):
        pos += len(b)
        trailers.append(pos)
    return sum(1 for p in trailers if p > ell)


def is_matroid(bases):
    bases = [frozenset(b) for b in bases]
    bset = set(bases)
    for b1 in bases:
        for b2 in bases:
            for x in b1 - b2:
                if not any((b1 - {x}) | {y} in bset for y in b2 - b1):
                    return False
    return True


def iso_classes(families, n):
    """Group hyperplane families (tuples of bitmasks) into orbits under S_n.

    Returns {family: representative}. Orbits are marked exhaustively, so the
    grouping is exact.
    """
    perms = list(permutations(range(n)))
    images = [[sum(1 << p[i] for i in range(n) if x >> i & 1) for x in range(1 << n)] for p in perms]
    rep = {}
    for fam in families:
        key = tuple(sorted(fam))
        if key in rep:
            continue
        for img in images:
            other = tuple(sorted(img[h] for h in key))
            rep.setdefault(other, key)
    return rep


def all_matroids(n, r):
    """Every matroid of rank r on [n], as frozensets of sorted basis tuples."""
    rsets = list(combinations(range(1, n + 1), r))
    out = []
    for bits in range(1, 1 << len(rsets)):
        bases = [rsets[i] for i in range(len(rsets)) if bits >> i & 1]
        if is_matroid(bases):
            out.append(frozenset(bases))
    return out


def is_paving_bf(bases, n, r):
    """No circuit (minimal dependent set) has fewer than r elements."""
    for k in range(r):
        for c in combinations(range(1, n + 1), k):
            if rank_bf(bases, c) < k:
                return False
    return True
