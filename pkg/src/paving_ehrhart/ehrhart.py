"""Closed-form Ehrhart polynomials: hypersimplices, panhandle matroids,
stressed-hyperplane relaxations and paving matroids."""

from __future__ import annotations

import math
from fractions import Fraction

from .exactmath import Polynomial, binom_affine_poly, binomial, stars_and_bars
from .matroid import PanhandleParams, PavingProfile


def ehrhart_hypersimplex(r: int, n: int) -> Polynomial:
    """Katzman's formula for the hypersimplex Delta_{r,n}."""
    if n < 1 or not (0 <= r <= n):
        raise ValueError(f"hypersimplex needs 0 <= r <= n and n >= 1, got r={r}, n={n}")
    if r == 0 or r == n:
        return Polynomial([1])
    out = Polynomial()
    for j in range(r):
        out += binom_affine_poly(r - j, n - 1 - j, n - 1) * ((-1) ** j * math.comb(n, j))
    return out


def count_box_solutions(t: int, r: int, m: int, s: int) -> int:
    """Solutions of x_1 + ... + x_s = t*r - m with 0 <= x_j <= t (inclusion-exclusion)."""
    if not 0 <= m <= t:
        raise ValueError("need 0 <= m <= t")
    total = 0
    for i in range(0, s - r + 1):
        total += (-1) ** i * math.comb(s, i) * stars_and_bars(t * (s - r - i) + m - i, s)
    return total


def _panhandle_m_sum(p: PanhandleParams, t: int, m_stop: int) -> int:
    r, s, n = p
    total = 0
    for m in range(m_stop):
        tail = math.comb(m + n - s - 1, m)
        for i in range(s - r + 1):
            total += (
                (-1) ** i
                * math.comb(s, i)
                * binomial(t * (s - r - i) + m + s - 1 - i, s - 1)
                * tail
            )
    return total


def panhandle_ehrhart_eval(p: PanhandleParams, t: int) -> int:
    """Lattice points of t * P(Pan_{r,s,n}) via the double sum over m <= t."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    return _panhandle_m_sum(p, t, t + 1)


def relaxation_delta_eval(p: PanhandleParams, t: int) -> int:
    """Ehrhart increment of a stressed-hyperplane relaxation at t (m-sum up to t-1)."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    return _panhandle_m_sum(p, t, t)


def ehrhart_panhandle(p: PanhandleParams, method: str = "vandermonde") -> Polynomial:
    """Ehrhart polynomial of Pan_{r,s,n}.

    ``method="vandermonde"`` uses the sum with C(t+n-s, n-s) C(t, l) (n-s)/(n-s+l);
    ``method="phi"`` uses (n-s)/(n-1)! C(t+n-s, n-s) phi_{r,s,n}(t).
    """
    r, s, n = p
    if method == "phi":
        scale = Fraction(n - s, math.factorial(n - 1))
        return binom_affine_poly(1, n - s, n - s) * phi(p) * scale
    if method != "vandermonde":
        raise ValueError(f"unknown method {method!r}")
    inner = Polynomial()
    for i in range(s - r + 1):
        sign = (-1) ** i * math.comb(s, i)
        for ell in range(s):
            term = binom_affine_poly(s - r - i, s - 1 - i, s - 1 - ell) * binom_affine_poly(1, 0, ell)
            inner += term * Fraction(sign * (n - s), n - s + ell)
    return binom_affine_poly(1, n - s, n - s) * inner


def _phi_sum(p: PanhandleParams, shift: int) -> Polynomial:
    r, s, n = p
    out = Polynomial()
    for i in range(s - r + 1):
        sign = (-1) ** i * math.comb(s, i)
        for ell in range(s):
            weight = sign * math.factorial(n - 2 - ell) * math.factorial(ell)
            out += (
                binom_affine_poly(s - r - i + 1, s - 1 - ell - i + shift, s - 1 - ell)
                * binom_affine_poly(s - r - i, s - 1 - i, ell)
                * weight
            )
    return out


def phi(p: PanhandleParams) -> Polynomial:
    return _phi_sum(p, 0)


def tilde_phi(p: PanhandleParams) -> Polynomial:
    return _phi_sum(p, -1)


def relaxation_delta(p: PanhandleParams) -> Polynomial:
    """Ehrhart increment from relaxing a stressed hyperplane of size s (rank r, ground set n)."""
    r, s, n = p
    scale = Fraction(n - s, math.factorial(n - 1))
    return binom_affine_poly(1, n - s - 1, n - s) * tilde_phi(p) * scale


def ehrhart_relaxation(ehr_m: Polynomial, p: PanhandleParams) -> Polynomial:
    return ehr_m + relaxation_delta(p)


def ehrhart_paving(profile: PavingProfile) -> Polynomial:
    r, n = profile.r, profile.n
    out = ehrhart_hypersimplex(r, n)
    for s, count in profile.counts.items():
        out -= relaxation_delta(PanhandleParams(r, s, n)) * count
    return out


def ehrhart_sparse_paving(r: int, n: int, lam: int) -> Polynomial:
    """Sparse paving matroid with ``lam`` circuit-hyperplanes."""
    if lam < 0:
        raise ValueError("number of circuit-hyperplanes must be nonnegative")
    return ehrhart_paving(PavingProfile(r, n, {r: lam}))
