"""Exact integer/rational arithmetic, dense univariate polynomials in ``t``,
and the combinatorial number families used by the Ehrhart and volume formulas.

Rationals are :class:`fractions.Fraction` (always reduced, positive
denominator).  Nothing in this package touches floating point.
"""

from __future__ import annotations

import json
import math
import threading
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Rational = Fraction
Number = Union[int, Fraction]

# Rows of the Eulerian / Stirling tables are cached up to this size.
_TABLE_LIMIT = 64
_table_lock = threading.Lock()


def set_table_limit(n_max: int) -> None:
    """Resize the memo tables for Eulerian and Stirling rows."""
    global _TABLE_LIMIT
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    with _table_lock:
        _TABLE_LIMIT = n_max
        _eulerian_rows.clear()
        _stirling_rows.clear()


# ---------------------------------------------------------------------------
# binomials and friends


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with the product convention for negative ``n``.

    Zero when ``k < 0`` or ``0 <= n < k``.
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    # n(n-1)...(n-k+1)/k! = (-1)^k C(k-n-1, k)
    return (-1) ** k * math.comb(k - n - 1, k)


def multinomial(parts: Iterable[int]) -> int:
    parts = list(parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"multinomial parts must be nonnegative: {parts}")
    out, total = 1, 0
    for p in parts:
        total += p
        out *= math.comb(total, p)
    return out


def stars_and_bars(total: int, parts: int) -> int:
    """Number of nonnegative integer solutions of z_1 + ... + z_parts = total."""
    if parts < 0:
        raise ValueError("parts must be nonnegative")
    if total < 0:
        return 0
    if parts == 0:
        return 1 if total == 0 else 0
    return math.comb(total + parts - 1, parts - 1)


# ---------------------------------------------------------------------------
# Eulerian and Stirling tables

_eulerian_rows: dict[int, tuple[int, ...]] = {}
_stirling_rows: dict[int, tuple[int, ...]] = {}


def _row(cache: dict, n: int, first: tuple[int, ...], step) -> tuple[int, ...]:
    if n == 0:
        return first
    row = cache.get(n)
    if row is not None:
        return row
    # walk up from the largest cached row below n
    start = max((m for m in list(cache) if m < n), default=0)
    m, row = start, cache.get(start, first)
    while m < n:
        m += 1
        row = step(m, row)
        if m <= _TABLE_LIMIT:
            with _table_lock:
                cache.setdefault(m, row)
    return row


def _eulerian_step(n: int, prev: tuple[int, ...]) -> tuple[int, ...]:
    # A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1); row n has max(n,1) entries
    width = max(n, 1)
    get = lambda k: prev[k] if 0 <= k < len(prev) else 0
    return tuple((k + 1) * get(k) + (n - k) * get(k - 1) for k in range(width))


def _stirling_step(n: int, prev: tuple[int, ...]) -> tuple[int, ...]:
    # c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k); row n has n+1 entries
    get = lambda k: prev[k] if 0 <= k < len(prev) else 0
    return tuple(get(k - 1) + (n - 1) * get(k) for k in range(n + 1))


def eulerian(n: int, k: int) -> int:
    """A(n, k): permutations of [n] with exactly k descents."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    row = _row(_eulerian_rows, n, (1,), _eulerian_step)
    return row[k] if 0 <= k < len(row) else 0


def stirling_first_unsigned(n: int, k: int) -> int:
    """c(n, k): permutations of [n] with k cycles."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    row = _row(_stirling_rows, n, (1,), _stirling_step)
    return row[k] if 0 <= k < len(row) else 0


def elm(m: int, a: int, b: int) -> int:
    """Elementary symmetric polynomial e_m of the integers a, a+1, ..., b."""
    if m == 0:
        return 1
    length = b - a + 1
    if m < 0 or m > length:
        return 0
    return _elm_row(a, b)[m]


@lru_cache(maxsize=4096)
def _elm_row(a: int, b: int) -> tuple[int, ...]:
    # coefficients of prod_{i=a}^{b} (1 + i x), one factor at a time
    e = [1]
    for i in range(a, b + 1):
        nxt = e + [0]
        for j in range(len(e), 0, -1):
            nxt[j] += i * e[j - 1]
        e = nxt
    return tuple(e)


# ---------------------------------------------------------------------------
# polynomials


def _frac(x: Number | str) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact number: {x!r}")


class Polynomial:
    """Dense polynomial in ``t`` with Fraction coefficients, exponent-ascending.

    Immutable; trailing zeros are trimmed so equal polynomials compare equal.
    The zero polynomial has ``degree is None``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number | str] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # constructors
    @classmethod
    def constant(cls, c: Number) -> "Polynomial":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> "Polynomial":
        return cls([0] * k + [c])

    @classmethod
    def t(cls) -> "Polynomial":
        return cls([0, 1])

    # basic queries
    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                cs = str(c) if c.denominator == 1 else f"({c})"
                terms.append(cs + ("*" + mono if mono else ""))
        return " + ".join(terms).replace("+ -", "- ")

    # ring operations
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self.coeffs])
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("polynomial divided by zero")
            return Polynomial([c / other for c in self.coeffs])
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out, base = Polynomial([1]), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, x: Number) -> Fraction:
        return self.evaluate(x)

    def evaluate(self, x: Number) -> Fraction:
        x = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """Return self(inner(t))."""
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def shift(self, h: Number = -1) -> "Polynomial":
        """Substitute t -> t + h (default t -> t - 1)."""
        return self.compose(Polynomial([h, 1]))

    # serialization
    def to_dict(self) -> dict:
        return {
            "var": "t",
            "coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "Polynomial":
        if data.get("var", "t") != "t":
            raise ValueError(f"unsupported variable {data.get('var')!r}")
        coeffs = data.get("coeffs")
        if not isinstance(coeffs, list):
            raise ValueError("field 'coeffs' must be a list of 'num/den' strings")
        return cls(Fraction(str(c)) for c in coeffs)

    @classmethod
    def from_json(cls, text: str) -> "Polynomial":
        return cls.from_dict(json.loads(text))


def binom_affine_poly(a: int, b: int, k: int) -> Polynomial:
    """C(a*t + b, k) as a polynomial in t: prod_{j<k} (a t + b - j) / k!."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = Polynomial([1])
    for j in range(k):
        out = out * Polynomial([b - j, a])
    return out / math.factorial(k)


def has_nonnegative_coefficients(p: Polynomial) -> bool:
    return all(c >= 0 for c in p.coeffs)


def has_positive_coefficients(p: Polynomial) -> bool:
    # the zero polynomial is not positive
    return bool(p.coeffs) and all(c > 0 for c in p.coeffs)


def lagrange_interpolate(points: Sequence[tuple[int, Number]]) -> Polynomial:
    """Unique polynomial of degree < len(points) through the given points."""
    xs = [_frac(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation abscissae must be pairwise distinct")
    ys = [_frac(y) for _, y in points]
    # Newton divided differences, then expand the Newton form
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out = Polynomial()
    for i in range(n - 1, -1, -1):
        out = out * Polynomial([-xs[i], 1]) + coef[i]
    return out
