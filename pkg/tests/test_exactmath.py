import json
import math
import random
import threading
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from paving_ehrhart.exactmath import (
    Polynomial,
    binom_affine_poly,
    binomial,
    elm,
    eulerian,
    has_nonnegative_coefficients,
    has_positive_coefficients,
    lagrange_interpolate,
    multinomial,
    set_table_limit,
    stars_and_bars,
    stirling_first_unsigned,
)

from bruteforce import bounded_compositions, elm_bf, eulerian_bf, pascal_row, stirling1_bf


T = Polynomial.t()


# binomials -----------------------------------------------------------------


def test_binomial_examples():
    assert binomial(5, 2) == 10
    assert binomial(3, 5) == 0
    assert binomial(-1, 3) == -1
    assert binomial(-3, 2) == 6
    assert binomial(4, -1) == 0
    assert binomial(-2, 0) == 1


def test_pascal():
    for n in range(1, 31):
        for k in range(0, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_binomial_matches_pascal_rows():
    for n in range(20):
        assert [binomial(n, k) for k in range(n + 1)] == pascal_row(n)


@given(st.integers(-30, 30), st.integers(0, 12))
def test_binomial_product_convention(n, k):
    assert binomial(n, k) * math.factorial(k) == math.prod(n - j for j in range(k))


def test_binomial_product_identity_random():
    rng = random.Random(11)
    for _ in range(20):
        Q, R, S, T_ = (rng.randint(0, 12) for _ in range(4))
        rhs = sum(
            binomial(R - Q + S, U) * binomial(T_ + Q - S, T_ - U) * binomial(Q + U, R + T_)
            for U in range(T_ + 1)
        )
        assert binomial(Q, R) * binomial(S, T_) == rhs


def test_multinomial():
    assert multinomial([4, 1, 1]) == 30
    assert multinomial([]) == 1
    assert multinomial([0, 3]) == 1
    with pytest.raises(ValueError):
        multinomial([2, -1])


def test_stars_and_bars_against_loops():
    for total in range(-2, 7):
        for parts in range(1, 4):
            assert stars_and_bars(total, parts) == bounded_compositions(total, parts, max(total, 0))


# Eulerian / Stirling ----------------------------------------------------------


def test_eulerian_examples():
    assert eulerian(6, 2) == 302
    assert [eulerian(4, k) for k in range(4)] == [1, 11, 11, 1]
    assert eulerian(0, 0) == 1
    assert eulerian(5, 7) == 0


def test_eulerian_against_permutations():
    for n in range(0, 8):
        for k in range(n + 1):
            assert eulerian(n, k) == eulerian_bf(n, k)


def test_stirling_against_permutations():
    for n in range(0, 8):
        for k in range(n + 1):
            assert stirling_first_unsigned(n, k) == stirling1_bf(n, k)
    assert stirling_first_unsigned(4, 2) == 11


def test_eulerian_closed_form_k2():
    for n in range(2, 13):
        assert eulerian(n, 2) == 3**n - (n + 1) * 2**n + n * (n + 1) // 2


def test_worpitzky():
    for m in range(1, 7):
        for x in range(0, 11):
            assert x**m == sum(eulerian(m, a) * binomial(x + a, m) for a in range(m))


def test_table_limit_does_not_change_values():
    before = [eulerian(20, k) for k in range(20)]
    try:
        set_table_limit(5)
        assert [eulerian(20, k) for k in range(20)] == before
        assert stirling_first_unsigned(7, 3) == stirling1_bf(7, 3)
    finally:
        set_table_limit(64)
    assert [eulerian(20, k) for k in range(20)] == before


def test_tables_thread_safe():
    set_table_limit(64)
    expected = [eulerian(40, k) for k in range(40)]
    out = []

    def work():
        out.append([eulerian(40, k) for k in range(40)])

    set_table_limit(64)
    threads = [threading.Thread(target=work) for _ in range(8)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    assert all(row == expected for row in out)


# elm ------------------------------------------------------------------------


def test_elm_conventions():
    assert elm(0, 5, 2) == 1
    assert elm(-1, 1, 3) == 0
    assert elm(4, 1, 3) == 0
    assert elm(2, 1, 3) == 11


def test_elm_against_subsets():
    for a in range(-4, 4):
        for b in range(a - 1, a + 9):
            for m in range(-1, b - a + 3):
                assert elm(m, a, b) == elm_bf(m, a, b), (m, a, b)


def test_elm_sign_splitting():
    for a in range(1, 7):
        for b in range(1, 7):
            for m in range(0, a + b + 2):
                rhs = sum((-1) ** k * elm(k, 1, a) * elm(m - k, 1, b) for k in range(m + 1))
                assert elm(m, -a, b) == rhs


def test_elm_stirling():
    for b in range(0, 9):
        for m in range(0, b + 1):
            assert elm(m, 1, b) == stirling_first_unsigned(b + 1, b + 1 - m)


def test_elm_long_range():
    # product recurrence handles long ranges; e_1 is the plain sum
    assert elm(1, 1, 200) == 200 * 201 // 2
    assert elm(200, 1, 200) == math.factorial(200)


# polynomials ------------------------------------------------------------------


def test_polynomial_examples():
    assert (T + 1) * (T - 1) == T**2 - 1
    assert (T**2 + 1)(Fraction(3, 2)) == Fraction(13, 4)
    assert Polynomial([0, 0]).degree is None
    assert Polynomial([1, 2, 0]).degree == 1
    assert (T * 3 + 1).leading_coefficient == 3


def test_polynomial_shift_and_compose():
    p = T**2 + T
    assert p.shift(-1) == T**2 - T
    assert p.compose(T * 2) == T**2 * 4 + T * 2


def test_polynomial_json_roundtrip():
    p = Polynomial([Fraction(1, 2), 0, Fraction(-3, 4)])
    d = p.to_dict()
    assert d == {"var": "t", "coeffs": ["1/2", "0/1", "-3/4"]}
    assert Polynomial.from_json(p.to_json()) == p
    assert json.loads(p.to_json()) == d


def test_polynomial_is_immutable():
    p = T + 1
    with pytest.raises(AttributeError):
        p.coeffs = ()


def test_binom_affine_examples():
    assert binom_affine_poly(1, 2, 2) == (T + 2) * (T + 1) / 2
    assert binom_affine_poly(0, 5, 2) == 10
    assert binom_affine_poly(3, 1, 0) == 1


def test_binom_affine_random():
    rng = random.Random(7)
    for _ in range(50):
        a, b, k, t0 = rng.randint(0, 5), rng.randint(-6, 8), rng.randint(0, 6), rng.randint(0, 6)
        assert binom_affine_poly(a, b, k)(t0) == binomial(a * t0 + b, k)


def test_coefficient_predicates():
    assert has_nonnegative_coefficients(T**2 + 1)
    assert not has_positive_coefficients(T**2 + 1)
    assert has_nonnegative_coefficients(T**2 + T + 1) and has_positive_coefficients(T**2 + T + 1)
    assert not has_nonnegative_coefficients(T**2 - T)
    assert not has_positive_coefficients(T**2 - T)
    assert not has_positive_coefficients(Polynomial())


def test_lagrange_examples():
    assert lagrange_interpolate([(0, 1), (1, 3)]) == T * 2 + 1
    assert lagrange_interpolate([(0, 1), (1, 2), (2, 5)]) == T**2 + 1
    assert lagrange_interpolate([(0, 1), (1, 3), (2, 6)]) == binom_affine_poly(1, 2, 2)
    with pytest.raises(ValueError):
        lagrange_interpolate([(1, 2), (1, 3)])


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=9))
def test_interpolation_roundtrip(coeffs):
    p = Polynomial(coeffs)
    deg = p.degree if p.degree is not None else 0
    assert lagrange_interpolate([(x, p(x)) for x in range(deg + 1)]) == p


@given(
    st.lists(st.fractions(max_denominator=20), max_size=5),
    st.lists(st.fractions(max_denominator=20), max_size=5),
    st.fractions(max_denominator=10),
)
def test_ring_homomorphism(a, b, x):
    p, q = Polynomial(a), Polynomial(b)
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)
    assert (p - q)(x) == p(x) - q(x)
