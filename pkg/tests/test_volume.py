import math
import random
from collections import Counter
from itertools import combinations

import pytest

from paving_ehrhart.designs import fano_plane, steiner_to_profile
from paving_ehrhart.ehrhart import ehrhart_panhandle, ehrhart_paving
from paving_ehrhart.exactmath import eulerian
from paving_ehrhart.matroid import (
    PanhandleParams,
    PavingProfile,
    all_panhandle_params,
    from_mask,
    paving_hyperplane_families,
    paving_matroid_from_hyperplanes,
    paving_profile,
    direct_sum,
    relax,
    uniform_matroid,
)
from paving_ehrhart.oracle import OracleLimits, interpolate_matroid_ehrhart
from paving_ehrhart.volume import (
    L_strings,
    alpha,
    beta,
    delta_leq_oracle,
    descent_oracle,
    dominated,
    panhandle_chain_string,
    volume_hypersimplex,
    volume_panhandle,
    volume_paving,
    volume_relaxation,
)

from bruteforce import descent_set


def normalized(poly, n):
    # (n-1)-dimensional volume; zero for disconnected matroids, whose polytopes are lower dimensional
    return poly.coefficient(n - 1) * math.factorial(n - 1)


def test_alpha_beta_examples():
    assert alpha(7, {4, 5}) == 30
    assert beta(7, {4, 5}) == 10
    for n in range(2, 9):
        assert alpha(n, ()) == 1
        assert beta(n, ()) == 1
        assert alpha(n, range(1, n - 1)) == math.factorial(n - 1)


def test_subset_validation():
    for bad in [{0}, {6}, {9}]:
        with pytest.raises(ValueError):
            alpha(7, bad | {1})
        with pytest.raises(ValueError):
            descent_oracle(6, bad)
    with pytest.raises(ValueError):
        descent_oracle(10, ())
    with pytest.raises(ValueError):
        descent_oracle(5, (), mode="bogus")


def test_beta_against_descent_oracle():
    assert descent_oracle(7, {4, 5}) == 10
    for n in range(2, 9):
        for k in range(n - 1):
            for S in combinations(range(1, n - 1), k):
                assert beta(n, S) == descent_oracle(n, S)


def test_alpha_against_subset_oracle():
    rng = random.Random(8)
    for _ in range(20):
        n = rng.randint(2, 8)
        S = {x for x in range(1, n - 1) if rng.random() < 0.5}
        assert alpha(n, S) == descent_oracle(n, S, mode="subset")


def test_descent_oracle_independent_of_bruteforce_helper():
    from itertools import permutations

    for n in range(2, 7):
        for S in [(), tuple(range(1, n - 1))]:
            brute = sum(1 for w in permutations(range(1, n)) if descent_set(w) == set(S))
            assert descent_oracle(n, S) == brute


def test_beta_sums():
    for n in range(2, 9):
        subsets = [S for k in range(n - 1) for S in combinations(range(1, n - 1), k)]
        assert all(beta(n, S) >= 0 for S in subsets)
        assert sum(beta(n, S) for S in subsets) == math.factorial(n - 1)
        for d in range(n - 1):
            assert sum(beta(n, S) for S in combinations(range(1, n - 1), d)) == eulerian(n - 1, d)


def test_L_strings_and_dominance():
    assert L_strings(2, 5) == [(1, 1, 0, 0, 0), (1, 0, 1, 0, 0), (1, 0, 0, 1, 0)]
    assert dominated((1, 0, 0, 1, 0), (1, 1, 0, 0, 0))
    assert not dominated((1, 1, 0, 0, 0), (1, 0, 0, 1, 0))


def test_delta_leq_panhandle_example():
    assert panhandle_chain_string(PanhandleParams(2, 3, 5)) == "10100"
    assert delta_leq_oracle(2, 5, "10100") == volume_panhandle(PanhandleParams(2, 3, 5)) == 8
    # 10010 is the chain string of Pan_{2,2,5}
    assert delta_leq_oracle(2, 5, "10010") == volume_panhandle(PanhandleParams(2, 2, 5)) == 3


def test_delta_leq_minimal_string_counts_exact_words():
    for n in range(3, 8):
        for r in range(1, n):
            least = min(L_strings(r, n), key=lambda b: [sum(b[: i + 1]) for i in range(n)])
            S = {i for i in range(1, n - 1) if least[i]}
            assert delta_leq_oracle(r, n, least) == beta(n, S)


def test_delta_leq_validation():
    for bad in ["01100", "10101", "1010", "10200"]:
        with pytest.raises(ValueError):
            delta_leq_oracle(2, 5, bad)


def test_delta_leq_agrees_with_volume_panhandle():
    for p in all_panhandle_params(8):
        assert delta_leq_oracle(p.r, p.n, panhandle_chain_string(p)) == volume_panhandle(p)


def test_volume_panhandle_examples():
    assert volume_panhandle(PanhandleParams(2, 2, 4)) == 2
    assert volume_panhandle(PanhandleParams(3, 3, 7)) == 10
    for n in range(2, 11):
        for r in range(1, n):
            assert volume_panhandle(PanhandleParams(r, n - 1, n)) == eulerian(n - 1, r - 1) == volume_hypersimplex(r, n)


def test_volume_panhandle_is_leading_coefficient():
    for p in all_panhandle_params(10):
        assert volume_panhandle(p) == normalized(ehrhart_panhandle(p), p.n)


def test_volume_relaxation():
    p = PanhandleParams(3, 3, 7)
    assert volume_relaxation(302, p) == 292
    v = 302
    for _ in range(7):
        v = volume_relaxation(v, p)
    assert v == 232
    assert volume_relaxation(eulerian(6, 2), PanhandleParams(3, 6, 7)) == 0
    with pytest.raises(ValueError):
        volume_relaxation(5, p)


def test_volume_relaxation_against_oracle_pairs():
    # stressed hyperplane [s] in U_{r-1,s} + U_{1,n-s}, relaxed to Pan_{r,s,n}
    for p in all_panhandle_params(6):
        if p.s == p.n - 1:
            continue
        before = direct_sum(uniform_matroid(p.r - 1, p.s), uniform_matroid(1, p.n - p.s))
        after = relax(before, range(1, p.s + 1))
        v_after = normalized(interpolate_matroid_ehrhart(after), p.n)
        v_before = normalized(interpolate_matroid_ehrhart(before), p.n)
        assert volume_relaxation(v_after, p) == v_before


def test_volume_paving_examples():
    assert volume_paving(steiner_to_profile(fano_plane())) == 232
    for n in range(2, 9):
        for r in range(1, n):
            assert volume_paving(PavingProfile(r, n, {})) == eulerian(n - 1, r - 1)


def test_volume_paving_is_leading_coefficient():
    seen = set()
    for n in range(3, 8):
        for r in range(2, n):
            for fam in paving_hyperplane_families(n, r):
                key = (r, n, tuple(sorted(bin(h).count("1") for h in fam)))
                if key in seen:
                    continue
                seen.add(key)
                prof = PavingProfile(r, n, Counter(key[2]))
                assert volume_paving(prof) == normalized(ehrhart_paving(prof), n)
    # both sides are linear in the profile, so unrealizable profiles still test the identity
    for r in range(2, 8):
        for s in range(r, 8):
            for c in range(1, 4):
                prof = PavingProfile(r, 8, {s: c, 7: 1} if s < 7 else {s: c})
                assert volume_paving(prof) == normalized(ehrhart_paving(prof), 8)


def test_volume_paving_against_oracle_on_small_families():
    limits = OracleLimits(matroid_max_t=6)
    for n in range(4, 7):
        for r in range(2, n - 1):
            for i, fam in enumerate(paving_hyperplane_families(n, r)):
                if i % 11:
                    continue
                m = paving_matroid_from_hyperplanes(n, r, [from_mask(h) for h in fam])
                assert volume_paving(paving_profile(m)) == normalized(interpolate_matroid_ehrhart(m, limits), n)
    assert normalized(interpolate_matroid_ehrhart(uniform_matroid(3, 6)), 6) == volume_hypersimplex(3, 6)


def test_eulerian_second_closed_form():
    for n in range(1, 13):
        assert eulerian(n, 2) == 3**n - (n + 1) * 2**n + n * (n + 1) // 2
