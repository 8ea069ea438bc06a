import numpy as np
import pytest

from conftest import WOWA_EXAMPLE_A, WOWA_EXAMPLE_B, crisp_pairs, random_fuzzy
from oracles import dense_fowa, dense_mcx, median_of_set
from fqfrs.errors import CapacityError
from fqfrs.fuzzy_core import fuzzy_median, kd_implicator, minimum
from fqfrs.qfm import (
    brute_envelope,
    brute_top_bottom,
    brute_value_set,
    cut_breakpoints,
    envelope_q2,
    envelope_unary,
    fowa_binary_q2,
    fowa_binary_q_arrow,
    fowa_brute,
    fowa_unary,
    mcx_binary_q2,
    q2,
    q2_top_bottom_at,
    q_arrow,
)
from fqfrs.quantifiers import semi_q2, semi_q_arrow, yager_implication_binary, yager_unary
from fqfrs.rim import EXISTENTIAL, IDENTITY, UNIVERSAL, ThresholdGT, ZadehS

S07 = ZadehS(0.7, 1.0)
RIMS = [UNIVERSAL, EXISTENTIAL, IDENTITY, S07, ZadehS(0.2, 0.6), ThresholdGT(0.4)]


def pick(rng, seq):
    return seq[int(rng.integers(len(seq)))]


def test_brute_top_bottom_examples():
    A = np.array([1.0, 0.0, 1.0])
    B = np.array([1.0, 1.0, 0.0])
    v = semi_q2(IDENTITY, A > 0, B > 0)
    for g in (0.0, 0.3, 1.0):
        assert brute_top_bottom(q2(IDENTITY), A, B, g) == (v, v)
    # x3 in the fringe at gamma = 0.5: A' is {x1} or {x1, x3}
    A = np.array([1.0, 0.0, 0.6])
    top, bottom = brute_top_bottom(q2(IDENTITY), A, B, 0.5)
    assert (top, bottom) == (1.0, 0.5)
    # gamma = 1: range runs from the core to the support
    A = np.array([1.0, 0.3, 0.0])
    values = brute_value_set(q2(IDENTITY), A, np.array([1.0, 0.0, 0.0]), 1.0)
    assert sorted(values) == [0.5, 1.0]


def test_brute_capacity_limit():
    A = np.full(13, 0.5)
    with pytest.raises(CapacityError):
        brute_value_set(q2(IDENTITY), A, A, 0.5)


def test_envelope_crisp_is_constant():
    for A, B in crisp_pairs(3):
        env = envelope_q2(S07, A, B)
        v = semi_q2(S07, A > 0, B > 0)
        assert np.all(env.top_values == v) and np.all(env.bottom_values == v)
        assert env.top_at_zero == v == env.bottom_at_zero


def test_envelope_matches_brute(rng):
    for _ in range(150):
        n = int(rng.integers(1, 7))
        A, B = random_fuzzy(rng, n), random_fuzzy(rng, n)
        rim = pick(rng, RIMS)
        e = None if rng.random() < 0.5 else float(rng.integers(2))
        env = envelope_q2(rim, A, B, e)
        ref = brute_envelope(q2(rim, e), A, B)
        assert np.array_equal(env.breakpoints, ref.breakpoints)
        assert np.allclose(env.top_values, ref.top_values, atol=1e-12)
        assert np.allclose(env.bottom_values, ref.bottom_values, atol=1e-12)
        assert env.top_at_zero == pytest.approx(ref.top_at_zero, abs=1e-12)
        assert env.bottom_at_zero == pytest.approx(ref.bottom_at_zero, abs=1e-12)
        assert np.all(np.diff(env.top_values) >= -1e-12)
        assert np.all(np.diff(env.bottom_values) <= 1e-12)
        assert np.all(env.bottom_values <= env.top_values + 1e-12)


def test_envelope_at_arbitrary_levels(rng):
    for _ in range(50):
        n = int(rng.integers(1, 6))
        A, B = random_fuzzy(rng, n), random_fuzzy(rng, n)
        for g in rng.random(4):
            assert q2_top_bottom_at(S07, A, B, g) == pytest.approx(brute_top_bottom(q2(S07), A, B, g), abs=1e-12)
            env = envelope_q2(S07, A, B)
            assert env.at(g) == pytest.approx(q2_top_bottom_at(S07, A, B, g), abs=1e-12)


def test_envelope_a_equals_b_top_is_one(rng):
    for _ in range(50):
        A = random_fuzzy(rng, int(rng.integers(1, 8)))
        env = envelope_q2(S07, A, A)
        assert np.all(env.top_values == 1.0)


def test_median_of_value_set_is_median_of_extremes(rng):
    for _ in range(100):
        n = int(rng.integers(1, 6))
        A, B = random_fuzzy(rng, n), random_fuzzy(rng, n)
        Q = q2(pick(rng, RIMS))
        g = float(rng.random())
        values = brute_value_set(Q, A, B, g)
        assert median_of_set(values) == fuzzy_median(max(values), min(values))


def test_breakpoints():
    bp = cut_breakpoints([0.5, 0.75, 0.25, 1.0], [0.1])
    assert bp.tolist() == [0.0, 0.5, 0.8, 1.0]


def test_fowa_reductions(rng):
    for _ in range(200):
        n = int(rng.integers(1, 10))
        A, B = random_fuzzy(rng, n), random_fuzzy(rng, n)
        assert fowa_binary_q2(UNIVERSAL, A, B) == pytest.approx(kd_implicator(A, B).min(), abs=1e-12)
        assert fowa_binary_q2(EXISTENTIAL, A, B) == pytest.approx(minimum(A, B).max(), abs=1e-12)
        assert mcx_binary_q2(UNIVERSAL, A, B) == pytest.approx(kd_implicator(A, B).min(), abs=1e-12)
        assert mcx_binary_q2(EXISTENTIAL, A, B) == pytest.approx(minimum(A, B).max(), abs=1e-12)


def test_crisp_restriction_exhaustive():
    for n in range(1, 6):
        for A, B in crisp_pairs(n):
            for rim in (S07, IDENTITY, UNIVERSAL, EXISTENTIAL):
                v = semi_q2(rim, A > 0, B > 0)
                assert fowa_binary_q2(rim, A, B) == pytest.approx(v, abs=1e-12)
                assert mcx_binary_q2(rim, A, B) == pytest.approx(v, abs=1e-12)
                assert fowa_binary_q_arrow(rim, A, B) == pytest.approx(semi_q_arrow(rim, A > 0, B > 0), abs=1e-12)


def test_fowa_unary(rng):
    for _ in range(200):
        A = random_fuzzy(rng, int(rng.integers(1, 10)))
        rim = pick(rng, RIMS)
        assert fowa_unary(rim, A) == pytest.approx(yager_unary(rim, A), abs=1e-12)
    A = np.array([1.0, 0.0, 1.0, 1.0])
    assert fowa_unary(S07, A) == pytest.approx(S07(0.75))
    assert fowa_unary(IDENTITY, np.full(5, 0.3)) == pytest.approx(0.3)
    assert envelope_unary(IDENTITY, np.full(5, 0.3)).owa_integral() == pytest.approx(0.3)


def test_fowa_q_arrow(rng):
    assert fowa_binary_q_arrow(S07, WOWA_EXAMPLE_A, WOWA_EXAMPLE_B) == pytest.approx(0.8185185185, abs=1e-9)
    for _ in range(100):
        n = int(rng.integers(1, 7))
        A, B = random_fuzzy(rng, n), random_fuzzy(rng, n)
        rim = pick(rng, RIMS)
        assert fowa_brute(q_arrow(rim), A, B) == pytest.approx(fowa_binary_q_arrow(rim, A, B), abs=1e-10)


def test_dfs_inequalities(rng):
    for _ in range(300):
        n = int(rng.integers(1, 10))
        A, B = random_fuzzy(rng, n), random_fuzzy(rng, n)
        rim = pick(rng, RIMS)
        f = fowa_binary_q2(rim, A, B)
        assert fowa_binary_q_arrow(rim, A, B) >= f - 1e-12
        assert yager_implication_binary(rim, A, B) >= f - 1e-12


def test_dense_grid_oracles(rng):
    for _ in range(15):
        n = int(rng.integers(1, 6))
        A, B = random_fuzzy(rng, n), random_fuzzy(rng, n)
        rim = pick(rng, RIMS)
        assert fowa_binary_q2(rim, A, B) == pytest.approx(dense_fowa(q2(rim), A, B), abs=1e-3)
        assert mcx_binary_q2(rim, A, B) == pytest.approx(dense_mcx(q2(rim), A, B), abs=1e-3)


def test_mcx_shifted_crisp_example():
    # memberships 0.9 / 0.1: cut status only changes at gamma = 0.8
    A = np.array([0.9, 0.9, 0.1, 0.9])
    B = np.array([0.9, 0.1, 0.1, 0.9])
    env = envelope_q2(IDENTITY, A, B)
    assert env.breakpoints.tolist() == pytest.approx([0.0, 0.8, 1.0])
    # gamma <= 0.8: A' = {x1, x2, x4}, B' = {x1, x4}; gamma > 0.8 every element is in the fringe
    assert (env.top_values[0], env.bottom_values[0]) == pytest.approx((2 / 3, 2 / 3))
    for i, g in enumerate((0.4, 0.9)):
        assert (env.top_values[i], env.bottom_values[i]) == pytest.approx(brute_top_bottom(q2(IDENTITY), A, B, g))
    assert env.top_values[1] == 1.0 and env.bottom_values[1] == 0.0
    # f = 2/3 on (0, 0.8], 1/2 above: 1/2 + 1/2 * min(0.8, 1/3)
    assert mcx_binary_q2(IDENTITY, A, B) == pytest.approx(0.5 + 0.5 / 3)
    assert fowa_binary_q2(IDENTITY, A, B) == pytest.approx(0.8 * 2 / 3 + 0.2 * 0.5)


def test_stacked_models(rng):
    A = random_fuzzy(rng, 5, k=4)
    B = random_fuzzy(rng, 5)
    for f in (fowa_binary_q2, mcx_binary_q2):
        assert np.allclose(f(S07, A, B), [f(S07, row, B) for row in A])
    assert np.allclose(fowa_unary(S07, A), [yager_unary(S07, row) for row in A])
