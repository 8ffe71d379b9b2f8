import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gcdec.errors import InvalidParams, ParamsTooLarge
from gcdec.thresholds import (
    actual_attempts,
    adversarial_efail_oracle,
    bound_collaborative,
    bound_independent,
    independent_ladder,
    k_min,
    limit_thresholds,
    maximal_threshold_set,
    min_attempts_independent,
    thresholds_collaborative,
    thresholds_independent,
    ThresholdSet,
)


def test_independent_examples():
    assert thresholds_independent(20, 10).integer_parts == tuple(range(10))
    assert thresholds_independent(20, 3).values == (2, 5, 8)
    assert thresholds_independent(20, 1).values == (6,)


def test_independent_bound_examples():
    assert bound_independent(33, 20, 10) == 330
    assert bound_independent(33, 20, 1) == 231
    assert bound_independent(33, 20, 2) == 264


def test_min_attempts():
    assert min_attempts_independent(20) == (10, 10)
    assert min_attempts_independent(21) == (math.inf, 10)
    assert min_attempts_independent(3)[1] == 1


def test_collaborative_examples():
    t3 = thresholds_collaborative(20, 2, 3)
    assert [float(t) for t in t3.values] == pytest.approx([4.7931, 7.6897, 9.1379], abs=1e-4)
    assert t3.integer_parts == (4, 7, 9)
    assert thresholds_collaborative(20, 2, 2).integer_parts[-1] == 8
    assert thresholds_collaborative(20, 2, 1).z == 1


def test_collaborative_bounds():
    assert bound_collaborative(33, thresholds_collaborative(20, 2, 3)) == 330
    t1 = thresholds_collaborative(20, 2, 1)
    assert bound_collaborative(33, t1) == 33 * (t1.integer_parts[0] + 1)


def test_maximal_sets():
    assert maximal_threshold_set(20, 2).integer_parts == (4, 7, 9)
    assert k_min(21, 2) == 4
    assert maximal_threshold_set(21, 2).integer_parts == (4, 7, 8, 9, 10)
    assert k_min(3, 8) == 1
    assert maximal_threshold_set(3, 8).integer_parts == (0, 1)
    assert limit_thresholds(21, 2, 2) == (Fraction(10) - Fraction(11, 2), Fraction(10) - Fraction(11, 4))


def test_actual_attempts():
    assert actual_attempts(maximal_threshold_set(21, 2)) == 5
    assert actual_attempts(maximal_threshold_set(3, 8)) == 2
    same = ThresholdSet((Fraction(1, 3), Fraction(1, 2)), "independent", 5)
    assert actual_attempts(same) == 1


def test_invalid_params():
    with pytest.raises(InvalidParams):
        thresholds_independent(1, 3)
    with pytest.raises(InvalidParams):
        thresholds_independent(20, 0)
    with pytest.raises(InvalidParams):
        thresholds_collaborative(20, 1, 3)


@given(st.integers(2, 60), st.integers(1, 40), st.integers(1, 40))
def test_closed_form_agrees_on_floors_and_ordering(d_i, z, d_o):
    tset = thresholds_independent(d_i, z)
    assert list(tset.values) == sorted(tset.values)
    assert tset.values[-1] <= Fraction(d_i - 1, 2)
    assert tset.z_star <= tset.z


@given(st.integers(2, 60), st.integers(2, 10), st.integers(1, 30))
def test_collaborative_ordered_and_bounded(d_i, ell, z):
    tset = thresholds_collaborative(d_i, ell, z)
    assert all(a < b for a, b in zip(tset.values, tset.values[1:]))
    assert tset.values[-1] <= Fraction(d_i - 1, 2)
    assert tset.z_star <= tset.z


@pytest.mark.parametrize("d_i", [4, 5, 20, 21])
@pytest.mark.parametrize("ell", [2, 3, 8])
def test_bounds_non_decreasing_and_capped(d_i, ell):
    d_o = 7
    ind = [bound_independent(d_o, d_i, z) for z in range(1, 40)]
    col = [bound_collaborative(d_o, thresholds_collaborative(d_i, ell, z)) for z in range(1, 40)]
    for seq in (ind, col):
        assert all(a <= b for a, b in zip(seq, seq[1:]))
        assert max(seq) <= Fraction(d_o * d_i, 2) + (Fraction(d_o, 2) if d_i % 2 else 0)


def test_closed_form_vs_floor_form_mismatch_is_real():
    """The product form d_o z floor((d_i+1)/(2z+1)) is not the floor form for every z."""
    z = 4
    assert 33 * z * (21 // (2 * z + 1)) == 264
    assert bound_independent(33, 20, z) == 297


@pytest.mark.parametrize("d_i", [20, 21])
def test_limit_at_large_z(d_i):
    big = 10**6
    top_ind = thresholds_independent(d_i, big).values[-1]
    top_col = thresholds_collaborative(d_i, 2, big).values[-1]
    assert float(top_ind) == pytest.approx((d_i - 1) / 2, abs=1e-3)
    assert float(top_col) == pytest.approx((d_i - 1) / 2, abs=1e-3)


@pytest.mark.parametrize("ell", [2, 3, 8])
def test_zstar_at_most_kmin_plus_one(ell):
    for d_i in range(3, 101, 2):
        assert maximal_threshold_set(d_i, ell).z_star <= k_min(d_i, ell) + 1


def test_independent_ladder():
    assert independent_ladder(20) == tuple(range(10))
    assert independent_ladder(7) == (0, 1, 2, 3)


# -- adversarial oracle ----------------------------------------------------


def test_oracle_example_with_optimal_z1_set():
    # thresholds_independent(6, 1) has integer part 1
    assert thresholds_independent(6, 1).integer_parts == (1,)
    assert adversarial_efail_oracle(5, 6, 2, 1, [1]) == bound_independent(5, 6, 1) == 10


def test_oracle_single_position_budget():
    # d_o = 1: one inner failure column already sinks every attempt
    for ts in ([0], [1], [0, 2]):
        assert adversarial_efail_oracle(1, 6, 3, 2, ts) <= 3


def test_oracle_independent_matches_bound():
    """Independent regime: the formula thresholds fail exactly at the closed-form bound."""
    for d_o, d_i, z in itertools.product((3, 5, 7), range(3, 11), (1, 2, 3)):
        ts = thresholds_independent(d_i, z).integer_parts
        assert adversarial_efail_oracle(d_o, d_i, 2, 1, ts) == bound_independent(d_o, d_i, z)


def test_oracle_odd_inner_distance_needs_top_threshold():
    # d_i = 3: thresholds {0, 1} reach d_o d_i / 2 rounded up, {0} alone does not
    assert adversarial_efail_oracle(5, 3, 2, 1, [0, 1]) == 8
    assert adversarial_efail_oracle(5, 3, 2, 1, [0]) < 8


def test_oracle_caps():
    with pytest.raises(ParamsTooLarge):
        adversarial_efail_oracle(13, 6, 2, 1, [1])
    with pytest.raises(ParamsTooLarge):
        adversarial_efail_oracle(5, 6, 2, 1, [0, 1, 2, 2, 2])
