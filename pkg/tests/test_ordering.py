import random
from fractions import Fraction

import pytest

from samplers import mix_toward_gibbs, random_pair, random_state
from thermoconv import (
    GibbsStochasticMap,
    LorenzCurve,
    convertible_lp,
    hinge_abs_sum,
    hinge_condition_d,
    hinge_condition_e,
    hinge_plus_sum,
    lorenz_curve,
    lorenz_dominates,
    make_resource,
    two_level_kink,
    two_level_state,
)

F = Fraction

MIXED = make_resource((F(1, 2), F(1, 2)), (F(2, 3), F(1, 3)))
SHARP = make_resource((F(1), F(0)), (F(2, 3), F(1, 3)))
GIBBS = make_resource((F(2, 3), F(1, 3)), (F(2, 3), F(1, 3)))

# Crossing curves, hence incomparable: one kinks high at t=1/3, the other
# rises to (2/3, 99/100).
INCOMPARABLE_A = make_resource((F(1, 10), F(9, 10)), (F(2, 3), F(1, 3)))
INCOMPARABLE_B = make_resource((F(99, 100), F(1, 100)), (F(2, 3), F(1, 3)))


def all_criteria(a, b):
    return (
        convertible_lp(a, b)[0],
        lorenz_dominates(lorenz_curve(a), lorenz_curve(b)),
        hinge_condition_d(a, b),
        hinge_condition_e(a, b),
    )


class TestLorenzCurve:
    def test_flat_for_gibbs(self):
        assert lorenz_curve(GIBBS).points == ((F(0), F(0)), (F(1), F(1)))

    def test_mixed(self):
        assert lorenz_curve(MIXED).points == (
            (F(0), F(0)),
            (F(1, 3), F(1, 2)),
            (F(1), F(1)),
        )

    def test_sharp(self):
        assert lorenz_curve(SHARP).points == (
            (F(0), F(0)),
            (F(2, 3), F(1)),
            (F(1), F(1)),
        )

    def test_value_at(self):
        curve = lorenz_curve(SHARP)
        assert curve.value_at(F(1, 3)) == F(1, 2)
        assert curve.value_at(F(2, 3)) == F(1)
        assert curve.value_at(F(5, 6)) == F(1)
        with pytest.raises(ValueError):
            curve.value_at(F(3, 2))

    def test_kink_count(self):
        assert lorenz_curve(GIBBS).kink_count == 0
        assert lorenz_curve(SHARP).kink_count == 1

    def test_validation(self):
        with pytest.raises(ValueError, match="concave"):
            LorenzCurve(((F(0), F(0)), (F(1, 2), F(1, 4)), (F(1), F(1))))
        with pytest.raises(ValueError, match="from \\(0,0\\)"):
            LorenzCurve(((F(0), F(1, 10)), (F(1), F(1))))

    def test_level_relabeling_leaves_curve_unchanged(self):
        # sort ties any way you like: the curve cannot tell
        rng = random.Random(5)
        for _ in range(60):
            s = random_state(rng)
            order = list(range(s.n))
            rng.shuffle(order)
            permuted = make_resource(
                [s.p[i] for i in order], [s.g[i] for i in order]
            )
            assert lorenz_curve(permuted).points == lorenz_curve(s).points


class TestLorenzDominates:
    def test_any_curve_dominates_diagonal(self):
        diagonal = lorenz_curve(GIBBS)
        for s in (MIXED, SHARP, INCOMPARABLE_A):
            assert lorenz_dominates(lorenz_curve(s), diagonal)

    def test_diagonal_does_not_dominate_sharp(self):
        assert not lorenz_dominates(lorenz_curve(GIBBS), lorenz_curve(SHARP))

    def test_reflexive(self):
        curve = lorenz_curve(MIXED)
        assert lorenz_dominates(curve, curve)


class TestConvertibleLp:
    def test_anything_reaches_its_gibbs_state(self):
        ok, witness = convertible_lp(MIXED, GIBBS)
        assert ok and witness.transforms(MIXED, GIBBS)

    def test_reflexive_with_witness(self):
        ok, witness = convertible_lp(MIXED, MIXED)
        assert ok and witness.transforms(MIXED, MIXED)

    def test_mixed_cannot_be_sharpened(self):
        ok, witness = convertible_lp(MIXED, SHARP)
        assert not ok and witness is None

    def test_rectangular_witness(self):
        three = make_resource((F(1, 2), F(1, 4), F(1, 4)), (F(1, 6), F(1, 3), F(1, 2)))
        ok, witness = convertible_lp(three, GIBBS)
        assert ok and witness.shape == (2, 3)
        assert witness.transforms(three, GIBBS)
        ok_back, _ = convertible_lp(GIBBS, three)
        assert not ok_back

    def test_witness_column_stochastic_is_enforced(self):
        with pytest.raises(ValueError, match="column 0"):
            GibbsStochasticMap(((F(1, 2), F(1)), (F(1, 3), F(0))))
        with pytest.raises(ValueError, match="negative"):
            GibbsStochasticMap(((F(3, 2), F(1)), (F(-1, 2), F(0))))


class TestHingeConditions:
    def test_identical_states(self):
        assert hinge_condition_d(MIXED, MIXED)
        assert hinge_condition_e(MIXED, MIXED)

    def test_down_to_gibbs(self):
        assert hinge_condition_d(SHARP, GIBBS)
        assert hinge_condition_e(SHARP, GIBBS)

    def test_ordered_pair_goes_one_way_only(self):
        # (9/10, 1/10) and (2/10, 8/10) on g = (2/3, 1/3): the second
        # dominates the first (their curves coincide on [2/3, 1]).
        low = make_resource((F(9, 10), F(1, 10)), (F(2, 3), F(1, 3)))
        high = make_resource((F(2, 10), F(8, 10)), (F(2, 3), F(1, 3)))
        assert not hinge_condition_d(low, high)
        assert hinge_condition_d(high, low)
        assert not hinge_condition_e(low, high)
        assert hinge_condition_e(high, low)
        assert all_criteria(low, high) == (False,) * 4
        assert all_criteria(high, low) == (True,) * 4

    def test_incomparable_pair_fails_both_ways(self):
        assert not hinge_condition_d(INCOMPARABLE_A, INCOMPARABLE_B)
        assert not hinge_condition_d(INCOMPARABLE_B, INCOMPARABLE_A)
        assert not hinge_condition_e(INCOMPARABLE_A, INCOMPARABLE_B)
        assert not hinge_condition_e(INCOMPARABLE_B, INCOMPARABLE_A)

    def test_hinge_sums_values(self):
        # by hand: sum g_i (r_i - t)+ for MIXED at t = 1 is (1/3)(1/2)
        assert hinge_plus_sum(MIXED, F(1)) == F(1, 6)
        assert hinge_abs_sum(MIXED, F(1)) == F(1, 3)
        assert hinge_plus_sum(MIXED, F(0)) == 1
        assert hinge_plus_sum(MIXED, F(3, 2)) == 0


class TestTwoLevelKink:
    def test_ground_state(self):
        assert two_level_kink(F(1, 2), F(0)) == (F(2, 3), F(1))

    def test_colder(self):
        assert two_level_kink(F(1, 2), F(1, 4)) == (F(2, 3), F(4, 5))

    def test_population_inversion_reflected(self):
        assert two_level_kink(F(1, 2), F(2)) == (F(1, 3), F(2, 3))

    def test_gibbs_state_has_no_kink(self):
        with pytest.raises(ValueError, match="no kink"):
            two_level_kink(F(1, 2), F(1, 2))

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            two_level_kink(F(0), F(1, 2))
        with pytest.raises(ValueError):
            two_level_kink(F(1, 2), F(-1))

    def test_kink_lies_on_the_curve(self):
        rng = random.Random(13)
        for _ in range(30):
            a = F(rng.randint(1, 40), rng.randint(41, 80))
            b = F(rng.randint(0, 120), rng.randint(1, 60))
            if a == b:
                continue
            state = two_level_state(a, b)
            t, level = two_level_kink(a, b)
            curve = lorenz_curve(state)
            assert (t, level) in curve.points
            assert curve.value_at(t) == level


class TestEquivalenceAndOrderLaws:
    def test_criteria_agree_on_random_pairs(self):
        rng = random.Random(41)
        seen_true = seen_false = 0
        for _ in range(120):
            a, b = random_pair(rng)
            verdicts = all_criteria(a, b)
            assert len(set(verdicts)) == 1, (a, b, verdicts)
            seen_true += verdicts[0]
            seen_false += not verdicts[0]
        assert seen_true and seen_false

    def test_witnesses_are_exact(self):
        rng = random.Random(42)
        checked = 0
        for _ in range(80):
            a, b = random_pair(rng)
            ok, witness = convertible_lp(a, b)
            if ok:
                assert witness.transforms(a, b)
                checked += 1
        assert checked >= 5

    def test_reflexivity(self):
        rng = random.Random(43)
        for _ in range(25):
            s = random_state(rng)
            ok, witness = convertible_lp(s, s)
            assert ok and witness.transforms(s, s)

    def test_transitivity_by_witness_composition(self):
        rng = random.Random(44)
        for _ in range(25):
            a = random_state(rng)
            b = mix_toward_gibbs(rng, a)
            c = mix_toward_gibbs(rng, b)
            ok_ab, g_ab = convertible_lp(a, b)
            ok_bc, g_bc = convertible_lp(b, c)
            assert ok_ab and ok_bc
            ok_ac, _ = convertible_lp(a, c)
            assert ok_ac
            assert g_bc.compose(g_ab).transforms(a, c)
