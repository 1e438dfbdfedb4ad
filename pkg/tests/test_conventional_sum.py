"""Hard-wall transition-sum tests and the C' calibration round trip."""

import math

import pytest

from wellpol.conventional_sum import (
    calibrate_C,
    infinite_well_alpha,
    infinite_well_term,
)
from wellpol.dalgarno_lewis import alpha2_prime_hard_wall
from wellpol.errors import DomainError

# Frozen from tests/oracles.py (box matrix elements by mpmath quadrature).
BOX_TERM2 = 0.07013171019950307
BOX_TERM4 = 8.976858905536392e-05
HARD_WALL_ALPHA_EXACT = 0.07022473357056967
HARD_WALL_ALPHA2T_EXACT = -0.13241763371410586


class TestTerms:
    def test_parity_selection_rule(self):
        assert infinite_well_term(3) == 0.0
        assert infinite_well_term(5) == 0.0

    def test_dominant_term_closed_form(self):
        term = infinite_well_term(2)
        assert term == pytest.approx(16384.0 / (243.0 * math.pi**6), rel=1e-12)
        assert term == pytest.approx(BOX_TERM2, rel=1e-13)

    def test_second_term_against_frozen_oracle(self):
        assert infinite_well_term(4) == pytest.approx(BOX_TERM4, rel=1e-13)

    def test_terms_fall_off_fast(self):
        assert infinite_well_term(4) / infinite_well_term(2) < 0.002

    def test_rejects_ground_state_index(self):
        with pytest.raises(DomainError):
            infinite_well_term(1)
        with pytest.raises(DomainError):
            infinite_well_term(0)


class TestPartialSums:
    def test_one_term_value(self):
        result = infinite_well_alpha(1)
        assert result.partial_alpha_prime == pytest.approx(0.07013, abs=1e-5)
        converged = infinite_well_alpha(50).partial_alpha_prime
        assert result.partial_alpha_prime / converged >= 0.99

    def test_converged_sum_hits_hard_wall_value(self):
        # The complete transition series resums to the closed-form box
        # polarizability; 50 terms decay as n^-8 and are fully converged.
        result = infinite_well_alpha(50)
        assert result.partial_alpha_prime == pytest.approx(
            HARD_WALL_ALPHA_EXACT, rel=1e-12
        )

    def test_monotone_increasing_partial_sums(self):
        values = [infinite_well_alpha(n).partial_alpha_prime for n in range(1, 12)]
        for earlier, later in zip(values, values[1:]):
            assert later > earlier

    def test_term_values_strictly_decreasing(self):
        result = infinite_well_alpha(10)
        for earlier, later in zip(result.term_values, result.term_values[1:]):
            assert later < earlier
        assert result.partial_alpha_prime == pytest.approx(
            math.fsum(result.term_values), rel=1e-15
        )

    def test_rejects_empty_sum(self):
        with pytest.raises(DomainError):
            infinite_well_alpha(0)


class TestCalibration:
    def test_round_trip_of_hard_wall_value(self):
        target = alpha2_prime_hard_wall(-1.0)
        assert target == pytest.approx(0.0702247, abs=5e-8)
        assert calibrate_C(target) == pytest.approx(-1.0, abs=1e-9)

    def test_one_term_target_lands_near_minus_one(self):
        c = calibrate_C(infinite_well_term(2))
        assert c == pytest.approx(-1.0, abs=0.01)

    def test_trial_limit_target_gives_zero(self):
        assert calibrate_C(HARD_WALL_ALPHA2T_EXACT) == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.parametrize("c_true", [-2.0, -1.0, -0.5, 0.0])
    def test_identity_on_c(self, c_true):
        assert calibrate_C(alpha2_prime_hard_wall(c_true)) == pytest.approx(
            c_true, abs=1e-10
        )

    def test_agreement_band_with_one_term(self):
        # The two routes that fix C' differ by well under 2e-4 in alpha'.
        gap = alpha2_prime_hard_wall(-1.0) - infinite_well_term(2)
        assert abs(gap) <= 2e-4

    def test_rejects_non_finite_target(self):
        with pytest.raises(DomainError):
            calibrate_C(math.nan)
