"""Tests for the brute-force approximation oracles."""

import random
from fractions import Fraction

import pytest

from lag2.core.cf import PeriodicCF, RationalEnclosure
from lag2.core.errors import ConsistencyError, DomainError
from lag2.spectra import oracle
from lag2.spectra.constants import lambda2
from lag2.spectra.ladder import lambda_infinity, lambda_n, xi
from lag2.spectra.oracle import (
    PsiStep,
    convergent_denominators,
    empirical_lambda2,
    psi2_oracle,
    psi_oracle,
)

SQRT2 = PeriodicCF(1, (), (2,))
SQRT17_CLASS = PeriodicCF(2, (), (1, 1, 3))


class TestPsi:
    """Test psi(t) = min ||q alpha||."""

    def test_steps_at_convergent_denominators(self):
        """Test psi drops exactly at q_n for sqrt(2)."""
        steps = psi_oracle(SQRT2, 100)
        assert [step.t for step in steps] == [1, 2, 5, 12, 29, 70]
        assert convergent_denominators(SQRT2, 100) == {2, 5, 12, 29, 70}

    def test_distances_decrease(self):
        """Test each step improves on the last."""
        steps = psi_oracle(SQRT17_CLASS, 2000)
        for before, after in zip(steps, steps[1:]):
            assert after.distance.below(before.distance)

    def test_empirical_lagrange_constant(self):
        """Test sup (t psi(t))^-1 for large t is close to 2*sqrt(2)."""
        box = empirical_lambda2(psi_oracle(SQRT2, 20000), t_min=1000)
        assert abs(box.midpoint - Fraction(2828427, 10 ** 6)) < Fraction(1, 100)

    def test_inconsistent_denominators(self, mocker):
        """Test a disagreement with the convergents is a consistency error."""
        mocker.patch.object(oracle, "convergent_denominators", return_value={3})
        with pytest.raises(ConsistencyError):
            psi_oracle(SQRT2, 50)

    def test_bad_range(self):
        """Test t_max must be positive."""
        with pytest.raises(DomainError):
            psi_oracle(SQRT2, 0)


class TestPsi2:
    """Test the variant that skips convergent denominators."""

    def test_no_convergent_denominators(self):
        """Test psi2 never steps at a q_n."""
        steps = psi2_oracle(SQRT17_CLASS, 3000)
        denominators = convergent_denominators(SQRT17_CLASS, 3000)
        assert steps
        assert not {step.t for step in steps} & denominators

    def test_empirical_second_constant(self):
        """Test the oracle agrees with sqrt(17)/4 on t in [10^3, 2*10^4]."""
        box = empirical_lambda2(psi2_oracle(SQRT17_CLASS, 20000), t_min=1000)
        assert abs(box.midpoint - Fraction(1030776, 10 ** 6)) < Fraction(1, 100)
        assert box.width < Fraction(1, 10 ** 6)

    def test_lambda_3_generator(self):
        """Test xi_3 on t in [10^3, 10^5] agrees with lambda_3 and not with lambda_inf."""
        steps = psi2_oracle(xi(3), 10 ** 5)
        box = empirical_lambda2(steps, t_min=1000)
        target = lambda_n(3).enclosure(64).midpoint
        assert abs(box.midpoint - target) < Fraction(2, 10 ** 5)
        assert box.hi < lambda_infinity().enclosure(64).lo
        # Without a window the small denominators dominate.
        early = empirical_lambda2(steps, t_min=1)
        assert early.lo > target + Fraction(1, 10 ** 5)

    def test_random_periods_track_lambda2(self):
        """Test ten seeded periodic expansions against their exact lambda2."""
        rng = random.Random(2024)
        for _ in range(10):
            period = tuple(rng.randint(1, 3) for _ in range(rng.randint(1, 4)))
            if max(period) == 1:
                period = (2,) + period[1:]
            cf = PeriodicCF(0, (), period)
            exact = lambda2(cf).value.enclosure(64).midpoint
            box = empirical_lambda2(psi2_oracle(cf, 10 ** 5), t_min=100)
            assert box.lo <= exact + Fraction(1, 10 ** 3), period
            assert abs(box.midpoint - exact) < exact / 20, period

    def test_bad_range(self):
        """Test psi2 needs t_max >= 2."""
        with pytest.raises(DomainError):
            psi2_oracle(SQRT17_CLASS, 1)


class TestEmpirical:
    """Test the enclosure of the sup."""

    def test_step_active_at_t_min(self):
        """Test the step covering t_min is evaluated at t_min."""
        steps = [
            PsiStep(1, RationalEnclosure.point(Fraction(1, 2))),
            PsiStep(10, RationalEnclosure.point(Fraction(1, 40))),
        ]
        assert empirical_lambda2(steps, t_min=5) == RationalEnclosure(
            Fraction(4), Fraction(4)
        )

    def test_empty_window(self):
        """Test a window past the table is rejected."""
        with pytest.raises(DomainError):
            empirical_lambda2([], t_min=1)
