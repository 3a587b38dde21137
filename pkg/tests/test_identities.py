"""Property tests for the continued fraction identities."""

import random

from hypothesis import given
from hypothesis import strategies as st

from lag2.core.cf import FiniteCF, PeriodicCF, continuant, convergent_terms, reversed_tail
from lag2.core.conversion import apply_prefix, cf_to_surd, purely_periodic_surd, tail_surd
from lag2.patterns.lemmas import (
    random_periodic_cf,
    verify_cf_difference,
    verify_continuant_rule,
    verify_perron,
)
from tests.conftest import periodic_cfs, quotients

words = st.lists(quotients, min_size=2, max_size=16).map(tuple)


class TestPerron:
    """Test ||q_n alpha|| = 1 / (q_n (alpha_{n+1} + alpha*_n))."""

    @given(periodic_cfs(), st.integers(min_value=1, max_value=12))
    def test_identity(self, cf, n):
        """Test the identity holds exactly."""
        p, q, _, _ = convergent_terms(cf, n)
        error = cf_to_surd(cf) * q - p
        if error.sign() < 0:
            error = -error
        assert error * (tail_surd(cf, n + 1) + reversed_tail(cf, n)) * q == 1

    def test_sign_alternates(self):
        """Test p_n q_{n-1} - p_{n-1} q_n = (-1)^(n+1)."""
        cf = PeriodicCF(2, (), (1, 1, 3))
        for n in range(1, 20):
            p, q, p_prev, q_prev = convergent_terms(cf, n)
            assert p * q_prev - p_prev * q == (-1) ** (n + 1)

    def test_report(self):
        """Test the seeded verifier passes."""
        report = verify_perron(samples=60, seed=3)
        assert report.passed
        assert len(report.checks) == 60


class TestCfDifference:
    """Test beta - alpha for expansions sharing a prefix."""

    @given(
        st.lists(quotients, min_size=1, max_size=8),
        st.lists(quotients, min_size=1, max_size=5),
        st.lists(quotients, min_size=1, max_size=5),
    )
    def test_difference(self, prefix, alpha_period, beta_period):
        """Test the shared-prefix difference formula for tails in one field."""
        prefix, alpha_period = tuple(prefix), tuple(alpha_period)
        alpha_tail = purely_periodic_surd(alpha_period)
        beta_tail = cf_to_surd(PeriodicCF(beta_period[0], tuple(beta_period[1:]), alpha_period))
        n = len(prefix)
        _, q, _, q_prev = convergent_terms(FiniteCF(0, prefix), n)
        star = reversed_tail(FiniteCF(0, prefix), n)
        assert star * q == q_prev
        sign = 1 if n % 2 else -1
        spread = (alpha_tail + star) * (beta_tail + star) * (q * q)
        predicted = (beta_tail - alpha_tail) * sign / spread
        assert apply_prefix(0, prefix, beta_tail) - apply_prefix(0, prefix, alpha_tail) == predicted

    def test_report(self):
        """Test the seeded verifier passes."""
        assert verify_cf_difference(samples=60, seed=5).passed


class TestContinuantRule:
    """Test the splitting rule for continuants."""

    @given(words)
    def test_split(self, word):
        """Test <w> = <u><v> + <u'><'v> at every split."""
        total = continuant(word)
        for t in range(1, len(word)):
            assert total == continuant(word[:t]) * continuant(word[t:]) + continuant(
                word[: t - 1]
            ) * continuant(word[t + 1:])

    @given(words)
    def test_reversal(self, word):
        """Test continuants are invariant under reversal."""
        assert continuant(word) == continuant(tuple(reversed(word)))

    def test_report(self):
        """Test the seeded verifier passes and is reproducible."""
        first = verify_continuant_rule(samples=80, seed=11)
        second = verify_continuant_rule(samples=80, seed=11)
        assert first.passed
        assert first == second

    def test_random_cf_bounds(self):
        """Test sample generation respects its bounds."""
        rng = random.Random(0)
        for _ in range(50):
            cf = random_periodic_cf(rng, max_period=4, max_quotient=3, max_preperiod=2)
            assert len(cf.period) <= 4
            assert max(cf.period) <= 3
            assert len(cf.preperiod) <= 2
