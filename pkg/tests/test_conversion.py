"""Unit tests for conversions between continued fractions and surds."""

import pytest
from hypothesis import given

from lag2.core.cf import PeriodicCF
from lag2.core.conversion import (
    apply_prefix,
    cf_to_surd,
    purely_periodic_surd,
    surd_to_cf,
    tail_surd,
)
from lag2.core.errors import NotEventuallyPeriodicError
from lag2.core.surd import QuadraticSurd
from tests.conftest import periodic_cfs


class TestCfToSurd:
    """Test exact evaluation."""

    def test_purely_periodic(self):
        """Test the period matrix fixed point."""
        assert purely_periodic_surd((1,)) == QuadraticSurd(1, 1, 5, 2)
        assert purely_periodic_surd((2,)) == QuadraticSurd(1, 1, 2)
        assert purely_periodic_surd((1, 1, 3)) == QuadraticSurd(3, 1, 17, 4)

    def test_with_integer_part(self):
        """Test [2;(1,1,3)*] = (1 + sqrt(17))/2 and [0;(3,1,1)*] = (-3 + sqrt(17))/4."""
        assert cf_to_surd(PeriodicCF(2, (), (1, 1, 3))) == QuadraticSurd(1, 1, 17, 2)
        assert cf_to_surd(PeriodicCF(0, (), (3, 1, 1))) == QuadraticSurd(-3, 1, 17, 4)

    def test_stated_expansion_radicand(self):
        """Test [2;(1,1,1,1,3,1,1,3)*] lies in Q(sqrt(173))."""
        value = cf_to_surd(PeriodicCF(2, (), (1, 1, 1, 1, 3, 1, 1, 3)))
        assert value == QuadraticSurd(43, 13, 173, 82)

    def test_apply_prefix(self):
        """Test [1; 1, x] with x = phi gives phi."""
        golden = QuadraticSurd(1, 1, 5, 2)
        assert apply_prefix(1, (1,), golden) == golden

    def test_tail_surd(self):
        """Test alpha_3 of [2;(1,1,3)*]."""
        assert tail_surd(PeriodicCF(2, (), (1, 1, 3)), 3) == QuadraticSurd(3, 1, 17, 2)


class TestSurdToCf:
    """Test expansion of quadratic irrationals."""

    @pytest.mark.parametrize(
        "value, expected",
        [
            (QuadraticSurd.sqrt(2), PeriodicCF(1, (), (2,))),
            (QuadraticSurd.sqrt(3), PeriodicCF(1, (), (1, 2))),
            (QuadraticSurd(1, 1, 5, 2), PeriodicCF(1, (), (1,))),
            (QuadraticSurd(1, 1, 17, 2), PeriodicCF(2, (), (1, 1, 3))),
            (-QuadraticSurd.sqrt(2), PeriodicCF(-2, (1, 1), (2,))),
        ],
    )
    def test_known_expansions(self, value, expected):
        """Test classical expansions."""
        assert surd_to_cf(value) == expected

    def test_rational_rejected(self):
        """Test rational input has no periodic expansion."""
        with pytest.raises(NotEventuallyPeriodicError):
            surd_to_cf(QuadraticSurd.rational(3))

    @given(periodic_cfs())
    def test_expansion_recovers_cf(self, cf):
        """Test surd_to_cf inverts cf_to_surd on canonical forms."""
        assert surd_to_cf(cf_to_surd(cf)) == cf
