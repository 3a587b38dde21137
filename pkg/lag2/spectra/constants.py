"""Classical Lagrange, second Lagrange and Dirichlet constants of periodic numbers.

Each limsup runs over finitely many residue classes of indices modulo the
period, so it is the exact maximum over period positions of a limiting value.
Preperiod positions never contribute.
"""

import logging

from ..core.cf import PeriodicCF
from ..core.surd import QuadraticSurd, compare
from .base import BaseConstant, PeriodSlot, SpectrumValue, period_slots
from .kappa import kappa_profile

logger = logging.getLogger(__name__)

GOLDEN_PERIOD = (1,)
GOLDEN_LAMBDA2 = QuadraticSurd(0, 1, 5, 4)


class _SlotMaximum(BaseConstant):
    """Maximum of a per-position value over the period."""

    def slot_value(self, slot: PeriodSlot) -> QuadraticSurd:
        raise NotImplementedError

    def evaluate(self, cf: PeriodicCF) -> SpectrumValue:
        best_value, best_position = None, None
        for slot in period_slots(cf.period):
            value = self.slot_value(slot)
            if best_value is None or compare(value, best_value) > 0:
                best_value, best_position = value, slot.position
        return SpectrumValue(
            value=best_value,
            witness_position=best_position,
            witness_kappa=None,
            source_cf=cf,
            note=self.name,
        )


class LagrangeConstant(_SlotMaximum):
    """lambda(alpha) = limsup (alpha_{n} + alpha*_{n-1})."""

    name = "lambda"

    def slot_value(self, slot: PeriodSlot) -> QuadraticSurd:
        return slot.alpha_n + slot.alpha_star_prev


class DirichletConstant(_SlotMaximum):
    """d(alpha) = limsup [a_n; a_{n-1}, ..., a_1] * [a_{n+1}; a_{n+2}, ...]."""

    name = "dirichlet"

    def slot_value(self, slot: PeriodSlot) -> QuadraticSurd:
        # [a_{n-1}; ..., a_1] = 1 / alpha*_{n-1} and [a_n; ...] = alpha_n
        return slot.alpha_n / slot.alpha_star_prev


class SecondLagrangeConstant(BaseConstant):
    """lambda^[2](alpha) as the limsup of max(kappa1, kappa2, kappa4) over a_n >= 2."""

    name = "lambda2"

    def evaluate(self, cf: PeriodicCF) -> SpectrumValue:
        if cf.period == GOLDEN_PERIOD:
            return SpectrumValue(
                value=GOLDEN_LAMBDA2,
                witness_position=None,
                witness_kappa=None,
                source_cf=cf,
                note="golden ratio class",
            )
        best = None
        for profile in self.profiles(cf):
            if best is None or compare(profile.max_kappa, best.max_kappa) > 0:
                best = profile
        logger.debug(
            "lambda2 witness at position %d (%s)", best.period_position, best.dominant.value
        )
        return SpectrumValue(
            value=best.max_kappa,
            witness_position=best.period_position,
            witness_kappa=best.dominant,
            source_cf=cf,
        )

    def profiles(self, cf: PeriodicCF):
        """Every KappaProfile over the period, for positions with a_n >= 2."""
        slots = period_slots(cf.period)
        return [
            kappa_profile(
                slot.alpha_n,
                slot.alpha_star_prev,
                slots[(j + 1) % len(slots)].alpha_n,
                slots[(j + 1) % len(slots)].alpha_star_prev,
                period_position=j,
            )
            for j, slot in enumerate(slots)
            if slot.quotient >= 2
        ]


def lambda_classic(cf: PeriodicCF) -> SpectrumValue:
    return LagrangeConstant().evaluate(cf)


def lambda2(cf: PeriodicCF) -> SpectrumValue:
    return SecondLagrangeConstant().evaluate(cf)


def dirichlet_value(cf: PeriodicCF) -> QuadraticSurd:
    return DirichletConstant().evaluate(cf).value
