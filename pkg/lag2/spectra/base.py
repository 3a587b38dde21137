"""Base interface for spectrum constants of eventually periodic numbers."""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

from ..core.cf import PeriodicCF, Word, rotate
from ..core.conversion import purely_periodic_surd
from ..core.surd import QuadraticSurd
from .kappa import KappaKind


@dataclass(frozen=True)
class PeriodSlot:
    """Limits of alpha_n and alpha*_{n-1} along indices n with a_n at one period position.

    alpha_n is exactly periodic along the residue class; alpha*_{n-1} converges to
    the purely periodic number read backwards from a_{n-1}.
    """

    position: int
    quotient: int
    alpha_n: QuadraticSurd
    alpha_star_prev: QuadraticSurd


@lru_cache(maxsize=1024)
def period_slots(period: Word) -> Tuple[PeriodSlot, ...]:
    slots = []
    for j, quotient in enumerate(period):
        backwards = tuple(period[(j - 1 - i) % len(period)] for i in range(len(period)))
        slots.append(
            PeriodSlot(
                position=j,
                quotient=quotient,
                alpha_n=purely_periodic_surd(rotate(period, j)),
                alpha_star_prev=purely_periodic_surd(backwards).invert(),
            )
        )
    return tuple(slots)


@dataclass(frozen=True)
class SpectrumValue:
    """A limsup value with the period position that attains it."""

    value: QuadraticSurd
    witness_position: Optional[int]
    witness_kappa: Optional[KappaKind]
    source_cf: PeriodicCF
    note: str = ""

    @property
    def witness_label(self) -> str:
        if self.witness_kappa is not None:
            return self.witness_kappa.value
        return self.note or "-"


class BaseConstant(ABC):
    """Abstract base class for constants computed from the period of a number."""

    name: str = ""

    @abstractmethod
    def evaluate(self, cf: PeriodicCF) -> SpectrumValue:
        """Compute the constant exactly."""
        pass
