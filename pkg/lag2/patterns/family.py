"""Numbers whose second Lagrange constant is exactly lambda_inf.

For block lengths n_1 <= n_2 <= ... tending to infinity the expansion

    [0; (3,1,1)^(2n_1+1), 3,1,1,1,1, (3,1,1)^(2n_2+1), 3,1,1,1,1, ...]

has kappa4 at every junction 3 (the 3 right after 1,1,1,1) tending to
lambda_inf, and distinct sequences give distinct numbers. This module builds
the finite prefix for a given sequence and encloses kappa at its junctions.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from ..core.cf import FiniteCF, RationalEnclosure, Word, word_range
from ..core.errors import DomainError
from ..spectra.kappa import KappaKind, kappa_enclosure
from ..spectra.ladder import lambda_infinity

logger = logging.getLogger(__name__)

BLOCK = (3, 1, 1)
JUNCTION = (3, 1, 1, 1, 1)
REFERENCE_BITS = 128


@dataclass(frozen=True)
class JunctionEstimate:
    """Enclosures of the three kappa values at the junction 3 at index ``index``."""

    index: int
    kappa1: RationalEnclosure
    kappa2: RationalEnclosure
    kappa4: RationalEnclosure

    @property
    def kappa4_dominates(self) -> bool:
        return self.kappa1.below(self.kappa4) and self.kappa2.below(self.kappa4)


@dataclass(frozen=True)
class FamilyReport:
    n_sequence: Tuple[int, ...]
    prefix: FiniteCF
    junctions: Tuple[JunctionEstimate, ...]
    spread: Fraction

    def within(self, tolerance: Fraction) -> bool:
        """Every junction kappa4 lies within ``tolerance`` of lambda_inf."""
        return self.spread <= tolerance


def family_prefix(n_sequence: Sequence[int]) -> Word:
    word: Tuple[int, ...] = ()
    for n in n_sequence:
        word += BLOCK * (2 * n + 1) + JUNCTION
    return word


def _junction_indices(n_sequence: Sequence[int]) -> Tuple[int, ...]:
    """1-based indices of the 3 opening every block group after the first."""
    indices, position = [], 0
    for n in n_sequence[:-1]:
        position += len(BLOCK) * (2 * n + 1) + len(JUNCTION)
        indices.append(position + 1)
    return tuple(indices)


def _estimate(word: Word, index: int) -> JunctionEstimate:
    alpha_n = word_range(word[index - 1], word[index:])
    alpha_next = word_range(word[index], word[index + 1 :])
    star_prev = RationalEnclosure.point(FiniteCF(0, tuple(reversed(word[: index - 1]))).value())
    star_n = RationalEnclosure.point(FiniteCF(0, tuple(reversed(word[:index]))).value())
    return JunctionEstimate(
        index=index,
        kappa1=kappa_enclosure(KappaKind.KAPPA1, alpha_n, star_prev),
        kappa2=kappa_enclosure(KappaKind.KAPPA2, alpha_next, star_n),
        kappa4=kappa_enclosure(KappaKind.KAPPA4, alpha_n, star_prev),
    )


def continuum_family(n_sequence: Sequence[int]) -> FamilyReport:
    """Prefix of the family member for ``n_sequence`` and kappa at its junctions.

    The sequence needs at least two entries, since the first junction sits
    where the second block group begins.
    """
    n_sequence = tuple(int(n) for n in n_sequence)
    if not n_sequence:
        raise DomainError("the block length sequence is empty")
    if any(n < 1 for n in n_sequence):
        raise DomainError(f"block lengths must be positive, got {n_sequence}")
    if len(n_sequence) < 2:
        raise DomainError("at least two block lengths are needed to reach a junction")
    if list(n_sequence) != sorted(n_sequence):
        logger.warning("block lengths %s are not nondecreasing", n_sequence)

    word = family_prefix(n_sequence)
    junctions = tuple(_estimate(word, index) for index in _junction_indices(n_sequence))
    reference = lambda_infinity().enclosure(REFERENCE_BITS)
    spread = max(junction.kappa4.distance_bound(reference) for junction in junctions)
    logger.info("family %s: %d junctions, spread %.3e", n_sequence, len(junctions), float(spread))
    return FamilyReport(
        n_sequence=n_sequence,
        prefix=FiniteCF(0, word),
        junctions=junctions,
        spread=spread,
    )
