"""Brute-force oracles for psi(t) = min ||q*alpha|| and its convergent-free variant.

alpha is held as a fixed-point integer ``A`` with ``A/2^b <= alpha < (A+1)/2^b``,
so ``||q*alpha||`` is known to within ``q/2^b``. Whenever two candidates cannot
be separated at the current precision the whole scan restarts with twice the
bits, up to the configured limit.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Set

from ..core.cf import PeriodicCF, RationalEnclosure, iter_convergents
from ..core.config import precision_limit
from ..core.conversion import cf_to_surd
from ..core.errors import ConsistencyError, DomainError, PrecisionLimitExceeded

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PsiStep:
    """psi takes the value ``distance`` on [t, next step) and it is attained at q = t."""

    t: int
    distance: RationalEnclosure


class _Undecided(Exception):
    pass


def convergent_denominators(cf: PeriodicCF, t_max: int) -> Set[int]:
    """{q_n : n >= 1, q_n <= t_max}."""
    denominators = set()
    for n, (_, q) in enumerate(iter_convergents(cf)):
        if q > t_max:
            break
        if n >= 1:
            denominators.add(q)
    return denominators


def _scan(fixed_alpha: int, bits: int, candidates: Iterable[int]) -> List[PsiStep]:
    modulus = 1 << bits
    steps: List[PsiStep] = []
    best_distance, best_q = None, None
    for q in candidates:
        residue = (q * fixed_alpha) % modulus
        distance = min(residue, modulus - residue)
        if best_distance is not None:
            if distance - q > best_distance + best_q:
                continue
            if distance + q >= best_distance - best_q:
                raise _Undecided()
        best_distance, best_q = distance, q
        steps.append(
            PsiStep(
                t=q,
                distance=RationalEnclosure(
                    Fraction(max(distance - q, 0), modulus), Fraction(distance + q, modulus)
                ),
            )
        )
    return steps


def _oracle(
    cf: PeriodicCF, t_max: int, excluded: Set[int], limit_bits: Optional[int]
) -> List[PsiStep]:
    alpha = cf_to_surd(cf)
    limit = precision_limit(limit_bits)
    bits = 2 * t_max.bit_length() + 64
    while bits <= limit:
        fixed_alpha = (alpha * (1 << bits)).floor()
        candidates = (q for q in range(1, t_max + 1) if q not in excluded)
        try:
            return _scan(fixed_alpha, bits, candidates)
        except _Undecided:
            logger.debug("oracle undecided at %d bits, escalating", bits)
            bits *= 2
    raise PrecisionLimitExceeded(f"psi oracle for t <= {t_max}", limit)


def psi_oracle(cf: PeriodicCF, t_max: int, limit_bits: Optional[int] = None) -> List[PsiStep]:
    """Change points of psi on [1, t_max].

    Also checks that psi drops exactly at convergent denominators.
    """
    if t_max < 1:
        raise DomainError(f"t_max must be >= 1, got {t_max}")
    steps = _oracle(cf, t_max, set(), limit_bits)
    expected = {1} | convergent_denominators(cf, t_max)
    observed = {step.t for step in steps}
    if observed != expected:
        raise ConsistencyError(
            f"psi drops at {sorted(observed)} but convergent denominators are {sorted(expected)}"
        )
    return steps


def psi2_oracle(cf: PeriodicCF, t_max: int, limit_bits: Optional[int] = None) -> List[PsiStep]:
    """Change points of psi^[2], which skips every convergent denominator q_n (n >= 1).

    psi^[2] is undefined below the first admissible q; no step is reported there.
    """
    if t_max < 2:
        raise DomainError(f"t_max must be >= 2, got {t_max}")
    return _oracle(cf, t_max, convergent_denominators(cf, t_max), limit_bits)


def empirical_lambda2(steps: List[PsiStep], t_min: int = 1) -> RationalEnclosure:
    """Enclosure of max (t * psi(t))^-1 over the tabulated t >= t_min.

    On each step the product t*psi(t) is smallest at the left end, so only the
    step points and t_min itself need checking. Works for either oracle.
    """
    points = []
    for index, step in enumerate(steps):
        following = steps[index + 1].t if index + 1 < len(steps) else None
        if step.t >= t_min:
            points.append((step.t, step.distance))
        elif following is None or following > t_min:
            points.append((t_min, step.distance))
    if not points:
        raise DomainError(f"no tabulated t >= {t_min}")
    lows, highs = [], []
    for t, distance in points:
        if distance.lo <= 0:
            raise ConsistencyError(f"psi at t = {t} is not bounded away from 0")
        lows.append(1 / (t * distance.hi))
        highs.append(1 / (t * distance.lo))
    return RationalEnclosure(max(lows), max(highs))
