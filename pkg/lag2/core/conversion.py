"""Conversions between periodic continued fractions and quadratic surds."""

import logging
from math import isqrt
from typing import Dict, List, Sequence, Tuple

from .cf import FiniteCF, PeriodicCF, as_word, convergent_terms
from .errors import NotEventuallyPeriodicError
from .surd import QuadraticSurd

logger = logging.getLogger(__name__)


def purely_periodic_surd(period: Sequence[int]) -> QuadraticSurd:
    """The value of [c_1; c_2, ..., c_L, c_1, ...] for the period c_1..c_L.

    The period matrix [[P, P'], [Q, Q']] fixes y = (P*y + P') / (Q*y + Q'),
    so y is the positive root of Q*y^2 + (Q' - P)*y - P' = 0.
    """
    word = as_word(period)
    P, Q, P_prev, Q_prev = convergent_terms(FiniteCF(word[0], word[1:]), len(word) - 1)
    trace = P - Q_prev
    return QuadraticSurd(trace, 1, trace * trace + 4 * P_prev * Q, 2 * Q)


def apply_prefix(a0: int, word: Sequence[int], tail: QuadraticSurd) -> QuadraticSurd:
    """[a0; word, tail] for a surd tail > 1."""
    p, q, p_prev, q_prev = convergent_terms(FiniteCF(a0, tuple(word)), len(word))
    return (tail * p + p_prev) / (tail * q + q_prev)


def cf_to_surd(cf: PeriodicCF) -> QuadraticSurd:
    """Exact value of an eventually periodic continued fraction."""
    return apply_prefix(cf.a0, cf.preperiod, purely_periodic_surd(cf.period))


def _reduced_state(x: QuadraticSurd) -> Tuple[int, int, int]:
    """Write x as (P + sqrt(N)) / Q with Q dividing N - P^2."""
    sign = 1 if x.q > 0 else -1
    P, N, Q = x.p * sign, x.q * x.q * x.d, x.r * sign
    if (N - P * P) % Q:
        P, N, Q = P * abs(Q), N * Q * Q, Q * abs(Q)
    return P, N, Q


def _floor_state(P: int, root: int, Q: int) -> int:
    if Q > 0:
        return (P + root) // Q
    return -((P + root) // -Q) - 1


def surd_to_cf(x: QuadraticSurd) -> PeriodicCF:
    """Expand a quadratic irrational until its (P, Q) state recurs."""
    if x.is_rational:
        raise NotEventuallyPeriodicError(
            f"{x} is rational: its expansion terminates and is not eventually periodic"
        )
    P, N, Q = _reduced_state(x)
    root = isqrt(N)
    seen: Dict[Tuple[int, int], int] = {}
    quotients: List[int] = []
    while (P, Q) not in seen:
        seen[(P, Q)] = len(quotients)
        a = _floor_state(P, root, Q)
        quotients.append(a)
        P = a * Q - P
        Q = (N - P * P) // Q
    start = seen[(P, Q)]
    logger.debug("expansion of %s cycles at %d after %d steps", x, start, len(quotients))
    if start == 0:
        return PeriodicCF(quotients[0], (), tuple(quotients[1:]) + (quotients[0],))
    return PeriodicCF(quotients[0], tuple(quotients[1:start]), tuple(quotients[start:]))


def tail_surd(cf: PeriodicCF, n: int) -> QuadraticSurd:
    """alpha_n as an exact surd."""
    return cf_to_surd(cf.tail(n))
