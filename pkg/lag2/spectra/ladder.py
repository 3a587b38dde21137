"""The discrete part of the second Lagrange spectrum below its first limit point.

    lambda_1 = sqrt(5)/4 < lambda_2 = sqrt(17)/4 < lambda_3 < ... -> lambda_inf

For n >= 3 the value lambda_n is attained by

    xi_n = [0; (1,1,1,1,3,(1,1,3)^(2n-5))*]

and equals the quarter-sum of [3; ((1,1,3)^(2n-5),1,1,1,1,3)*] and
[0; (1,1,1,1,(3,1,1)^(2n-5),3)*].
"""

import logging
from functools import lru_cache
from typing import List, Optional

from ..core.cf import PeriodicCF
from ..core.conversion import cf_to_surd
from ..core.errors import ConsistencyError, DomainError
from ..core.surd import QuadraticSurd

logger = logging.getLogger(__name__)

LAMBDA_1 = QuadraticSurd(0, 1, 5, 4)
LAMBDA_2 = QuadraticSurd(0, 1, 17, 4)
LAMBDA_INF_CLOSED_FORM = QuadraticSurd(21, 3, 17, 32)

BLOCK = (1, 1, 3)
JUNCTION = (1, 1, 1, 1, 3)


def _check_index(n: int) -> int:
    if n < 3:
        raise DomainError(f"the block formula starts at n = 3, got n = {n}")
    return 2 * n - 5


def xi(n: int) -> PeriodicCF:
    """Generator of lambda_n."""
    blocks = _check_index(n)
    return PeriodicCF(0, (), JUNCTION + BLOCK * blocks)


@lru_cache(maxsize=64)
def lambda_n(n: int) -> QuadraticSurd:
    blocks = _check_index(n)
    forward = cf_to_surd(PeriodicCF(3, (), BLOCK * blocks + JUNCTION))
    backward = cf_to_surd(PeriodicCF(0, (), (1, 1, 1, 1) + (3, 1, 1) * blocks + (3,)))
    return (forward + backward) / 4


@lru_cache(maxsize=1)
def lambda_infinity() -> QuadraticSurd:
    """(21 + 3*sqrt(17))/32, checked against its continued fraction definition."""
    forward = cf_to_surd(PeriodicCF(3, (), BLOCK))
    backward = cf_to_surd(PeriodicCF(0, (1, 1, 1, 1), (3, 1, 1)))
    definitional = (forward + backward) / 4
    if definitional != LAMBDA_INF_CLOSED_FORM:
        raise ConsistencyError(
            f"lambda_inf evaluates to {definitional}, expected {LAMBDA_INF_CLOSED_FORM}"
        )
    return LAMBDA_INF_CLOSED_FORM


def spectrum_ladder(n_max: int) -> List[QuadraticSurd]:
    """[lambda_1, ..., lambda_{n_max}]."""
    if n_max < 1:
        raise DomainError(f"ladder length must be >= 1, got {n_max}")
    ladder = [LAMBDA_1, LAMBDA_2][:n_max]
    ladder.extend(lambda_n(n) for n in range(3, n_max + 1))
    return ladder


def ladder_index(value: QuadraticSurd, n_max: int = 10) -> Optional[int]:
    """n with lambda_n == value, searching n <= n_max."""
    for n, rung in enumerate(spectrum_ladder(n_max), start=1):
        if rung == value:
            return n
    return None
