"""The three local quantities whose limsup gives the second Lagrange constant.

With ``x = alpha_n`` and ``y = alpha*_{n-1}``::

    kappa1 = (x + y) / ((1 + y) * (x - 1))      decreasing in x and y
    kappa4 = (x + y) / 4                        increasing in x and y

and with ``x = alpha_{n+1}``, ``y = alpha*_n``::

    kappa2 = (x + y) / ((1 - y) * (x + 1))      increasing in x and y
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

from ..core.cf import RationalEnclosure
from ..core.errors import DomainError
from ..core.surd import Number, QuadraticSurd, compare

Scalar = Union[QuadraticSurd, Fraction]


class KappaKind(str, Enum):
    """Which of the three quantities a value comes from."""

    KAPPA1 = "kappa1"
    KAPPA2 = "kappa2"
    KAPPA4 = "kappa4"

    @property
    def symbol(self) -> str:
        return {"kappa1": "κ¹", "kappa2": "κ²", "kappa4": "κ⁴"}[self.value]

    @property
    def increasing(self) -> bool:
        """Monotone direction in both arguments."""
        return self is not KappaKind.KAPPA1


# Equal values are reported under the earliest kind in this order.
TIE_ORDER = (KappaKind.KAPPA4, KappaKind.KAPPA1, KappaKind.KAPPA2)


def _kappa1(x, y):
    return (x + y) / ((1 + y) * (x - 1))


def _kappa2(x, y):
    return (x + y) / ((1 - y) * (x + 1))


def _kappa4(x, y):
    return (x + y) / 4


_FORMULAS = {
    KappaKind.KAPPA1: _kappa1,
    KappaKind.KAPPA2: _kappa2,
    KappaKind.KAPPA4: _kappa4,
}


def kappa1(alpha_n: Number, alpha_star_prev: Number) -> QuadraticSurd:
    x, y = QuadraticSurd.coerce(alpha_n), QuadraticSurd.coerce(alpha_star_prev)
    if x == QuadraticSurd(1):
        raise DomainError("kappa1 has a pole at alpha_n = 1")
    return _kappa1(x, y)


def kappa2(alpha_next: Number, alpha_star_n: Number) -> QuadraticSurd:
    x, y = QuadraticSurd.coerce(alpha_next), QuadraticSurd.coerce(alpha_star_n)
    if y == QuadraticSurd(1):
        raise DomainError("kappa2 has a pole at alpha*_n = 1")
    return _kappa2(x, y)


def kappa4(alpha_n: Number, alpha_star_prev: Number) -> QuadraticSurd:
    return _kappa4(QuadraticSurd.coerce(alpha_n), QuadraticSurd.coerce(alpha_star_prev))


def evaluate_kappa(kind: KappaKind, x: Number, y: Number) -> QuadraticSurd:
    """Dispatch on ``kind``; (x, y) are the arguments that kind uses."""
    return {KappaKind.KAPPA1: kappa1, KappaKind.KAPPA2: kappa2, KappaKind.KAPPA4: kappa4}[
        kind
    ](x, y)


@dataclass(frozen=True)
class KappaProfile:
    """All three quantities at one position of a continued fraction."""

    period_position: int
    kappa1: QuadraticSurd
    kappa2: QuadraticSurd
    kappa4: QuadraticSurd
    max_kappa: QuadraticSurd
    dominant: KappaKind

    def value(self, kind: KappaKind) -> QuadraticSurd:
        return getattr(self, kind.value)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise DomainError(message)


def kappa_profile(
    alpha_n: Number,
    alpha_star_prev: Number,
    alpha_next: Number,
    alpha_star_n: Number,
    period_position: int = 0,
) -> KappaProfile:
    """Evaluate kappa1, kappa2 and kappa4 exactly and pick the largest."""
    _require(compare(alpha_n, 1) > 0, "alpha_n must exceed 1")
    _require(compare(alpha_next, 1) > 0, "alpha_{n+1} must exceed 1")
    for name, value in (("alpha*_{n-1}", alpha_star_prev), ("alpha*_n", alpha_star_n)):
        _require(compare(value, 0) > 0 and compare(value, 1) < 0, f"{name} must lie in (0, 1)")
    values = {
        KappaKind.KAPPA1: kappa1(alpha_n, alpha_star_prev),
        KappaKind.KAPPA2: kappa2(alpha_next, alpha_star_n),
        KappaKind.KAPPA4: kappa4(alpha_n, alpha_star_prev),
    }
    dominant = TIE_ORDER[0]
    for kind in TIE_ORDER[1:]:
        if compare(values[kind], values[dominant]) > 0:
            dominant = kind
    return KappaProfile(
        period_position=period_position,
        kappa1=values[KappaKind.KAPPA1],
        kappa2=values[KappaKind.KAPPA2],
        kappa4=values[KappaKind.KAPPA4],
        max_kappa=values[dominant],
        dominant=dominant,
    )


def kappa_enclosure(
    kind: KappaKind, x_range: RationalEnclosure, y_range: RationalEnclosure
) -> RationalEnclosure:
    """Range of ``kind`` over a box of arguments, from monotonicity at the corners."""
    if kind is KappaKind.KAPPA1 and x_range.lo <= 1:
        raise DomainError("kappa1 needs alpha_n > 1 on the whole range")
    if kind is KappaKind.KAPPA2 and y_range.hi >= 1:
        raise DomainError("kappa2 needs alpha*_n < 1 on the whole range")
    formula = _FORMULAS[kind]
    low_corner = formula(x_range.lo, y_range.lo)
    high_corner = formula(x_range.hi, y_range.hi)
    if kind.increasing:
        return RationalEnclosure(low_corner, high_corner)
    return RationalEnclosure(high_corner, low_corner)
