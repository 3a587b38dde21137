"""Exact arithmetic in real quadratic fields.

A :class:`QuadraticSurd` stores ``(p + q*sqrt(d)) / r`` in canonical form:
``r > 0``, ``gcd(p, q, r) = 1``, ``d`` squarefree when ``q != 0`` and
``q = d = 0`` for rationals. Equal numbers in the same field therefore have
identical fields, and field equality is value equality. Rational surds also
compare and hash equal to the matching ``int`` or ``Fraction``.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import floor, gcd, isqrt
from typing import Optional, Tuple, Union

import sympy

from .cf import RationalEnclosure
from .config import AppConfig, precision_limit
from .errors import CrossFieldError, DomainError, PrecisionLimitExceeded, UsageError

logger = logging.getLogger(__name__)

TRIAL_DIVISION_LIMIT = 1 << 16

Number = Union["QuadraticSurd", int, Fraction]


@lru_cache(maxsize=4096)
def squarefree_split(d: int) -> Tuple[int, int]:
    """Return ``(s, core)`` with ``d == s*s*core``.

    ``core`` is squarefree unless a cofactor survives trial division without
    being prime or a perfect square; that cofactor is then kept in ``core``.
    """
    if d < 2:
        return 1, d
    square, core = 1, 1
    for factor, exponent in sympy.factorint(d, limit=TRIAL_DIVISION_LIMIT).items():
        root = isqrt(factor)
        if factor > TRIAL_DIVISION_LIMIT and root * root == factor:
            square *= root ** exponent
            continue
        if factor > TRIAL_DIVISION_LIMIT and not sympy.isprime(factor):
            logger.debug("radicand cofactor %d left unfactored", factor)
        square *= factor ** (exponent // 2)
        if exponent % 2:
            core *= factor
    return square, core


@dataclass(frozen=True, eq=False)
class QuadraticSurd:
    """The real number (p + q*sqrt(d)) / r."""

    p: int
    q: int = 0
    d: int = 0
    r: int = 1

    def __post_init__(self):
        p, q, d, r = int(self.p), int(self.q), int(self.d), int(self.r)
        if r == 0:
            raise ZeroDivisionError("surd with zero denominator")
        if d < 0:
            raise DomainError(f"sqrt({d}) is not real")
        if q != 0 and d > 0:
            root = isqrt(d)
            if root * root == d:
                p, q, d = p + q * root, 0, 0
            else:
                square, d = squarefree_split(d)
                q *= square
        if q == 0 or d == 0:
            q, d = 0, 0
        if r < 0:
            p, q, r = -p, -q, -r
        common = gcd(gcd(p, q), r)
        object.__setattr__(self, "p", p // common)
        object.__setattr__(self, "q", q // common)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "r", r // common)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QuadraticSurd.rational(other)
        if not isinstance(other, QuadraticSurd):
            return NotImplemented
        return (self.p, self.q, self.d, self.r) == (other.p, other.q, other.d, other.r)

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(Fraction(self.p, self.r))
        return hash((self.p, self.q, self.d, self.r))

    # Construction ---------------------------------------------------------

    @classmethod
    def rational(cls, value) -> "QuadraticSurd":
        value = Fraction(value)
        return cls(value.numerator, 0, 0, value.denominator)

    @classmethod
    def sqrt(cls, d: int) -> "QuadraticSurd":
        return cls(0, 1, d, 1)

    @classmethod
    def coerce(cls, value: Number) -> "QuadraticSurd":
        if isinstance(value, QuadraticSurd):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.rational(value)
        raise TypeError(f"cannot use {type(value).__name__} as a quadratic surd")

    # Queries --------------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise DomainError(f"{self} is irrational")
        return Fraction(self.p, self.r)

    def conjugate(self) -> "QuadraticSurd":
        return QuadraticSurd(self.p, -self.q, self.d, self.r)

    def minimal_polynomial(self) -> Tuple[int, ...]:
        """Primitive integer coefficients, leading coefficient positive."""
        if self.is_rational:
            return (self.r, -self.p)
        coefficients = (
            self.r * self.r,
            -2 * self.p * self.r,
            self.p * self.p - self.q * self.q * self.d,
        )
        common = gcd(*coefficients)
        return tuple(c // common for c in coefficients)

    def sign(self) -> int:
        """Exact sign of the value."""
        p, q = self.p, self.q
        if q == 0:
            return (p > 0) - (p < 0)
        if p == 0 or (p > 0) == (q > 0):
            return 1 if (p > 0 or (p == 0 and q > 0)) else -1
        if p * p > q * q * self.d:
            return 1 if p > 0 else -1
        return 1 if q > 0 else -1

    def floor(self) -> int:
        """Exact integer part."""
        if self.is_rational:
            return self.p // self.r
        magnitude = isqrt(self.q * self.q * self.d)
        irrational_floor = magnitude if self.q > 0 else -magnitude - 1
        return (self.p + irrational_floor) // self.r

    def enclosure(self, bits: int) -> RationalEnclosure:
        """Rational interval of width about 2**-bits * |q| / r around the value."""
        if self.is_rational:
            return RationalEnclosure.point(Fraction(self.p, self.r))
        root = isqrt(self.d << (2 * bits))
        low = Fraction(root, 1 << bits)
        high = Fraction(root + 1, 1 << bits)
        if self.q < 0:
            low, high = high, low
        return RationalEnclosure(
            (self.p + self.q * low) / self.r,
            (self.p + self.q * high) / self.r,
        )

    # Arithmetic -----------------------------------------------------------

    def _aligned(self, other: Number) -> Tuple["QuadraticSurd", "QuadraticSurd", int]:
        """Rewrite both operands over one radicand or raise CrossFieldError."""
        other = QuadraticSurd.coerce(other)
        if self.is_rational or other.is_rational or self.d == other.d:
            return self, other, max(self.d, other.d)
        product = self.d * other.d
        root = isqrt(product)
        if root * root != product:
            raise CrossFieldError(self.d, other.d)
        # sqrt(d2) = root / d1 * sqrt(d1)
        rewritten = QuadraticSurd(other.p * self.d, other.q * root, self.d, other.r * self.d)
        return self, rewritten, self.d

    def __add__(self, other: Number) -> "QuadraticSurd":
        x, y, d = self._aligned(other)
        return QuadraticSurd(x.p * y.r + y.p * x.r, x.q * y.r + y.q * x.r, d, x.r * y.r)

    __radd__ = __add__

    def __neg__(self) -> "QuadraticSurd":
        return QuadraticSurd(-self.p, -self.q, self.d, self.r)

    def __sub__(self, other: Number) -> "QuadraticSurd":
        return self + (-QuadraticSurd.coerce(other))

    def __rsub__(self, other: Number) -> "QuadraticSurd":
        return QuadraticSurd.coerce(other) + (-self)

    def __mul__(self, other: Number) -> "QuadraticSurd":
        x, y, d = self._aligned(other)
        return QuadraticSurd(
            x.p * y.p + x.q * y.q * d,
            x.p * y.q + x.q * y.p,
            d,
            x.r * y.r,
        )

    __rmul__ = __mul__

    def invert(self) -> "QuadraticSurd":
        """1/x, rationalizing the denominator."""
        norm = self.p * self.p - self.q * self.q * self.d
        if norm == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadraticSurd(self.r * self.p, -self.r * self.q, self.d, norm)

    def __truediv__(self, other: Number) -> "QuadraticSurd":
        x, y, _ = self._aligned(other)
        return x * y.invert()

    def __rtruediv__(self, other: Number) -> "QuadraticSurd":
        return QuadraticSurd.coerce(other) * self.invert()

    # Ordering -------------------------------------------------------------

    def __lt__(self, other: Number) -> bool:
        return compare(self, other) < 0

    def __le__(self, other: Number) -> bool:
        return compare(self, other) <= 0

    def __gt__(self, other: Number) -> bool:
        return compare(self, other) > 0

    def __ge__(self, other: Number) -> bool:
        return compare(self, other) >= 0

    # Text -----------------------------------------------------------------

    def to_text(self, unicode: bool = False) -> str:
        """``(21 + 3*sqrt(17))/32`` or, with ``unicode``, ``(21 + 3√17)/32``."""
        if self.is_rational:
            return str(self.p) if self.r == 1 else f"{self.p}/{self.r}"
        radical = f"√{self.d}" if unicode else f"sqrt({self.d})"
        magnitude = abs(self.q)
        if magnitude != 1:
            radical = f"{magnitude}{'' if unicode else '*'}{radical}"
        if self.p == 0:
            numerator = radical if self.q > 0 else f"-{radical}"
            return numerator if self.r == 1 else f"{numerator}/{self.r}"
        numerator = f"{self.p} {'+' if self.q > 0 else '-'} {radical}"
        return numerator if self.r == 1 else f"({numerator})/{self.r}"

    def __str__(self) -> str:
        return self.to_text()


def compare(x: Number, y: Number, limit_bits: Optional[int] = None) -> int:
    """Exact three-way comparison: -1, 0 or 1."""
    x, y = QuadraticSurd.coerce(x), QuadraticSurd.coerce(y)
    try:
        return (x - y).sign()
    except CrossFieldError:
        pass
    # Different quadratic fields: the numbers differ, separate them.
    limit = precision_limit(limit_bits)
    bits = AppConfig().precision.start_bits
    while bits <= limit:
        left, right = x.enclosure(bits), y.enclosure(bits)
        if left.below(right):
            return -1
        if right.below(left):
            return 1
        bits *= 2
    raise PrecisionLimitExceeded(f"comparing {x} with {y}", limit)


def _format_scaled(scaled: int, digits: int) -> str:
    sign = "-" if scaled < 0 else ""
    text = str(abs(scaled)).rjust(digits + 1, "0")
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


def decimal(x: Number, digits: int, limit_bits: Optional[int] = None) -> str:
    """Correctly rounded (half-even) decimal string with ``digits`` fractional digits."""
    if digits < 1:
        raise DomainError(f"digits must be >= 1, got {digits}")
    x = QuadraticSurd.coerce(x)
    scale = 10 ** digits
    if x.is_rational:
        return _format_scaled(round(x.to_fraction() * scale), digits)
    limit = precision_limit(limit_bits)
    bits = AppConfig().precision.start_bits + 4 * digits
    while bits <= limit:
        box = x.enclosure(bits)
        low, high = floor(2 * box.lo * scale), floor(2 * box.hi * scale)
        if low == high:
            # An irrational value never sits on a rounding midpoint.
            return _format_scaled((low + 1) // 2, digits)
        bits *= 2
    raise PrecisionLimitExceeded(f"printing {x} to {digits} digits", limit)


_SURD_TEXT = re.compile(r"^[\d\s+\-*/()√sqrt]+$")


def parse_surd(text: str) -> QuadraticSurd:
    """Parse ``3/4``, ``-sqrt(5)``, ``(21 + 3*sqrt(17))/32`` or ``13√173/164``."""
    if not text.strip() or not _SURD_TEXT.match(text):
        raise UsageError(f"not a surd literal: {text!r}")
    prepared = re.sub(r"(\d)\s*√", r"\1*√", text)
    prepared = re.sub(r"√\s*(\d+)", r"sqrt(\1)", prepared)
    try:
        expression = sympy.radsimp(sympy.sympify(prepared))
    except (sympy.SympifyError, SyntaxError, TypeError, ZeroDivisionError) as exc:
        raise UsageError(f"not a surd literal: {text!r} ({exc})") from exc
    if expression.is_real is not True or expression.has(sympy.zoo, sympy.nan):
        raise DomainError(f"{text!r} is not a real number")
    if expression.is_Rational:
        return QuadraticSurd.rational(Fraction(int(expression.p), int(expression.q)))
    radicals = {
        atom for atom in expression.atoms(sympy.Pow) if atom.exp == sympy.Rational(1, 2)
    }
    if len(radicals) != 1:
        raise DomainError(f"{text!r} is not in a single quadratic field")
    radical = radicals.pop()
    try:
        linear, constant = sympy.Poly(sympy.expand(expression), radical).all_coeffs()
    except (ValueError, sympy.PolynomialError) as exc:
        raise DomainError(f"{text!r} is not of the form (p + q*sqrt(d))/r") from exc
    if not (linear.is_Rational and constant.is_Rational and radical.base.is_Integer):
        raise DomainError(f"{text!r} is not of the form (p + q*sqrt(d))/r")
    linear = Fraction(int(linear.p), int(linear.q))
    constant = Fraction(int(constant.p), int(constant.q))
    denominator = linear.denominator * constant.denominator // gcd(
        linear.denominator, constant.denominator
    )
    return QuadraticSurd(
        int(constant * denominator),
        int(linear * denominator),
        int(radical.base),
        denominator,
    )
