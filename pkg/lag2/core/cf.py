"""Finite and eventually periodic continued fractions.

Indexing follows the usual convention: ``a_0`` is the integer part and the
partial quotients ``a_1, a_2, ...`` are positive. For an eventually periodic
expansion ``[a_0; b_1..b_s, (c_1..c_L)*]`` the index ``n > s`` sits at period
position ``(n - s - 1) mod L``.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from .errors import DomainError, InvalidContinuedFraction, PrecisionLimitExceeded

Word = Tuple[int, ...]


def as_word(entries: Sequence[int]) -> Word:
    """Validate a sequence of partial quotients."""
    word = tuple(int(a) for a in entries)
    for index, a in enumerate(word):
        if a < 1:
            raise InvalidContinuedFraction(
                f"partial quotient {a} at offset {index} is not positive"
            )
    return word


def continuant(word: Sequence[int]) -> int:
    """Continuant <a_1,...,a_t>; the empty word has continuant 1."""
    previous, current = 0, 1
    for a in word:
        previous, current = current, a * current + previous
    return current


def rotate(word: Word, shift: int) -> Word:
    """Cyclic rotation moving ``word[shift]`` to the front."""
    if not word:
        return word
    shift %= len(word)
    return word[shift:] + word[:shift]


def least_rotation(word: Word) -> Word:
    """Lexicographically least rotation, the representative of a rotation class."""
    return min(rotate(word, k) for k in range(len(word)))


def primitive_root(word: Word) -> Word:
    """Shortest ``u`` with ``word == u * k``."""
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word[:d] * (n // d) == word:
            return word[:d]
    return word


@dataclass(frozen=True)
class RationalEnclosure:
    """Closed interval [lo, hi] with rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty enclosure [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, value) -> "RationalEnclosure":
        value = Fraction(value)
        return cls(value, value)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, value) -> bool:
        return self.lo <= value <= self.hi

    def below(self, other: "RationalEnclosure") -> bool:
        """True when every point of self is strictly below every point of other."""
        return self.hi < other.lo

    def distance_bound(self, other: "RationalEnclosure") -> Fraction:
        """Upper bound for |x - y| over x in self, y in other."""
        return max(self.hi - other.lo, other.hi - self.lo)


@dataclass(frozen=True)
class FiniteCF:
    """Terminating continued fraction [a_0; a_1, ..., a_t]."""

    a0: int
    word: Word = ()

    def __post_init__(self):
        object.__setattr__(self, "a0", int(self.a0))
        object.__setattr__(self, "word", as_word(self.word))

    @property
    def length(self) -> int:
        """Number of quotients including a_0."""
        return len(self.word) + 1

    def quotient(self, n: int) -> Optional[int]:
        if n == 0:
            return self.a0
        if 1 <= n <= len(self.word):
            return self.word[n - 1]
        return None

    def value(self) -> Fraction:
        p, q = convergent_terms(self, len(self.word))[:2]
        return Fraction(p, q)


@dataclass(frozen=True)
class PeriodicCF:
    """Eventually periodic continued fraction in canonical form.

    The constructor canonicalizes: the period is reduced to its primitive root
    and the preperiod is shortened while its last entry can be absorbed.
    """

    a0: int
    preperiod: Word
    period: Word

    def __post_init__(self):
        preperiod = list(as_word(self.preperiod))
        period = as_word(self.period)
        if not period:
            raise InvalidContinuedFraction("period must be nonempty")
        period = primitive_root(period)
        while preperiod and preperiod[-1] == period[-1]:
            preperiod.pop()
            period = rotate(period, -1)
        object.__setattr__(self, "a0", int(self.a0))
        object.__setattr__(self, "preperiod", tuple(preperiod))
        object.__setattr__(self, "period", period)

    @property
    def period_start(self) -> int:
        """Index of the first quotient of the periodic part."""
        return len(self.preperiod) + 1

    @property
    def is_purely_periodic(self) -> bool:
        return not self.preperiod

    def quotient(self, n: int) -> int:
        if n < 0:
            raise DomainError(f"negative index {n}")
        if n == 0:
            return self.a0
        if n < self.period_start:
            return self.preperiod[n - 1]
        return self.period[self.period_position(n)]

    def quotients(self, count: int) -> List[int]:
        """The first ``count`` quotients a_0, a_1, ..."""
        return [self.quotient(n) for n in range(count)]

    def period_position(self, n: int) -> int:
        if n < self.period_start:
            raise DomainError(f"index {n} lies in the preperiod")
        return (n - self.period_start) % len(self.period)

    def tail(self, n: int) -> "PeriodicCF":
        """alpha_n = [a_n; a_{n+1}, ...] as a continued fraction."""
        if n < 0:
            raise DomainError(f"negative index {n}")
        if n == 0:
            return self
        if n < self.period_start:
            return PeriodicCF(self.quotient(n), self.preperiod[n:], self.period)
        j = self.period_position(n)
        return PeriodicCF(self.period[j], (), rotate(self.period, j + 1))

    def equivalence_key(self) -> Word:
        """Equal keys exactly when the two numbers share a tail."""
        return least_rotation(self.period)


ContinuedFraction = Union[PeriodicCF, FiniteCF]


def canonicalize(a0: int, preperiod: Sequence[int], period: Sequence[int]) -> PeriodicCF:
    """Canonical form: primitive period, shortest preperiod."""
    return PeriodicCF(a0, tuple(preperiod), tuple(period))


def iter_convergents(cf: ContinuedFraction) -> Iterator[Tuple[int, int]]:
    """Yield (p_n, q_n) for n = 0, 1, ...; stops for finite expansions."""
    p_prev, q_prev = 1, 0
    p, q = cf.quotient(0), 1
    yield p, q
    n = 1
    while True:
        a = cf.quotient(n)
        if a is None:
            return
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
        yield p, q
        n += 1


def convergent_terms(cf: ContinuedFraction, n: int) -> Tuple[int, int, int, int]:
    """(p_n, q_n, p_{n-1}, q_{n-1}) with p_{-1} = 1, q_{-1} = 0."""
    if n < 0:
        raise DomainError(f"convergent index must be >= 0, got {n}")
    previous = (1, 0)
    for index, current in enumerate(iter_convergents(cf)):
        if index == n:
            return current[0], current[1], previous[0], previous[1]
        previous = current
    raise DomainError(f"expansion has no convergent of index {n}")


def convergent(cf: ContinuedFraction, n: int) -> Fraction:
    """p_n / q_n in lowest terms."""
    p, q, _, _ = convergent_terms(cf, n)
    return Fraction(p, q)


def reversed_tail(cf: ContinuedFraction, n: int) -> Fraction:
    """alpha*_n = [0; a_n, ..., a_1] = q_{n-1} / q_n."""
    if n < 1:
        raise DomainError("reversed tail alpha*_n is undefined for n < 1")
    _, q, _, q_prev = convergent_terms(cf, n)
    return Fraction(q_prev, q)


def enclosure(cf: PeriodicCF, depth: int) -> RationalEnclosure:
    """Consecutive convergents p_depth/q_depth and p_{depth+1}/q_{depth+1}."""
    if depth < 1:
        raise DomainError(f"enclosure depth must be >= 1, got {depth}")
    p, q, _, _ = convergent_terms(cf, depth)
    p_next, q_next, _, _ = convergent_terms(cf, depth + 1)
    first, second = Fraction(p, q), Fraction(p_next, q_next)
    return RationalEnclosure(min(first, second), max(first, second))


def refine_enclosure(cf: PeriodicCF, max_width: Fraction, limit_bits: int) -> RationalEnclosure:
    """Append whole periods until the enclosure is at most ``max_width`` wide."""
    if max_width <= Fraction(1, 1 << limit_bits):
        raise PrecisionLimitExceeded("continued fraction enclosure", limit_bits)
    depth = max(1, cf.period_start)
    box = enclosure(cf, depth)
    while box.width > max_width:
        depth += len(cf.period)
        box = enclosure(cf, depth)
    return box


def word_range(a0: int, word: Sequence[int]) -> RationalEnclosure:
    """All reals whose expansion begins [a0; word, ...] lie in this interval."""
    word = as_word(word)
    if not word:
        return RationalEnclosure(Fraction(a0), Fraction(a0 + 1))
    first = FiniteCF(a0, word).value()
    second = FiniteCF(a0, word[:-1] + (word[-1] + 1,)).value()
    return RationalEnclosure(min(first, second), max(first, second))
