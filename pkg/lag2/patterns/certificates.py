"""Bounds for kappa at a marked pattern occurrence via extremal substitution.

kappa1 decreases and kappa2, kappa4 increase in both arguments, so a bound on
kappa at a marked quotient follows from bounds on the tail alpha and the
reversed tail alpha*. A certificate takes the extremal continuations on both
sides, evaluates the bound exactly and spot-checks the extremal direction by
perturbing the free quotients near the pattern.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import FrozenSet, List, Optional, Tuple, Union

from ..core.cf import FiniteCF, PeriodicCF, RationalEnclosure, Word, as_word, refine_enclosure
from ..core.config import AppConfig, precision_limit
from ..core.conversion import cf_to_surd
from ..core.errors import (
    DomainError,
    ExtremalDirectionError,
    InconsistentExtensionError,
    PrecisionLimitExceeded,
)
from ..core.notation import format_cf
from ..core.surd import QuadraticSurd, compare, decimal
from ..spectra.kappa import KappaKind, evaluate_kappa, kappa_enclosure
from ..spectra.ladder import lambda_infinity

logger = logging.getLogger(__name__)

Extension = Union[PeriodicCF, FiniteCF]

PERTURBED_QUOTIENTS = 6


class BoundDirection(str, Enum):
    LOWER = "lower"
    UPPER = "upper"


@dataclass(frozen=True)
class MarkedPattern:
    """A word of partial quotients with one marked position a_n.

    ``forbidden`` lists quotient values already known to be prohibited and
    ``excluded_words`` the prohibited subwords; the perturbation check never
    substitutes a forbidden value or creates an excluded word.
    """

    word: Word
    mark: int
    alphabet_cap: int = 3
    forbidden: FrozenSet[int] = frozenset()
    excluded_words: FrozenSet[Word] = frozenset()
    label: str = ""

    def __post_init__(self):
        word = as_word(self.word)
        if not 0 <= self.mark < len(word):
            raise DomainError(f"mark {self.mark} outside a word of length {len(word)}")
        if word[self.mark] < 2:
            raise DomainError("the marked quotient must be >= 2")
        object.__setattr__(self, "word", word)
        object.__setattr__(self, "forbidden", frozenset(self.forbidden))
        excluded = frozenset(as_word(excluded) for excluded in self.excluded_words)
        object.__setattr__(self, "excluded_words", excluded)
        if not self.label:
            digits = [str(a) for a in word]
            digits[self.mark] = f"[{digits[self.mark]}]"
            object.__setattr__(self, "label", "".join(digits))

    def fixed_continuations(self, kind: KappaKind) -> Tuple[Word, Word]:
        """Quotients forced on (alpha side, alpha* side) for the arguments of ``kind``."""
        split = self.mark + 1 if kind is KappaKind.KAPPA2 else self.mark
        return self.word[split:], tuple(reversed(self.word[:split]))


@dataclass(frozen=True)
class ProhibitionCertificate:
    pattern: MarkedPattern
    kappa_used: KappaKind
    extremal_left: Extension
    extremal_right: Extension
    bound: QuadraticSurd
    exceeds_lambda_inf: bool
    direction: BoundDirection = BoundDirection.LOWER
    printed_value: Optional[str] = None
    perturbations_checked: int = field(default=0, compare=False)

    def decimal(self, digits: int = 6) -> str:
        return decimal(self.bound, digits)

    def matches_printed(self, tolerance: Fraction = Fraction(2, 10 ** 6)) -> bool:
        if self.printed_value is None:
            return True
        box = self.bound.enclosure(64)
        return abs(box.midpoint - Fraction(self.printed_value)) <= tolerance


def side_value(extension: Extension) -> QuadraticSurd:
    if isinstance(extension, FiniteCF):
        return QuadraticSurd.rational(extension.value())
    return cf_to_surd(extension)


def side_enclosure(extension: Extension, bits: int, limit: int) -> RationalEnclosure:
    if isinstance(extension, FiniteCF):
        return RationalEnclosure.point(extension.value())
    return refine_enclosure(extension, Fraction(1, 1 << bits), limit)


def _check_continuation(extension: Extension, expected: Word, offset: int, side: str) -> None:
    for i, quotient in enumerate(expected):
        if extension.quotient(i + offset) != quotient:
            raise InconsistentExtensionError(
                f"{side} extension {format_cf(extension)} does not continue the pattern "
                f"with {expected}"
            )


def perturb(cf: PeriodicCF, index: int, value: int) -> PeriodicCF:
    """Same expansion with quotient ``index`` replaced by ``value``."""
    head = cf.quotients(index + 1)
    head[index] = value
    rest = cf.tail(index + 1)
    return PeriodicCF(head[0], tuple(head[1:]) + (rest.a0,) + rest.preperiod, rest.period)


def _neighbours(current: int, pattern: MarkedPattern) -> List[int]:
    """Nearest admissible quotient below and above ``current``."""
    allowed = [
        letter
        for letter in range(1, pattern.alphabet_cap + 1)
        if letter != current and letter not in pattern.forbidden
    ]
    below = [letter for letter in allowed if letter < current]
    above = [letter for letter in allowed if letter > current]
    return below[-1:] + above[:1]


def _quotient_run(extension: Extension, start: int, count: int) -> List[int]:
    run = []
    for index in range(start, start + count):
        quotient = extension.quotient(index)
        if quotient is None:
            break
        run.append(quotient)
    return run


def _creates_excluded_word(sequence: List[int], position: int, pattern: MarkedPattern) -> bool:
    for word in pattern.excluded_words:
        for start in range(max(0, position - len(word) + 1), position + 1):
            if tuple(sequence[start : start + len(word)]) == word:
                return True
    return False


def _perturbations(
    extension: Extension, other: Extension, first_free: int, pattern: MarkedPattern, side: str
) -> List[PeriodicCF]:
    """Single-quotient variants of ``extension`` within the admissible alphabet.

    The two-sided word b_D..b_1 a_0..a_D around the pattern is rebuilt for every
    variant, and variants containing an excluded word through the changed
    quotient are skipped.
    """
    if isinstance(extension, FiniteCF):
        return []
    longest = max((len(word) for word in pattern.excluded_words), default=1)
    depth = first_free + PERTURBED_QUOTIENTS + longest
    if side == "alpha":
        right, left = _quotient_run(extension, 0, depth), _quotient_run(other, 1, depth)
    else:
        right, left = _quotient_run(other, 0, depth), _quotient_run(extension, 1, depth)
    variants = []
    for index in range(first_free, first_free + PERTURBED_QUOTIENTS):
        current = extension.quotient(index)
        for candidate in _neighbours(current, pattern):
            sequence = list(reversed(left)) + right
            if side == "alpha":
                position = len(left) + index
            else:
                position = len(left) - index
            sequence[position] = candidate
            if _creates_excluded_word(sequence, position, pattern):
                continue
            variants.append(perturb(extension, index, candidate))
    if not variants:
        raise ExtremalDirectionError(
            f"no admissible perturbation of the {side} extension {format_cf(extension)}; "
            "the extremal direction is unchecked"
        )
    return variants


def _confirm_direction(
    kind: KappaKind,
    right: Extension,
    left: Extension,
    bound: QuadraticSurd,
    direction: BoundDirection,
    limit: int,
) -> None:
    """Decide by enclosures that the perturbed kappa lies on the far side of ``bound``."""
    bits = AppConfig().precision.start_bits
    while bits < limit:
        perturbed = kappa_enclosure(
            kind, side_enclosure(right, bits, limit), side_enclosure(left, bits, limit)
        )
        reference = bound.enclosure(bits)
        beyond, short = (reference, perturbed), (perturbed, reference)
        if direction is BoundDirection.UPPER:
            beyond, short = short, beyond
        if beyond[0].below(beyond[1]):
            return
        if short[0].below(short[1]):
            raise ExtremalDirectionError(
                f"extremal direction violated: {kind.value} at {format_cf(right)} / "
                f"{format_cf(left)} is on the wrong side of {bound}"
            )
        bits *= 2
    raise PrecisionLimitExceeded("perturbation check", limit)


def certify(
    pattern: MarkedPattern,
    kappa_choice: KappaKind,
    extremal_left: Extension,
    extremal_right: Extension,
    direction: BoundDirection = BoundDirection.LOWER,
    printed_value: Optional[str] = None,
    limit_bits: Optional[int] = None,
) -> ProhibitionCertificate:
    """Bound ``kappa_choice`` at the marked quotient of ``pattern``.

    ``extremal_right`` is the alpha argument (alpha_n, or alpha_{n+1} for
    kappa2) and ``extremal_left`` the alpha* argument.
    """
    right_word, left_word = pattern.fixed_continuations(kappa_choice)
    _check_continuation(extremal_right, right_word, 0, "alpha")
    if extremal_left.quotient(0) != 0:
        raise InconsistentExtensionError("the alpha* extension must have integer part 0")
    _check_continuation(extremal_left, left_word, 1, "alpha*")

    bound = evaluate_kappa(kappa_choice, side_value(extremal_right), side_value(extremal_left))

    limit = precision_limit(limit_bits)
    checked = 0
    alpha_variants = _perturbations(
        extremal_right, extremal_left, len(right_word), pattern, "alpha"
    )
    for variant in alpha_variants:
        _confirm_direction(kappa_choice, variant, extremal_left, bound, direction, limit)
        checked += 1
    star_variants = _perturbations(
        extremal_left, extremal_right, len(left_word) + 1, pattern, "alpha*"
    )
    for variant in star_variants:
        _confirm_direction(kappa_choice, extremal_right, variant, bound, direction, limit)
        checked += 1
    logger.debug(
        "%s: %d perturbations confirm the %s bound", pattern.label, checked, direction.value
    )

    return ProhibitionCertificate(
        pattern=pattern,
        kappa_used=kappa_choice,
        extremal_left=extremal_left,
        extremal_right=extremal_right,
        bound=bound,
        exceeds_lambda_inf=compare(bound, lambda_infinity()) > 0,
        direction=direction,
        printed_value=printed_value,
        perturbations_checked=checked,
    )


_TAIL = (3, 1, 1, 1)
_NO_TWOS = frozenset({2})
_NO_33 = frozenset({(3, 3)})
_NO_33_313 = frozenset({(3, 3), (3, 1, 3)})

# label, pattern, kappa, alpha* side, alpha side, printed value
PROHIBITED_PATTERNS = (
    (
        MarkedPattern((5,), 0, alphabet_cap=5, label="a_n>=5"),
        KappaKind.KAPPA4,
        FiniteCF(0),
        FiniteCF(5),
        "1.25",
    ),
    (
        MarkedPattern((4,), 0, alphabet_cap=4),
        KappaKind.KAPPA4,
        PeriodicCF(0, (), (4, 1)),
        PeriodicCF(4, (), (4, 1)),
        "1.103553",
    ),
    (
        MarkedPattern((2,), 0),
        KappaKind.KAPPA2,
        PeriodicCF(0, (2,), (1, 3)),
        PeriodicCF(1, (), (3, 1)),
        "1.116515",
    ),
    (
        MarkedPattern((3, 3), 1),
        KappaKind.KAPPA1,
        PeriodicCF(0, (3,), (3, 1)),
        PeriodicCF(3, (), (1, 3)),
        "1.123722",
    ),
    (
        MarkedPattern((3, 1, 3), 0, forbidden=_NO_TWOS, excluded_words=_NO_33),
        KappaKind.KAPPA4,
        PeriodicCF(0, (1,), (1, 3)),
        PeriodicCF(3, (1, 3), (3, 1)),
        "1.080930",
    ),
    (
        MarkedPattern(
            (3, 1, 1, 1, 3), 0, forbidden=_NO_TWOS, excluded_words=_NO_33_313
        ),
        KappaKind.KAPPA4,
        PeriodicCF(0, (1, 1), _TAIL),
        PeriodicCF(3, (1, 1, 1, 3, 1, 1), _TAIL),
        "1.050188",
    ),
    (
        MarkedPattern(
            (3, 1, 1, 1, 1, 1), 0, forbidden=_NO_TWOS, excluded_words=_NO_33_313
        ),
        KappaKind.KAPPA4,
        PeriodicCF(0, (1, 1), _TAIL),
        PeriodicCF(3, (1, 1, 1, 1, 1, 1), _TAIL),
        "1.044287",
    ),
    (
        MarkedPattern(
            (1, 1, 1, 3, 1, 1, 1), 3, forbidden=_NO_TWOS, excluded_words=_NO_33_313
        ),
        KappaKind.KAPPA4,
        PeriodicCF(0, (1, 1, 1, 1), _TAIL),
        PeriodicCF(3, (1, 1, 1, 1), _TAIL),
        "1.054716",
    ),
)

# Values the written argument attributes to a row, where they differ from the table.
PROSE_CLAIMS = {"[2]": "1.123722"}


def prohibited_patterns_table(limit_bits: Optional[int] = None) -> List[ProhibitionCertificate]:
    """One certificate per prohibited pattern row, each bounding kappa from below."""
    return [
        certify(pattern, kind, left, right, printed_value=printed, limit_bits=limit_bits)
        for pattern, kind, left, right, printed in PROHIBITED_PATTERNS
    ]


def _near_bound(cert: ProhibitionCertificate, printed: str) -> bool:
    return abs(cert.bound.enclosure(64).midpoint - Fraction(printed)) <= Fraction(2, 10 ** 6)


def prose_discrepancies(certificates: List[ProhibitionCertificate]) -> List[str]:
    """Report prose values that disagree with the computed bound of their row.

    Printed decimals are truncated, so a claim matches a bound within 2e-6.
    """
    by_label = {cert.pattern.label: cert for cert in certificates}
    findings = []
    for label, claimed in PROSE_CLAIMS.items():
        cert = by_label.get(label)
        if cert is None or _near_bound(cert, claimed):
            continue
        owners = [
            other.pattern.label
            for other in certificates
            if other is not cert and _near_bound(other, claimed)
        ]
        finding = f"row {label}: prose states {claimed}, computed {cert.decimal(6)}"
        if owners:
            finding += f"; {claimed} is the bound of row {', '.join(owners)} (values swapped)"
        logger.warning(finding)
        findings.append(finding)
    return findings
