"""Mechanical checks of the inequalities behind the spectrum structure.

Block prohibitions are checked instance by instance (big-integer continuant
inequalities plus the underlying surd inequality for a concrete occurrence);
the symbolic induction over block counts is not mechanized. Identity suites
run on seeded random samples so reports are reproducible.
"""

import logging
import random
from fractions import Fraction
from typing import Tuple

from ..core.cf import FiniteCF, PeriodicCF, continuant, convergent_terms, reversed_tail, word_range
from ..core.conversion import apply_prefix, cf_to_surd, purely_periodic_surd, surd_to_cf, tail_surd
from ..core.notation import format_cf
from ..core.surd import QuadraticSurd, compare, decimal
from ..spectra.kappa import KappaKind, kappa_enclosure
from ..spectra.ladder import lambda_infinity
from .certificates import (
    BoundDirection,
    MarkedPattern,
    certify,
    prohibited_patterns_table,
    prose_discrepancies,
)
from .reports import VerificationReport

logger = logging.getLogger(__name__)

BLOCK = (3, 1, 1)
JUNCTION = (3, 1, 1, 1, 1)
ALPHA_INF = PeriodicCF(3, (), (1, 1, 3))
ALPHA_STAR_INF = PeriodicCF(0, (1, 1, 1, 1), BLOCK)
MIDDLE_THREE_CEILING = Fraction(104, 100)

_TAIL = (3, 1, 1, 1)
_NO_TWOS = frozenset({2})
_NO_33_313 = frozenset({(3, 3), (3, 1, 3)})


def _near(value: QuadraticSurd, printed: str, tolerance: Fraction = Fraction(1, 10 ** 6)) -> bool:
    return abs(value.enclosure(64).midpoint - Fraction(printed)) <= tolerance


def _with_block_tail(a0: int, prefix: Tuple[int, ...]) -> QuadraticSurd:
    return cf_to_surd(PeriodicCF(a0, prefix, BLOCK))


def verify_prohibited_patterns() -> VerificationReport:
    """Every row bound exceeds lambda_inf and matches its printed value."""
    report = VerificationReport(name="table")
    limit = lambda_infinity()
    certificates = prohibited_patterns_table()
    for cert in certificates:
        report.add(
            f"{cert.pattern.label}: {cert.kappa_used.value} bound > lambda_inf",
            cert.exceeds_lambda_inf and compare(cert.bound, limit) > 0,
            detail=str(cert.bound),
            value=cert.decimal(6),
        )
        report.add(
            f"{cert.pattern.label}: printed {cert.printed_value}",
            cert.matches_printed(),
            value=cert.decimal(6),
        )
    report.notes.extend(prose_discrepancies(certificates))
    report.notes.append("row [4] is evaluated as the quarter-sum (x + y)/4 of the kappa4 rows")
    return report


def verify_even_block_prohibition(k_max: int = 12) -> VerificationReport:
    """Instances k = 0..k_max of the even block count prohibition."""
    report = VerificationReport(name="even-blocks")
    report.add("<1,1,1,1,3,1,1> = 41", continuant((1, 1, 1, 1, 3, 1, 1)) == 41)
    target = 4 * lambda_infinity()
    alpha_inf, alpha_star_inf = cf_to_surd(ALPHA_INF), cf_to_surd(ALPHA_STAR_INF)
    for k in range(k_max + 1):
        big = continuant((1, 1, 1, 1) + BLOCK * (2 * k + 3))
        small = continuant((1, 1) + BLOCK * (2 * k + 2))
        blocks = continuant(BLOCK * (2 * k + 2))
        report.add(f"k={k}: 3A^2 > 8B^2", 3 * big * big > 8 * small * small, instance=f"k={k}")
        report.add(f"k={k}: A > 41C", big > 41 * blocks, instance=f"k={k}")
        report.add(f"k={k}: B < 3C", small < 3 * blocks, instance=f"k={k}")
        alpha_n = _with_block_tail(3, (1, 1) + BLOCK * (2 * k + 1) + JUNCTION)
        alpha_star = _with_block_tail(0, (1, 1, 1, 1) + BLOCK * (2 * k + 2) + JUNCTION)
        gain, loss = alpha_n - alpha_inf, alpha_star_inf - alpha_star
        report.add(
            f"k={k}: alpha_n - alpha_inf > alpha*_inf - alpha*_(n-1)",
            compare(gain, loss) > 0,
            value=decimal(alpha_n + alpha_star - target, 12),
            instance=f"k={k}",
        )
    return report


def verify_odd_block_prohibition(m_max: int = 12) -> VerificationReport:
    """Instances m = 0..m_max (with m < k <= m + 3) of the odd block count prohibition."""
    report = VerificationReport(name="odd-blocks")
    report.add("<3,1,1> = 7", continuant(BLOCK) == 7)
    alpha_inf, alpha_star_inf = cf_to_surd(ALPHA_INF), cf_to_surd(ALPHA_STAR_INF)
    for m in range(m_max + 1):
        big = continuant((1, 1) + BLOCK * (2 * m + 3))
        small = continuant((1, 1, 1, 1) + BLOCK * (2 * m + 2))
        inner = continuant((1, 1) + BLOCK * (2 * m + 2))
        report.add(f"m={m}: 3A^2 > 8B^2", 3 * big * big > 8 * small * small, instance=f"m={m}")
        report.add(f"m={m}: A >= 7E", big >= 7 * inner, instance=f"m={m}")
        report.add(f"m={m}: B <= 3E", small <= 3 * inner, instance=f"m={m}")
        alpha_star = _with_block_tail(0, (1, 1, 1, 1) + BLOCK * (2 * m + 1) + JUNCTION)
        for k in range(m + 1, m + 4):
            alpha_n = _with_block_tail(3, (1, 1) + BLOCK * (2 * k) + JUNCTION)
            loss, gain = alpha_inf - alpha_n, alpha_star - alpha_star_inf
            report.add(
                f"m={m}, k={k}: alpha_inf - alpha_n < alpha*_(n-1) - alpha*_inf",
                compare(loss, gain) < 0,
                instance=f"m={m}",
            )
    return report


def middle_three_certificates():
    """Upper bounds for kappa1, kappa2, kappa4 at the middle 3 of 3113113."""
    pattern = MarkedPattern(
        (3, 1, 1, 3, 1, 1, 3), 3, forbidden=_NO_TWOS, excluded_words=_NO_33_313
    )
    return [
        certify(
            pattern,
            KappaKind.KAPPA1,
            PeriodicCF(0, (1, 1), _TAIL),
            PeriodicCF(3, (1, 1), _TAIL),
            direction=BoundDirection.UPPER,
            printed_value="1.031440",
        ),
        certify(
            pattern,
            KappaKind.KAPPA2,
            PeriodicCF(0, (3, 1, 1), _TAIL),
            PeriodicCF(1, (1,), _TAIL),
            direction=BoundDirection.UPPER,
            printed_value="1.031440",
        ),
        certify(
            pattern,
            KappaKind.KAPPA4,
            PeriodicCF(0, (1, 1, 3, 1, 1), _TAIL),
            PeriodicCF(3, (1, 1, 3, 1, 1), _TAIL),
            direction=BoundDirection.UPPER,
            printed_value="1.030785",
        ),
    ]


def verify_middle_three_bound() -> VerificationReport:
    """max(kappa1, kappa2, kappa4) < 1.04 at the middle 3 of 3113113."""
    report = VerificationReport(name="middle-three")
    for cert in middle_three_certificates():
        report.add(
            f"{cert.kappa_used.value} <= {cert.printed_value} < 1.04",
            cert.matches_printed(Fraction(1, 10 ** 6))
            and compare(cert.bound, MIDDLE_THREE_CEILING) < 0,
            detail=str(cert.bound),
            value=cert.decimal(6),
        )
    # Bounds from word ranges alone, valid for every continuation.
    ranges = {
        KappaKind.KAPPA1: (word_range(3, (1, 1, 3)), word_range(0, (1, 1, 3))),
        KappaKind.KAPPA2: (word_range(1, (1, 3)), word_range(0, (3, 1, 1, 3))),
        KappaKind.KAPPA4: (word_range(3, (1, 1, 3)), word_range(0, (1, 1, 3))),
    }
    for kind, (x_range, y_range) in ranges.items():
        box = kappa_enclosure(kind, x_range, y_range)
        report.add(
            f"{kind.value} over all continuations < 1.04",
            box.hi < MIDDLE_THREE_CEILING,
            value=decimal(QuadraticSurd.rational(box.hi), 6),
        )
    return report


def _junction_checks(report: VerificationReport, label: str, after: tuple, before: tuple) -> None:
    """kappa4 dominance at a marked 3 followed by ``after`` and preceded by reversed ``before``."""
    alpha_n = word_range(3, after)
    alpha_next = word_range(after[0], after[1:])
    alpha_star = word_range(0, before)
    product = (1 + alpha_star.lo) * (alpha_n.lo - 1)
    report.add(
        f"{label}: (1 + alpha*_(n-1))(alpha_n - 1) > 4",
        product > 4,
        value=decimal(QuadraticSurd.rational(product), 6),
    )
    # f(x, y) = x*y + y - 2x + 2 increases in y and decreases in x for y < 2.
    x, y = alpha_next.hi, alpha_star.lo
    margin = x * y + y - 2 * x + 2
    report.add(
        f"{label}: alpha_(n+1) alpha*_(n-1) + alpha*_(n-1) - 2 alpha_(n+1) + 2 > 0",
        margin > 0,
        value=decimal(QuadraticSurd.rational(margin), 6),
    )


def verify_junction_dominance() -> VerificationReport:
    """kappa4 > max(kappa1, kappa2) at the 3 right after a 31111 junction."""
    report = VerificationReport(name="junction")
    alpha_n = cf_to_surd(PeriodicCF(3, (1, 1), _TAIL))
    alpha_star = cf_to_surd(PeriodicCF(0, (1, 1, 1, 1), _TAIL))
    product = (1 + alpha_star) * (alpha_n - 1)
    report.add(
        "stated substitution: (1 + alpha*_(n-1))(alpha_n - 1) > 4",
        compare(product, 4) > 0 and _near(product, "4.120747"),
        detail=str(product),
        value=decimal(product, 6),
    )
    alpha_next = cf_to_surd(PeriodicCF(1, (1,), _TAIL))
    margin = alpha_next * alpha_star + alpha_star - 2 * alpha_next + 2
    report.add(
        "stated substitution: kappa4 > kappa2 margin > 0",
        margin.sign() > 0,
        detail=str(margin),
        value=decimal(margin, 6),
    )
    _junction_checks(report, "31111[3]113", after=(1, 1, 3), before=(1, 1, 1, 1, 3))
    _junction_checks(report, "311[3]11113", after=(1, 1, 1, 1, 3), before=(1, 1, 3))
    report.notes.append(
        "the statement lists 31111[3]113 twice; the mirror 311[3]11113 is checked as well"
    )
    report.notes.append(
        "the stated kappa2 substitution bounds alpha_(n+1) from below and alpha*_(n-1) from above, "
        "the opposite corner of what the margin needs; the word-range corner is checked too"
    )
    return report


def random_periodic_cf(
    rng: random.Random, max_period: int = 8, max_quotient: int = 4, max_preperiod: int = 3
) -> PeriodicCF:
    period = tuple(rng.randint(1, max_quotient) for _ in range(rng.randint(1, max_period)))
    preperiod = tuple(rng.randint(1, max_quotient) for _ in range(rng.randint(0, max_preperiod)))
    return PeriodicCF(rng.randint(0, 3), preperiod, period)


def verify_perron(samples: int = 500, seed: int = 0) -> VerificationReport:
    """||q_n alpha|| = 1 / (q_n (alpha_{n+1} + alpha*_n)) exactly."""
    report = VerificationReport(name="perron")
    rng = random.Random(seed)
    for index in range(samples):
        cf = random_periodic_cf(rng)
        n = rng.randint(1, 12)
        p, q, _, _ = convergent_terms(cf, n)
        error = cf_to_surd(cf) * q - p
        if error.sign() < 0:
            error = -error
        predicted = (tail_surd(cf, n + 1) + reversed_tail(cf, n)) * q
        report.add(f"#{index} n={n}", error == predicted.invert())
    return report


def verify_cf_difference(samples: int = 500, seed: int = 0) -> VerificationReport:
    """beta - alpha for a shared prefix of length n, in terms of the two tails."""
    report = VerificationReport(name="cf-difference")
    rng = random.Random(seed)
    for index in range(samples):
        n = rng.randint(1, 10)
        a0 = rng.randint(0, 3)
        prefix = tuple(rng.randint(1, 4) for _ in range(n))
        period = tuple(rng.randint(1, 4) for _ in range(rng.randint(1, 6)))
        alpha_tail = purely_periodic_surd(period)
        detour = tuple(rng.randint(1, 4) for _ in range(rng.randint(0, 3)))
        beta_tail = cf_to_surd(PeriodicCF(rng.randint(1, 4), detour, period))
        alpha = apply_prefix(a0, prefix, alpha_tail)
        beta = apply_prefix(a0, prefix, beta_tail)
        _, q, _, q_prev = convergent_terms(FiniteCF(a0, prefix), n)
        star = Fraction(q_prev, q)
        sign = 1 if n % 2 else -1
        spread = (alpha_tail + star) * (beta_tail + star) * (q * q)
        predicted = (beta_tail - alpha_tail) * sign / spread
        report.add(f"#{index} n={n}", beta - alpha == predicted)
    return report


def verify_continuant_rule(samples: int = 500, seed: int = 0) -> VerificationReport:
    """<w> = <w[:t]><w[t:]> + <w[:t-1]><w[t+1:]> for every split 1 <= t <= s-1."""
    report = VerificationReport(name="continuant-rule")
    rng = random.Random(seed)
    for index in range(samples):
        word = tuple(rng.randint(1, 5) for _ in range(rng.randint(2, 16)))
        total = continuant(word)
        holds = continuant(tuple(reversed(word))) == total and all(
            total == continuant(word[:t]) * continuant(word[t:])
            + continuant(word[: t - 1]) * continuant(word[t + 1:])
            for t in range(1, len(word))
        )
        report.add(f"#{index} length={len(word)}", holds)
    return report


STATED_EXPANSION = PeriodicCF(2, (), (1, 1, 1, 1, 3, 1, 1, 3))
PRINTED_SURD = QuadraticSurd(39, 13, 17, 82)
CORRECTED_SURD = QuadraticSurd(39, 13, 173, 82)


def radicand_audit() -> VerificationReport:
    """Compare the stated expansion with the printed surd and its likely correction."""
    report = VerificationReport(name="radicand")
    value = cf_to_surd(STATED_EXPANSION)
    key = STATED_EXPANSION.equivalence_key()
    report.notes.append(f"{format_cf(STATED_EXPANSION)} = {value}")
    for label, candidate in (("printed", PRINTED_SURD), ("corrected", CORRECTED_SURD)):
        expansion = surd_to_cf(candidate)
        equal = candidate == value
        equivalent = expansion.equivalence_key() == key
        finding = f"{label} {candidate} = {format_cf(expansion)}: " + ", ".join(
            ["equal" if equal else "not equal", "equivalent" if equivalent else "not equivalent"]
        )
        report.notes.append(finding)
        if not equal:
            logger.warning("radicand audit: %s", finding)
    report.add(
        "printed radicand 17 is ruled out",
        value != PRINTED_SURD and surd_to_cf(PRINTED_SURD).equivalence_key() != key,
    )
    report.add(
        "radicand 173 gives an equivalent number",
        surd_to_cf(CORRECTED_SURD).equivalence_key() == key,
    )
    report.add("stated expansion lies in Q(sqrt(173))", value.d == 173, detail=str(value))
    return report
