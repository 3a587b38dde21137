"""Exhaustive scan of purely periodic continued fractions with bounded data.

One representative per rotation class: the Lyndon words over 1..max_quotient
of length <= max_period, each read as [0; (w)*]. Preperiods never change the
second Lagrange constant, so nothing is lost by scanning purely periodic
numbers only.
"""

import csv
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cmp_to_key
from typing import IO, Iterator, List, Optional

from ..core.cf import PeriodicCF, Word, least_rotation
from ..core.config import AppConfig
from ..core.errors import DomainError
from ..core.surd import QuadraticSurd, compare, decimal
from ..spectra.constants import lambda2
from ..spectra.ladder import ladder_index, lambda_infinity, xi
from .reports import VerificationReport

logger = logging.getLogger(__name__)

MAX_PERIOD = 12
MAX_QUOTIENT = 4
CSV_COLUMNS = (
    "period_word",
    "value_exact",
    "value_decimal_10",
    "witness_position",
    "dominant_kappa",
    "below_lambda_inf",
)


@dataclass(frozen=True)
class ScanRow:
    period_word: Word
    value: QuadraticSurd
    witness_position: Optional[int]
    dominant_kappa: str
    below_threshold: bool


def lyndon_words(max_length: int, max_letter: int) -> Iterator[Word]:
    """Lyndon words over 1..max_letter in lexicographic order (Duval)."""
    word = [0]
    while word:
        word[-1] += 1
        yield tuple(word)
        size = len(word)
        while len(word) < max_length:
            word.append(word[-size])
        while word and word[-1] == max_letter:
            word.pop()


def _evaluate(word: Word):
    value = lambda2(PeriodicCF(0, (), word))
    return word, value.value, value.witness_position, value.witness_label


def _order(left: ScanRow, right: ScanRow) -> int:
    by_value = compare(left.value, right.value)
    if by_value:
        return by_value
    return (left.period_word > right.period_word) - (left.period_word < right.period_word)


def scan(
    max_period: int,
    max_quotient: int,
    threshold: Optional[QuadraticSurd] = None,
    workers: Optional[int] = None,
) -> List[ScanRow]:
    """lambda2 of every rotation class, sorted by value and then by word."""
    if not 1 <= max_period <= MAX_PERIOD or not 1 <= max_quotient <= MAX_QUOTIENT:
        raise DomainError(
            f"scan bounds must satisfy 1 <= max_period <= {MAX_PERIOD} "
            f"and 1 <= max_quotient <= {MAX_QUOTIENT}"
        )
    threshold = lambda_infinity() if threshold is None else threshold
    workers = AppConfig().scan_workers if workers is None else workers
    words = list(lyndon_words(max_period, max_quotient))
    logger.info("scanning %d rotation classes with %d worker(s)", len(words), workers)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_evaluate, words, chunksize=32))
    else:
        results = [_evaluate(word) for word in words]
    rows = [
        ScanRow(
            period_word=word,
            value=value,
            witness_position=position,
            dominant_kappa=label,
            below_threshold=compare(value, threshold) < 0,
        )
        for word, value, position, label in results
    ]
    return sorted(rows, key=cmp_to_key(_order))


def write_csv(rows: List[ScanRow], stream: IO[str]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(
            [
                "".join(map(str, row.period_word)),
                row.value.to_text(),
                decimal(row.value, 10),
                "" if row.witness_position is None else row.witness_position,
                row.dominant_kappa,
                int(row.below_threshold),
            ]
        )


def predicted_class(n: int) -> Word:
    """Rotation class attaining lambda_n."""
    if n == 1:
        return (1,)
    if n == 2:
        return (1, 1, 3)
    return least_rotation(xi(n).period)


def audit_scan(rows: List[ScanRow], n_max: int = 10) -> VerificationReport:
    """Values below lambda_inf are ladder values attained only by the predicted classes."""
    report = VerificationReport(name="scan")
    limit = lambda_infinity()
    seen = set()
    for row in rows:
        if compare(row.value, limit) >= 0:
            continue
        n = ladder_index(row.value, n_max)
        label = "".join(map(str, row.period_word))
        report.add(
            f"{label}: value {decimal(row.value, 6)} is lambda_{n}",
            n is not None and predicted_class(n) == row.period_word,
            detail=row.value.to_text(),
        )
        seen.add(row.period_word)
    if rows:
        longest = max(len(row.period_word) for row in rows)
        largest = max(max(row.period_word) for row in rows)
        for n in range(1, n_max + 1):
            word = predicted_class(n)
            if len(word) <= longest and max(word) <= largest:
                report.add(f"lambda_{n} class {''.join(map(str, word))} present", word in seen)
    return report
