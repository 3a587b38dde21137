"""Tests for the exhaustive periodic scan."""

import io

import pytest

from lag2.core.errors import DomainError
from lag2.core.surd import QuadraticSurd, compare
from lag2.patterns.scan import (
    CSV_COLUMNS,
    ScanRow,
    audit_scan,
    lyndon_words,
    predicted_class,
    scan,
    write_csv,
)
from lag2.spectra.ladder import lambda_n


class TestLyndonWords:
    """Test rotation class representatives."""

    def test_binary_words(self):
        """Test the words of length <= 3 over {1, 2}."""
        assert list(lyndon_words(3, 2)) == [(1,), (1, 1, 2), (1, 2), (1, 2, 2), (2,)]

    def test_single_letter(self):
        """Test a one-letter alphabet has one class."""
        assert list(lyndon_words(5, 1)) == [(1,)]

    def test_counts(self):
        """Test the number of aperiodic necklaces of length exactly 4 over 3 letters."""
        words = list(lyndon_words(4, 3))
        assert sum(1 for word in words if len(word) == 4) == 18
        assert len(set(words)) == len(words)


class TestScan:
    """Test the scan rows and their ordering."""

    def setup_method(self):
        """Setup test data."""
        self.rows = scan(3, 3, workers=1)

    def test_sorted_by_value(self):
        """Test rows are ordered by lambda2."""
        for before, after in zip(self.rows, self.rows[1:]):
            assert compare(before.value, after.value) <= 0

    def test_first_rows(self):
        """Test the golden class comes first and the sqrt(17) class second."""
        assert self.rows[0].period_word == (1,)
        assert self.rows[0].value == QuadraticSurd(0, 1, 5, 4)
        assert self.rows[1].period_word == (1, 1, 3)
        assert self.rows[1].value == QuadraticSurd(0, 1, 17, 4)

    def test_below_lambda_inf(self):
        """Test only the first two classes lie below lambda_inf."""
        below = [row.period_word for row in self.rows if row.below_threshold]
        assert below == [(1,), (1, 1, 3)]

    def test_custom_threshold(self):
        """Test the flag follows a supplied threshold."""
        rows = scan(3, 3, threshold=QuadraticSurd.rational(1), workers=1)
        assert [row.period_word for row in rows if row.below_threshold] == [(1,)]

    def test_bounds(self):
        """Test out-of-range bounds are domain errors."""
        with pytest.raises(DomainError):
            scan(0, 3)
        with pytest.raises(DomainError):
            scan(3, 5)
        with pytest.raises(DomainError):
            scan(13, 2)

    def test_csv(self):
        """Test the header and the golden row."""
        stream = io.StringIO()
        write_csv(self.rows, stream)
        lines = stream.getvalue().splitlines()
        assert lines[0] == ",".join(CSV_COLUMNS)
        assert lines[1].startswith("1,sqrt(5)/4,0.5590169944,")
        assert lines[1].endswith(",1")
        assert len(lines) == len(self.rows) + 1


class TestAudit:
    """Test the discrete part audit."""

    def test_predicted_classes(self):
        """Test the classes attaining lambda_1, lambda_2 and lambda_3."""
        assert predicted_class(1) == (1,)
        assert predicted_class(2) == (1, 1, 3)
        assert predicted_class(3) == (1, 1, 1, 1, 3, 1, 1, 3)

    def test_audit_passes(self):
        """Test a length 8 scan finds exactly lambda_1..lambda_3 below lambda_inf."""
        report = audit_scan(scan(8, 3, workers=1))
        assert report.passed, report.failures
        assert any(check.name == "lambda_3 class 11113113 present" for check in report.checks)

    def test_wrong_class_fails(self):
        """Test a ladder value attached to the wrong word is flagged."""
        row = ScanRow((1, 2), lambda_n(3), 1, "kappa4", True)
        report = audit_scan([row])
        assert not report.passed
        assert report.failures[0].name.startswith("12: value 1.042612")
