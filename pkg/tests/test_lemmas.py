"""Tests for the mechanical inequality verifiers."""

from lag2.patterns import lemmas
from lag2.patterns.lemmas import (
    middle_three_certificates,
    radicand_audit,
    verify_even_block_prohibition,
    verify_junction_dominance,
    verify_middle_three_bound,
    verify_odd_block_prohibition,
    verify_prohibited_patterns,
)
from lag2.patterns.reports import VerificationReport


class TestBlockProhibitions:
    """Test the even and odd block count verifiers."""

    def test_even_blocks(self):
        """Test instances k = 0..12 hold."""
        report = verify_even_block_prohibition(k_max=12)
        assert report.passed, report.failures
        assert len(report.checks) == 1 + 4 * 13
        assert report.summary() == "PASS 13/13 instances"
        assert list(report.instances()) == [f"k={k}" for k in range(13)]

    def test_odd_blocks(self):
        """Test instances m = 0..12 hold."""
        report = verify_odd_block_prohibition(m_max=12)
        assert report.passed, report.failures
        assert len(report.checks) == 1 + 13 * 6
        assert report.summary() == "PASS 13/13 instances"

    def test_failure_is_reported(self, mocker):
        """Test a broken continuant shows up as failing instances."""
        mocker.patch.object(lemmas, "continuant", return_value=1)
        report = verify_even_block_prohibition(k_max=1)
        assert not report.passed
        assert report.summary() == "FAIL 0/2 instances"
        assert any(check.name.startswith("<1,1,1,1,3,1,1>") for check in report.failures)


class TestPatternVerifiers:
    """Test the table, middle-three and junction verifiers."""

    def test_table(self):
        """Test the prohibited-pattern rows and their prose note."""
        report = verify_prohibited_patterns()
        assert report.passed, report.failures
        assert len(report.checks) == 16
        assert any("values swapped" in note for note in report.notes)

    def test_middle_three(self):
        """Test the three upper bounds stay below 1.04."""
        certificates = middle_three_certificates()
        assert [cert.printed_value for cert in certificates] == ["1.031440", "1.031440", "1.030785"]
        assert all(cert.matches_printed() for cert in certificates)
        report = verify_middle_three_bound()
        assert report.passed, report.failures
        assert len(report.checks) == 6

    def test_junction(self):
        """Test kappa4 dominance at both junction orientations."""
        report = verify_junction_dominance()
        assert report.passed, report.failures
        product = report.checks[0]
        assert product.value.startswith("4.1207")
        assert len(report.checks) == 6


class TestRadicandAudit:
    """Test the audit of the lambda_3 generator."""

    def test_audit(self):
        """Test the stated expansion, the printed surd and the corrected surd."""
        report = radicand_audit()
        assert report.passed, report.failures
        assert report.notes[0] == "[2;(1,1,1,1,3,1,1,3)*] = (43 + 13*sqrt(173))/82"
        assert "not equal, not equivalent" in report.notes[1]
        assert "not equal, equivalent" in report.notes[2]


class TestInstanceSummary:
    """Test per-instance counting in report summaries."""

    def test_one_failing_check_fails_its_instance(self):
        """Test an instance holds only when all its checks hold."""
        report = VerificationReport(name="grouped")
        report.add("shared", True)
        report.add("k=0: first", True, instance="k=0")
        report.add("k=1: first", True, instance="k=1")
        report.add("k=1: second", False, instance="k=1")
        assert report.instances() == {"k=0": True, "k=1": False}
        assert report.summary() == "FAIL 1/2 instances"

    def test_untagged_checks_count_individually(self):
        """Test reports without instances count checks."""
        report = VerificationReport(name="flat")
        report.add("a", True)
        report.add("b", True)
        assert report.summary() == "PASS 2/2 instances"
