"""Tests for the command line front end."""

import csv
import io
import json
from fractions import Fraction

from lag2.cli import main
from lag2.cli.main import build_parser, run
from lag2.patterns.reports import VerificationReport


def invoke(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, out.getvalue()


class TestValues:
    """Test the value verbs in text form."""

    def test_lambda2(self):
        """Test the sqrt(17) class at six digits."""
        code, out = invoke("lambda2", "[2;(1,1,3)*]", "--digits", "6")
        assert code == 0
        assert out == "sqrt(17)/4 ≈ 1.030776\n"

    def test_lambda_n(self):
        """Test lambda_3 and lambda_inf."""
        code, out = invoke("lambda-n", "3", "--digits", "6")
        assert code == 0
        assert out.startswith("13*sqrt(173)/164 ≈ ")
        printed = Fraction(out.split("≈ ")[1].strip())
        assert abs(printed - Fraction("1.042611")) <= Fraction(1, 10 ** 6)
        assert invoke("lambda-n", "inf")[1] == "(21 + 3*sqrt(17))/32 ≈ 1.042791\n"

    def test_eval(self):
        """Test a periodic expression evaluates to its surd."""
        code, out = invoke("eval", "[1;(2)*]")
        assert code == 0
        assert out.startswith("sqrt(2) ≈ 1.414214")

    def test_surd(self):
        """Test a surd expands to its canonical continued fraction."""
        assert invoke("surd", "sqrt(2)") == (0, "[1;(2)*]\n")

    def test_xi(self):
        """Test the lambda_3 generator."""
        assert invoke("xi", "3") == (0, "[0;(1,1,1,1,3,1,1,3)*]\n")

    def test_digits_from_environment(self, monkeypatch):
        """Test LAG2_DIGITS sets the default precision."""
        monkeypatch.setenv("LAG2_DIGITS", "3")
        assert invoke("lambda-n", "2")[1] == "sqrt(17)/4 ≈ 1.031\n"


class TestExitCodes:
    """Test the exit code of each error family."""

    def test_syntax_error(self, capsys):
        """Test an unbalanced period is a usage error."""
        code, out = invoke("lambda2", "[2;(1,1,3*]")
        assert code == 1
        assert out == ""
        assert "❌" in capsys.readouterr().err

    def test_unknown_flag(self):
        """Test argparse failures map to exit code 1."""
        assert invoke("lambda2", "[1;(1)*]", "--bogus")[0] == 1
        assert invoke("frobnicate")[0] == 1
        assert invoke("lambda-n", "2", "--digits", "0")[0] == 1

    def test_rational_surd(self):
        """Test a rational has no periodic expansion."""
        assert invoke("surd", "3/4")[0] == 2

    def test_bad_index(self):
        """Test lambda_0 is a domain error."""
        assert invoke("lambda-n", "0")[0] == 2

    def test_failed_verification(self, mocker, capsys):
        """Test a failing verifier exits with 3 and lists the failures."""
        report = VerificationReport(name="radicand")
        report.add("broken instance", False, detail="0 > 1")
        mocker.patch.dict(main.VERIFIERS, {"radicand": lambda args: report})
        code, out = invoke("verify", "radicand")
        assert code == 3
        assert out.startswith("FAIL 0/1 instances")
        assert "  FAIL broken instance 0 > 1" in out
        assert "1 failing instance(s)" in capsys.readouterr().err


class TestVerify:
    """Test the verify verb."""

    def test_even_blocks(self):
        """Test the default range reports one instance per k."""
        code, out = invoke("verify", "even-blocks", "--max-k", "12")
        assert code == 0
        assert out.startswith("PASS 13/13 instances")

    def test_numbered_names(self):
        """Test the numbered verifier names run the same reports."""
        code, out = invoke("verify", "lemma4", "--max-k", "12")
        assert code == 0
        assert out.startswith("PASS 13/13 instances")
        for name in ("lemma2-table", "lemma6", "lemma7"):
            assert invoke("verify", name)[0] == 0
        assert invoke("verify", "lemma5", "--max-k", "3")[0] == 0
        assert invoke("verify", "eq11", "--samples", "20")[0] == 0
        assert invoke("verify", "perron", "--samples", "20")[0] == 0

    def test_jsonl_report(self):
        """Test the report serializes as one JSON object."""
        code, out = invoke("verify", "middle-three", "--format", "jsonl")
        assert code == 0
        report = json.loads(out)
        assert report["name"] == "middle-three"
        assert len(report["checks"]) == 6

    def test_choices(self):
        """Test every verifier is offered."""
        args = build_parser().parse_args(["verify", "perron", "--samples", "10"])
        assert args.arguments == ["perron"]
        assert args.samples == 10


class TestFormats:
    """Test machine-readable output and quiet mode."""

    def test_jsonl(self):
        """Test one record per line."""
        code, out = invoke("lambda-n", "2", "--format", "jsonl")
        record = json.loads(out)
        assert code == 0
        assert record["verb"] == "lambda-n"
        assert record["exact"] == "sqrt(17)/4"
        assert record["decimal"] == "1.030776"

    def test_csv(self):
        """Test a header row and a quoted expansion."""
        code, out = invoke("lambda2", "[2;(1,1,3)*]", "--format", "csv")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == 0
        assert rows[0]["expansion"] == "[2;(1,1,3)*]"
        assert rows[0]["witness_position"] == "2"
        assert rows[0]["witness"] == "kappa4"

    def test_quiet(self, capsys):
        """Test --quiet removes the banner and status lines."""
        invoke("lambda-n", "1", "--quiet")
        assert capsys.readouterr().err == ""

    def test_banner(self, capsys):
        """Test the banner and the done line go to stderr."""
        code, out = invoke("lambda-n", "1")
        err = capsys.readouterr().err
        assert code == 0
        assert out == "sqrt(5)/4 ≈ 0.559017\n"
        assert "🔢 lag2" in err and "✅ done" in err


class TestReports:
    """Test the table, scan and family verbs."""

    def test_table(self, capsys):
        """Test eight rows and the prose finding on stderr."""
        code, out = invoke("table")
        assert code == 0
        assert len(out.splitlines()) == 8
        assert out.splitlines()[1].split()[:2] == ["[4]", "κ⁴"]
        assert "⚠️" in capsys.readouterr().err

    def test_numbered_table_verb(self):
        """Test table-lemma2 prints the same eight rows."""
        code, out = invoke("table-lemma2")
        assert code == 0
        assert out == invoke("table")[1]

    def test_scan_csv(self):
        """Test the scan writes its CSV columns."""
        code, out = invoke(
            "scan", "--max-period", "3", "--max-quotient", "3", "--workers", "1", "--format", "csv"
        )
        lines = out.splitlines()
        assert code == 0
        assert lines[0].startswith("period_word,value_exact")
        assert lines[1].startswith("1,sqrt(5)/4,")

    def test_family(self):
        """Test the prefix line and one junction line."""
        code, out = invoke("family", "5", "6")
        lines = out.splitlines()
        assert code == 0
        assert lines[0].startswith("prefix [0;3,1,1,3,1,1")
        assert lines[1].startswith("a_39: kappa4 in [1.042")
        assert lines[2].startswith("spread about lambda_inf")
