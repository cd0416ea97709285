"""Tests for the command-line entry point."""

import orjson
import pytest

from src.errors import InvariantViolation
from src.selfcheck import SuiteResult


class TestCompute:
    """Tests for the compute subcommand."""

    def test_table_for_sym2k3(self, cli):
        """Test the ten-row table, the empty candidates and the semistable verdict."""
        code, out, err = cli("compute", "--example", "sym2k3-x-k2")
        assert code == 0, err
        lines = out.splitlines()
        assert lines[0] == "weights: 12  blocks: GL(3) x GL(2)  strata: 10"
        assert lines[2].split() == ["#", "beta", "|beta|^2", "levels", "m0;", "m_1..m_p;", "s", "Z", "W", "Levi", "nonempty"]
        rows = lines[3:13]
        assert [row.split()[2] for row in rows] == [
            "1/42", "1/24", "1/10", "1/6", "1/4", "1/2", "2/3", "11/12", "7/6", "19/6"
        ]
        assert rows[-1].split()[1] == "(-2/3,-2/3,4/3;-1/2,1/2)"
        assert all(row.split()[-1] == "yes" for row in rows)
        assert lines[13:15] == ["", "empty candidates: 3"]
        assert [row.split()[1] for row in lines[16:19]] == ["25/42", "2/3", "8/3"]
        assert lines[19:] == ["", "semistable locus: nonempty"]

    def test_rep_expression(self, cli):
        """Test the two strata of Sym³k² under the trace-zero convention."""
        code, out, _ = cli("compute", "--rep", "sym(3,std(1))", "--blocks", "2")
        assert code == 0
        assert "strata: 2" in out.splitlines()[0]
        rows = out.splitlines()[3:5]
        assert [row.split()[2] for row in rows] == ["1/2", "9/2"]

    def test_structured_report_reloads(self, cli, tmp_path):
        """Test that a structured report is accepted as input and reproduces itself."""
        code, out, _ = cli("compute", "--example", "quad-plus-vector(3,4)", "--format", "structured")
        assert code == 0
        report = orjson.loads(out)
        assert len(report["strata"]) == 6
        assert all(s["nonempty"] for s in report["strata"])
        (empty,) = report["empty_candidates"]
        assert empty["beta"] == ["0", "0", "-3"]
        assert empty["nonempty"] is False
        path = tmp_path / "report.json"
        path.write_text(out)
        code, again, _ = cli("compute", "--input", str(path), "--format", "structured")
        assert code == 0
        assert again == out

    def test_deterministic(self, cli):
        """Test byte-identical output across runs."""
        first = cli("compute", "--example", "binary-cubic")
        second = cli("compute", "--example", "binary-cubic")
        assert first == second

    def test_scales(self, cli):
        """Test that a common metric scale multiplies every norm."""
        _, out, _ = cli("compute", "--example", "binary-cubic", "--scales", "3", "--format", "structured")
        assert [s["norm_squared"] for s in orjson.loads(out)["strata"]] == ["6", "54"]

    def test_subsets_method(self, cli):
        """Test that the subset scan prints the same table."""
        assert cli("compute", "--example", "binary-cubic", "--method", "subsets") == cli(
            "compute", "--example", "binary-cubic"
        )

    def test_format_from_environment(self, cli, monkeypatch):
        """Test that settings supply the default output format."""
        monkeypatch.setenv("MORSE_STRATA_OUTPUT_FORMAT", "structured")
        _, out, _ = cli("compute", "--example", "binary-quadratic")
        assert orjson.loads(out)["semistable_nonempty"] is True


class TestClassifyAndNu:
    """Tests for the classify and nu subcommands."""

    def test_classify_single_weight(self, cli):
        """Test β and its norm for x_2,33 alone."""
        code, out, _ = cli("classify", "--example", "sym2k3-x-k2", "--point", "x_2,33=1")
        assert code == 0
        assert "beta: (-2/3,-2/3,4/3;-1/2,1/2)" in out
        assert "|beta|^2: 19/6" in out
        assert "k-stable (torus): no" in out

    def test_classify_semistable(self, cli):
        """Test a semistable binary cubic."""
        code, out, _ = cli(
            "classify", "--example", "binary-cubic", "--point", "x_111=1,x_112=1,x_122=1,x_222=1"
        )
        assert code == 0
        assert "semistable" in out.splitlines()
        assert "k-stable (torus): yes" in out

    def test_classify_structured(self, cli):
        """Test the structured classification."""
        _, out, _ = cli(
            "classify", "--example", "binary-cubic", "--point", "x_111=2", "--format", "structured"
        )
        document = orjson.loads(out)
        assert document["semistable"] is False
        assert document["beta"] == ["-3", "3"]
        assert document["torus_lambda"] == [1, -1]

    def test_nu(self, cli):
        """Test the signed ν² of a destabilized point."""
        code, out, _ = cli(
            "nu", "--example", "binary-cubic", "--point", "x_122=1,x_222=1", "--lambda=-1,1"
        )
        assert code == 0
        assert out == "mu: 2\nnu^2 (signed): 2\n"

    def test_nu_negative(self, cli):
        """Test a 1PS that does not destabilize."""
        _, out, _ = cli(
            "nu", "--example", "binary-cubic", "--point", "x_111=1,x_222=1", "--lambda=-1,1", "--format", "structured"
        )
        assert orjson.loads(out) == {"lambda": [-1, 1], "mu": "-6", "nu_squared": "-18"}


class TestOtherCommands:
    """Tests for list-examples, check and help."""

    def test_list_examples(self, cli):
        """Test the example catalogue."""
        code, out, _ = cli("list-examples")
        assert code == 0
        assert [line.split()[0] for line in out.splitlines()] == [
            "binary-cubic", "binary-quadratic", "sym2k3-x-k2", "quad-plus-vector(b1,b2[,scale])"
        ]

    def test_check_failure_exit_code(self, cli, monkeypatch):
        """Test that a failing suite exits with 2 and is reported."""
        failing = SuiteResult(name="oracle", passed=3, failed=1, failures=["instance 2: mismatch"])
        monkeypatch.setattr("cli.commands.check.run_checks", lambda **_: [failing])
        code, out, _ = cli("check", "--seed", "1")
        assert code == 2
        assert "oracle: 3 passed, 1 failed  [FAILED]" in out
        assert "  - instance 2: mismatch" in out

    def test_check_passes_sizes(self, cli, monkeypatch):
        """Test that flags and settings reach the suites."""
        seen = {}

        def fake(**kwargs):
            seen.update(kwargs)
            return [SuiteResult(name="oracle", passed=1)]

        monkeypatch.setenv("MORSE_STRATA_CHECK_DUALITY_SUPPORTS", "7")
        monkeypatch.setattr("cli.commands.check.run_checks", fake)
        code, _, _ = cli("check", "--seed", "5", "--instances", "9")
        assert code == 0
        assert seen == {"seed": 5, "oracle_instances": 9, "duality_supports": 7, "duality_lambdas": 1000}

    @pytest.mark.slow
    def test_check_runs(self, cli, monkeypatch):
        """Test a small real self-check run."""
        monkeypatch.setenv("MORSE_STRATA_CHECK_DUALITY_SUPPORTS", "3")
        monkeypatch.setenv("MORSE_STRATA_CHECK_DUALITY_LAMBDAS", "30")
        code, out, _ = cli("check", "--instances", "5")
        assert code == 0, out
        assert "[FAILED]" not in out

    def test_help(self, cli):
        """Test that --help exits cleanly."""
        code, _, _ = cli("--help")
        assert code == 0


class TestExitCodes:
    """Tests for input errors and invariant violations."""

    @pytest.mark.parametrize(
        ("argv", "message"),
        [
            (["compute", "--example", "ternary-cubic"], "unknown example"),
            (["compute"], "exactly one of"),
            (["compute", "--example", "binary-cubic", "--rep", "std(1)", "--blocks", "2"], "exactly one of"),
            (["compute", "--rep", "std(1)"], "together"),
            (["compute", "--rep", "std(1)*std(1)", "--blocks", "2"], "at offset"),
            (["compute", "--example", "sym2k3-x-k2", "--cap", "5"], "--cap 12"),
            (["compute", "--example", "binary-cubic", "--cap", "0"], "greater than 0"),
            (["compute", "--blocks", "2,x", "--rep", "std(1)"], "comma-separated"),
            (["compute", "--example", "binary-cubic", "--scales", "1/0"], "zero denominator"),
            (["classify", "--example", "binary-cubic", "--point", "x_9=1"], "unknown weight label"),
            (["nu", "--example", "binary-cubic", "--point", "x_111=1", "--lambda=1,1"], "sum to 2"),
            (["frobnicate"], "invalid choice"),
        ],
    )
    def test_input_errors(self, cli, argv, message):
        """Test that bad input exits with 1 and explains itself."""
        code, out, err = cli(*argv)
        assert code == 1
        assert out == ""
        assert message in err

    def test_missing_input_file(self, cli, tmp_path):
        """Test an unreadable input path."""
        code, _, err = cli("compute", "--input", str(tmp_path / "absent.json"))
        assert code == 1
        assert "cannot read" in err

    def test_invariant_violation(self, cli, monkeypatch):
        """Test that internal failures exit with 2."""

        def broken(*args, **kwargs):
            raise InvariantViolation("corral lost affine independence")

        monkeypatch.setattr("cli.commands.compute.stratify", broken)
        code, _, err = cli("compute", "--example", "binary-cubic")
        assert code == 2
        assert "internal invariant violated" in err
