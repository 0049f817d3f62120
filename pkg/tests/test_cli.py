"""
Tests for the trisolid command line and report rendering.
"""

import csv
import io
import json

import pytest

from trisolid import __main__ as cli
from trisolid.__main__ import (
    EXIT_DISCREPANCY,
    EXIT_OK,
    EXIT_USAGE,
    build_config,
    create_parser,
    main,
)
from trisolid.classify import VerdictReport, run_verifier
from trisolid.classify.core import Provenance, Step
from trisolid.config import FORMAT_ENV_VAR, OutputFormat, RunConfig, default_format
from trisolid.errors import InvalidInputError
from trisolid.report import ratio, render_bounds, render_reports
from trisolid.tripleplane import cusp_bounds


@pytest.fixture(autouse=True)
def no_format_env(monkeypatch):
    """Keep TRISOLID_FORMAT out of every test unless set explicitly."""
    monkeypatch.delenv(FORMAT_ENV_VAR, raising=False)


class TestTable1Command:
    """Tests for `trisolid table1`."""

    def test_csv(self, capsys):
        assert main(["table1", "--format", "csv"]) == EXIT_OK
        out = capsys.readouterr().out
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["case", "s", "b", "c"]
        assert len(rows) == 13
        assert rows[4] == ["4", "13", "10", "21"]
        assert "\r" not in out

    def test_text(self, capsys):
        assert main(["table1"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "survivors: 1, 4" in out
        assert "hcube (a=5, a^2-s=9)" in out

    def test_json(self, capsys):
        assert main(["table1", "--format", "json"]) == EXIT_OK
        doc = json.loads(capsys.readouterr().out)
        assert doc["schema_version"] == 1
        assert doc["survivors"] == [1, 4]
        assert doc["cases"][6]["first_failure"] == "hcube"
        assert doc["cases"][6]["filters"]["hcube"]["witness"] == {"a": 5, "a^2-s": 9}

    def test_markdown(self, capsys):
        assert main(["table1", "--format", "md"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("| case | s | b | c |")


class TestVerifyCommand:
    """Tests for `trisolid verify`."""

    def test_single(self, capsys):
        assert main(["verify", "schwarzenberger"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("[PASS] schwarzenberger:")
        assert out.endswith("1/1 verifiers passed\n")

    def test_all(self, capsys):
        assert main(["verify", "all"]) == EXIT_OK
        assert "23/23 verifiers passed" in capsys.readouterr().out

    def test_unknown_id(self, capsys):
        assert main(["verify", "nope"]) == EXIT_USAGE
        err = capsys.readouterr().err
        assert "Unknown verifier: nope" in err
        assert "reider" in err

    def test_missing_target(self, capsys):
        assert main(["verify"]) == EXIT_USAGE

    def test_list(self, capsys):
        assert main(["verify", "--list"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].startswith("scroll-examples")
        assert lines[-1].startswith("remark-final")

    def test_window(self, capsys):
        assert main(["verify", "reider", "--window", "2"]) == EXIT_OK
        assert "within window 2" in capsys.readouterr().out

    def test_bad_window(self, capsys):
        assert main(["verify", "reider", "--window", "0"]) == EXIT_USAGE

    def test_json_round_trip(self, capsys):
        assert main(["verify", "all", "--format", "json"]) == EXIT_OK
        out = capsys.readouterr().out
        doc = json.loads(out)
        assert doc["overall"] is True
        again = json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False)
        assert again + "\n" == out

    def test_deterministic(self, capsys):
        main(["verify", "all", "--format", "json"])
        first = capsys.readouterr().out
        main(["verify", "all", "--format", "json"])
        assert capsys.readouterr().out == first

    def test_csv(self, capsys):
        assert main(["verify", "cusp-bounds", "--format", "csv"]) == EXIT_OK
        rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
        assert rows[0] == ["theorem", "step", "provenance", "passed"]
        assert all(row[0] == "cusp-bounds" for row in rows[1:])
        assert {row[3] for row in rows[1:]} == {"true"}

    def test_output_file(self, tmp_path, capsys):
        target = tmp_path / "report.json"
        argv = ["verify", "remark-final", "--format", "json", "-o", str(target)]
        assert main(argv) == EXIT_OK
        assert capsys.readouterr().out == ""
        doc = json.loads(target.read_text())
        assert doc["reports"][0]["theorem_id"] == "remark-final"

    def test_output_dir_missing(self, tmp_path, capsys):
        target = tmp_path / "no" / "such" / "dir" / "report.json"
        assert main(["table1", "-o", str(target)]) == EXIT_USAGE
        err = capsys.readouterr().err
        assert err.startswith("Error: cannot write output")
        assert not target.exists()

    def test_failing_verifier_exit_code(self, monkeypatch, capsys):
        failing = VerdictReport(
            "broken", "t", (Step("claim", 1, 2, Provenance.DERIVED, False),)
        )
        monkeypatch.setattr(cli, "run_all", lambda ctx: [failing])
        assert main(["verify", "all"]) == EXIT_DISCREPANCY
        assert "0/1 verifiers passed" in capsys.readouterr().out
        assert main(["report", "--format", "json"]) == EXIT_DISCREPANCY
        assert json.loads(capsys.readouterr().out)["overall"] is False


class TestInvariantsCommand:
    """Tests for `trisolid invariants`."""

    def test_branch_data(self, capsys):
        assert main(["invariants", "--b", "10", "--c", "21", "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["invariants"]["ksq"] == -4
        assert doc["invariants"]["euler"] == 16
        assert doc["invariants"]["g"] == 3

    def test_tschirnhaus(self, capsys):
        assert main(["invariants", "--b1", "-2", "--b2", "1", "--format", "csv"]) == 0
        rows = dict(csv.reader(io.StringIO(capsys.readouterr().out)))
        assert rows["field"] == "value"
        assert rows["ksq"] == "8"

    def test_decomposable(self, capsys):
        assert main(["invariants", "--m", "1", "--n", "2"]) == EXIT_OK
        assert "pg     0" in capsys.readouterr().out

    def test_mixed_pairs(self, capsys):
        assert main(["invariants", "--b", "10", "--b1", "-5"]) == EXIT_USAGE

    def test_non_integral(self, capsys):
        assert main(["invariants", "--b", "10", "--c", "20"]) == EXIT_USAGE
        assert "p_g" in capsys.readouterr().err


class TestBoundsCommand:
    """Tests for `trisolid bounds`."""

    def test_candidate(self, capsys):
        argv = ["bounds", "--b", "10", "--s", "13", "--c", "21", "--format", "csv"]
        assert main(argv) == EXIT_OK
        rows = dict(csv.reader(io.StringIO(capsys.readouterr().out)))
        assert rows["lower_strict"] == "50/3"
        assert rows["upper"] == "21/1"
        assert rows["admits_c"] == "true"

    def test_refined(self, capsys):
        argv = ["bounds", "--b", "10", "--s", "13", "--c", "21", "--rational-non-p2"]
        assert main(argv + ["--format", "json"]) == EXIT_OK
        doc = json.loads(capsys.readouterr().out)
        assert doc["bounds"]["upper_rational_refined"] == "102/5"
        assert doc["bounds"]["admits_c"] is False

    def test_odd_branch_degree(self, capsys):
        assert main(["bounds", "--b", "9", "--s", "13"]) == EXIT_USAGE


class TestReportCommand:
    """Tests for `trisolid report`."""

    def test_json(self, capsys):
        assert main(["report", "--format", "json"]) == EXIT_OK
        doc = json.loads(capsys.readouterr().out)
        assert doc["command"] == "report"
        assert doc["table1"]["survivors"] == [1, 4]
        assert len(doc["reports"]) == 23

    def test_markdown(self, capsys):
        assert main(["report", "--format", "md"]) == EXIT_OK
        assert "**23/23 verifiers passed**" in capsys.readouterr().out


class TestConfig:
    """Tests for format selection and run configuration."""

    def test_env_var(self, monkeypatch, capsys):
        monkeypatch.setenv(FORMAT_ENV_VAR, "csv")
        assert main(["table1"]) == EXIT_OK
        assert capsys.readouterr().out.startswith("case,s,b,c\n")

    def test_flag_beats_env_var(self, monkeypatch, capsys):
        monkeypatch.setenv(FORMAT_ENV_VAR, "csv")
        assert main(["table1", "--format", "json"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["command"] == "table1"

    def test_bad_env_var(self, monkeypatch, capsys):
        monkeypatch.setenv(FORMAT_ENV_VAR, "yaml")
        assert main(["table1"]) == EXIT_USAGE
        assert "yaml" in capsys.readouterr().err

    def test_default_format(self):
        assert default_format({}) is OutputFormat.TEXT
        assert default_format({FORMAT_ENV_VAR: " MD "}) is OutputFormat.MD

    def test_build_config(self):
        args = create_parser().parse_args(["bounds", "--b", "10", "--s", "13"])
        config = build_config(args)
        assert config.command == "bounds"
        assert config.params["b"] == 10
        assert config.params["c"] is None
        assert not config.rational_non_p2

    def test_run_config_window(self):
        with pytest.raises(InvalidInputError):
            RunConfig(command="verify", window=0)

    def test_version(self, capsys):
        assert main(["--version"]) == EXIT_OK
        assert capsys.readouterr().out.startswith("trisolid ")

    def test_no_command(self, capsys):
        assert main([]) == EXIT_USAGE


class TestRendering:
    """Tests for the renderers themselves."""

    def test_ratio(self):
        assert ratio(21) == "21/1"

    def test_failing_step_text(self):
        failing = VerdictReport(
            "x", "t", (Step("claim", 1, 2, Provenance.DERIVED, False),)
        )
        out = render_reports([failing], OutputFormat.TEXT)
        assert "[FAIL] x: t" in out
        assert "FAIL claim: got 1, expected 2 (derived)" in out

    @pytest.mark.parametrize("c", [20, 21, 22])
    def test_bounds_formats_agree(self, c):
        bounds = cusp_bounds(10, 13, rational_non_p2=True)
        doc = json.loads(render_bounds(bounds, OutputFormat.JSON, c=c))["bounds"]
        rows = dict(
            csv.reader(io.StringIO(render_bounds(bounds, OutputFormat.CSV, c=c)))
        )
        assert isinstance(doc["admits_c"], bool)
        assert doc["admits_c"] is bounds.admits(c)
        assert rows.pop("bound") == "value"
        assert rows == {
            k: str(v).lower() if isinstance(v, bool) else v for k, v in doc.items()
        }

    def test_bounds_text(self):
        out = render_bounds(cusp_bounds(4, 1), OutputFormat.TEXT, c=3)
        assert "lower_strict" in out
        assert "8/3" in out
        assert out.rstrip().endswith("true")

    def test_report_dict_steps(self):
        out = render_reports([run_verifier("remark-final")], OutputFormat.JSON)
        step = json.loads(out)["reports"][0]["steps"][0]
        assert step == {
            "claim": "S . O(0,1)^2 on Y",
            "computed": 3,
            "expected": 3,
            "provenance": "quoted",
            "passed": True,
        }
