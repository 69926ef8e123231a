#!/usr/bin/env python3
"""
Tests for the g2cartan command line: exit codes, JSON reports and the schema.
"""

import json
from pathlib import Path

import jsonschema
import pytest
from click.testing import CliRunner

import g2cartan
from g2cartan.cli import main

SCHEMA = json.loads((Path(g2cartan.__file__).parent / "schemas" / "report.schema.json").read_text())


@pytest.fixture
def runner():
    return CliRunner()


def _report(result):
    """JSON report from the output; status lines on stderr may precede it."""
    lines = result.output.splitlines()
    start = lines.index("{")
    report = json.loads("\n".join(lines[start:]))
    jsonschema.validate(report, SCHEMA)
    return report


def _check(report, name):
    return next(check for check in report["checks"] if check["name"] == name)


def test_version(runner):
    result = runner.invoke(main, ["--version"])
    assert result.exit_code == 0
    assert "1.0.0" in result.output


def test_verify_core(runner):
    result = runner.invoke(main, ["verify-core", "--json"])
    assert result.exit_code == 0, result.output
    report = _report(result)
    assert report["command"] == "verify-core"
    jacobi = _check(report, "core.jacobi")
    assert jacobi["pass"] is True
    assert jacobi["count"] == 364
    assert _check(report, "core.killing")["count"] == 105
    assert "timing" not in report


def test_verify_core_human_table(runner):
    result = runner.invoke(main, ["verify-core"])
    assert result.exit_code == 0
    assert "core.jacobi" in result.output
    assert "checks passed" in result.output


def test_model_verify_n6(runner):
    result = runner.invoke(main, ["model", "verify", "--label", "N.6", "--json"])
    assert result.exit_code == 0, result.output
    report = _report(result)
    assert all(check["pass"] for check in report["checks"])
    assert report["data"]["curvature_coefficients"] == {
        "kappa4": "42",
        "kappa5": "-30",
        "kappa6": "20",
        "kappa7": "-4",
        "kappa8": "6",
    }
    assert set(report["data"]["holonomy"]) == {"dim", "type"}
    assert isinstance(report["data"]["einstein_dim"], int)


@pytest.mark.parametrize("label", ["N.7", "D.6"])
def test_model_verify_formal(runner, label):
    result = runner.invoke(main, ["model", "verify", "--label", label, "--formal", "--json"])
    assert result.exit_code == 0, result.output
    report = _report(result)
    assert all(check["pass"] for check in report["checks"])
    assert _check(report, "model.m1.coset_span")["pass"] is True
    assert list(report["data"]["params"].values()) in (["a"], ["c"])
    assert "holonomy" not in report["data"]


def test_model_holonomy_and_einstein(runner):
    result = runner.invoke(main, ["model", "holonomy", "--label", "D.6", "--a", "0", "--psi", "tilde_1", "--json"])
    assert result.exit_code == 0, result.output
    report = _report(result)
    assert report["data"]["holonomy"] == {"dim": 8, "type": "sl3"}
    assert report["data"]["real_holonomy"]["type"] == "su(1,2)"

    result = runner.invoke(main, ["model", "einstein", "--label", "D.6", "--a", "0", "--json"])
    assert result.exit_code == 0, result.output
    assert _report(result)["data"]["einstein_dim"] == 1


def test_model_iii6(runner):
    result = runner.invoke(main, ["model", "iii6", "--json"])
    assert result.exit_code == 0, result.output
    assert _check(_report(result), "iii6.forces_flat")["pass"] is True


def test_model_dictionary(runner):
    result = runner.invoke(main, ["model", "dictionary", "--row", "N.6", "--json"])
    assert result.exit_code == 0, result.output
    assert _report(result)["data"]["model"] == "N.6"


def test_rolling_exceptional_ratio(runner):
    result = runner.invoke(main, ["rolling", "--rho", "3", "--json"])
    assert result.exit_code == 0, result.output
    data = _report(result)["data"]
    assert data["exceptional"] is True
    assert data["symmetry_dim"] == 14


def test_rolling_generic_ratio(runner):
    result = runner.invoke(main, ["rolling", "--rho", "2", "--json"])
    assert result.exit_code == 0, result.output
    report = _report(result)
    assert report["data"]["a2"] == "-36/7"
    assert report["data"]["psi"] == "tilde_i"
    assert report["data"]["residuals_zero"] is True
    assert report["ext"] == "a^2=-36/7"


def test_rolling_monotonicity_from_environment(runner):
    result = runner.invoke(main, ["rolling", "--monotonic", "--json"], env={"G2CARTAN_MONOTONICITY_SAMPLES": "3"})
    assert result.exit_code == 0, result.output
    report = _report(result)
    assert _check(report, "rolling.decreasing.low")["count"] == 3


def test_failed_checks_exit_one(runner):
    result = runner.invoke(main, ["rolling", "--samples", "1/2,2", "--json"])
    assert result.exit_code == 1
    assert _check(_report(result), "rolling.samples_in_range")["pass"] is False


@pytest.mark.parametrize(
    "args",
    [
        ["rolling", "--rho", "abc"],
        ["rolling", "--rho", "1/2"],
        ["rolling"],
        ["model", "verify", "--label", "Q.9"],
        ["model", "verify", "--label", "D.6", "--a", "3/2*x"],
        ["model", "verify", "--label", "D.6", "--a", "s"],
        ["model", "verify", "--label", "D.6", "--formal", "--a", "1"],
        ["model", "verify", "--label", "III.6", "--formal"],
        ["prolong", "--quartic", "1,2"],
        ["realform", "--label", "D.6", "--a", "1"],
        ["realform", "--label", "D.6", "--a", "1", "--psi", "bogus_1"],
        ["no-such-command"],
    ],
)
def test_parse_errors_exit_two(runner, args):
    result = runner.invoke(main, args)
    assert result.exit_code == 2, result.output


def test_library_errors_exit_one(runner):
    result = runner.invoke(main, ["prolong", "--quartic", "0,0,0,0,0"])
    assert result.exit_code == 1
    result = runner.invoke(main, ["realform", "--label", "D.6", "--a", "1+i", "--psi", "psi_1"])
    assert result.exit_code == 1


def test_realform_fixed_algebra(runner):
    result = runner.invoke(main, ["realform", "--label", "D.6", "--a", "1", "--psi", "tilde_1", "--json"])
    assert result.exit_code == 0, result.output
    data = _report(result)["data"]
    assert data["type"] == "sl(2,R)xso(3)"
    assert data["signature"] == [2, 4, 0]
    assert len(data["basis"]) == 6


def test_realform_classify(runner):
    result = runner.invoke(main, ["realform", "classify", "--label", "D.6", "--a", "1", "--json"])
    assert result.exit_code == 0, result.output
    rows = _report(result)["data"]["models"]
    assert [row["psi"] for row in rows] == ["psi_1", "tilde_1", "tilde_-1"]


def test_realform_so13(runner):
    result = runner.invoke(main, ["realform", "so13", "--case", "C", "--alpha", "2", "--json"])
    assert result.exit_code == 0, result.output
    assert _report(result)["data"]["a2"] == "-81/136"


def test_prolong(runner):
    result = runner.invoke(main, ["prolong", "--quartic", "0, 0, 1, 0, 0", "--json"])
    assert result.exit_code == 0, result.output
    data = _report(result)["data"]
    assert data["dim"] == 6
    assert data["rigid"] is True
    assert len(data["annihilator"]) == 1


def test_covariants_echo_extension(runner):
    result = runner.invoke(main, ["covariants", "--model", "D.6", "--a", "s", "--ext", "2", "--json"])
    assert result.exit_code == 0, result.output
    report = _report(result)
    assert report["ext"] == "s^2=2"
    assert len(report["data"]["F"]) == 5
    assert report["data"]["params"] == {"a": "1*s"}


def test_curvature_module(runner):
    result = runner.invoke(main, ["curvature-module", "--json"])
    assert result.exit_code == 0, result.output
    data = _report(result)["data"]
    assert sum(data["components"].values()) == 24
    assert len(data["chains"]) == 24
    assert data["cohomology"]["cohomology"] == 5


def test_json_report_saved_to_report_dir(runner, tmp_path):
    result = runner.invoke(main, ["model", "iii6", "--json"], env={"G2CARTAN_REPORT_DIR": str(tmp_path)})
    assert result.exit_code == 0, result.output
    saved = json.loads((tmp_path / "model_iii6.json").read_text())
    jsonschema.validate(saved, SCHEMA)
    assert saved["command"] == "model iii6"
