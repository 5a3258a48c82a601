"""Tests for the command line front end."""

import dataclasses
import json

import pytest

from centra import cli
from centra.const import ENV_ORDER_CAP
from centra.theorems import VERIFIERS, Outcome, Status


def _run(capsys, *argv):
    status = cli.main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_compute_json(capsys):
    status, out, _ = _run(capsys, "compute", "D(10)", "--format", "json")
    assert status == 0
    (row,) = json.loads(out)
    assert row["group_spec"] == "D(10)"
    assert (row["n_cent"], row["n_2cent"]) == (7, 7)


def test_compute_canonicalises_specs(capsys):
    status, out, _ = _run(
        capsys, "compute", " prod( S(3), C(2) ) ", "--format", "csv"
    )
    assert status == 0
    assert out.splitlines()[1].startswith('"prod(S(3),C(2))",12,')


@pytest.mark.parametrize(
    "argv",
    [
        ["compute", "C(1)"],
        ["compute", "C(5"],
        ["compute", "D(5)"],
        ["compute", "S(3)", "--order-cap", "1"],
        ["compute", "C(25000)", "--order-cap", "25000"],
        ["verify", "--theorems", "thm9.9"],
        ["verify", "--groups", "C(99)"],
        ["verify", "--jobs", "0"],
        ["catalog", "--format", "xml"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    status, out, _ = _run(capsys, *argv)
    assert status == 2
    assert out == ""


def test_parse_error_message(capsys):
    _, _, err = _run(capsys, "compute", "C(5")
    assert "C(5: expected ')'" in err
    assert "position 3" in err


def test_order_cap_from_environment(capsys, monkeypatch):
    monkeypatch.setenv(ENV_ORDER_CAP, "5")
    status, _, err = _run(capsys, "compute", "S(3)")
    assert status == 2
    assert "exceeds cap 5" in err
    # the flag wins over the environment
    status, _, _ = _run(capsys, "compute", "S(3)", "--order-cap", "10")
    assert status == 0


def test_verify_subset(capsys):
    status, out, _ = _run(
        capsys,
        "verify",
        "--theorems",
        "thm2.4,lem2.1",
        "--groups",
        "S(3),D(8)",
        "--groups",
        "C(2)",
        "--jobs",
        "1",
        "--format",
        "json",
    )
    assert status == 0
    reports = json.loads(out)
    assert [r["theorem_id"] for r in reports] == ["lem2.1", "thm2.4"]
    assert reports[1]["passed"] == 3


def test_verify_failures_exit_one(capsys, monkeypatch):
    def broken(text):
        return [Outcome(text, Status.FAILED, "x=1", "x=2")]

    monkeypatch.setitem(
        VERIFIERS,
        "lem2.1",
        dataclasses.replace(VERIFIERS["lem2.1"], check=broken),
    )
    status, out, _ = _run(
        capsys,
        "verify",
        "--theorems",
        "lem2.1",
        "--groups",
        "S(3)",
        "--jobs",
        "1",
    )
    assert status == 1
    assert "FAIL lem2.1 S(3): expected x=1, got x=2" in out


def test_verify_output_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    status, out, _ = _run(
        capsys,
        "verify",
        "--theorems",
        "lem2.2",
        "--groups",
        "S(3)",
        "--jobs",
        "1",
        "--format",
        "json",
        "--output",
        str(target),
    )
    assert status == 0
    assert out == ""
    assert json.loads(target.read_text())[0]["passed"] == 1


def test_repeated_runs_are_identical(capsys):
    argv = [
        "verify",
        "--theorems",
        "cor2.6,thm2.18",
        "--groups",
        "S(3),C(2),T(2)",
        "--format",
        "json",
    ]
    first = _run(capsys, *argv, "--jobs", "1")
    second = _run(capsys, *argv, "--jobs", "2")
    assert first[0] == second[0] == 0
    assert first[1] == second[1]


def test_catalog_csv(capsys):
    status, out, _ = _run(capsys, "catalog", "--format", "csv")
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == "name,spec,order,alias,note"
    assert "PSL2(5),PSL2(5),60,A(5)," in lines


def test_experiment_text(capsys):
    status, out, _ = _run(capsys, "experiment", "--order-cap", "100")
    assert status == 0
    assert "A(5)" in out
    assert out.endswith("pairwise distinct\n")


def test_help_exits_zero(capsys):
    assert cli.main(["--help"]) == 0
    assert "compute" in capsys.readouterr().out


def test_order_cap_above_element_cap_is_a_usage_error(capsys, monkeypatch):
    monkeypatch.setenv(ENV_ORDER_CAP, "25000")
    status, out, err = _run(capsys, "compute", "C(25000)")
    assert status == 2
    assert out == ""
    assert "Traceback" not in err
