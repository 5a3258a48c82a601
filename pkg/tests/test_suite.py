"""Tests for the suite runner and the simple-group experiment."""

import pytest

from centra.report import diff_reports
from centra.suite import (
    UnknownTheorem,
    conjecture_experiment,
    run_suite,
    selected_theorems,
)
from centra.theorems import THEOREM_IDS, SuiteConfig

SMALL = ("S(3)", "D(8)", "C(2)", "A(4)", "T(2)")


def test_selection_follows_registry_order():
    config = SuiteConfig(theorem_ids=("thm2.4", "lem2.1"))
    assert selected_theorems(config) == ("lem2.1", "thm2.4")
    assert selected_theorems(SuiteConfig()) == THEOREM_IDS


def test_unknown_theorem():
    with pytest.raises(UnknownTheorem):
        selected_theorems(SuiteConfig(theorem_ids=("thm9.9",)))


def test_product_subset():
    config = SuiteConfig(theorem_ids=("thm2.4",), catalog_names=SMALL)
    (report,) = run_suite(config)
    assert report.theorem_id == "thm2.4"
    assert (report.instances, report.passed, report.failed) == (10, 10, 0)


def test_order_cap_turns_instances_into_skips():
    config = SuiteConfig(
        theorem_ids=("lem2.1", "lem2.2"),
        catalog_names=("S(3)", "PSL2(7)", "PSL2(8)"),
        order_cap=20,
    )
    for report in run_suite(config):
        assert report.passed == 1
        assert report.skipped == 2
        assert {s.instance for s in report.skipped_instances} == {
            "PSL2(7)",
            "PSL2(8)",
        }


def test_parallel_runs_are_deterministic():
    base = dict(
        theorem_ids=("lem2.1", "thm2.4", "cor2.6", "thm2.18", "sec6.D"),
        catalog_names=SMALL,
    )
    serial = run_suite(SuiteConfig(**base, jobs=1))
    parallel = run_suite(SuiteConfig(**base, jobs=4))
    assert diff_reports(serial, parallel) == []
    assert [r.theorem_id for r in parallel] == list(base["theorem_ids"])


@pytest.mark.slow
def test_full_suite_has_no_failures():
    reports = run_suite(SuiteConfig(jobs=4))
    assert [r.theorem_id for r in reports] == list(THEOREM_IDS)
    failures = {
        r.theorem_id: r.counterexamples for r in reports if not r.ok
    }
    assert failures == {}
    assert sum(r.instances for r in reports) > 0


def test_experiment_on_simple_groups():
    report = conjecture_experiment(
        ["A(5)", "PSL2(5)", "PSL2(7)", "S(4)", "C(5)", "SL2(5)"]
    )
    assert report.values == {"A(5)": 22, "PSL2(7)": 114}
    assert report.duplicates == {"PSL2(5)": "A(5)"}
    assert report.pairwise_distinct
    data = report.as_dict()
    assert data["pairwise_distinct"] is True
    assert data["collisions"] == []


def test_experiment_order_cap():
    report = conjecture_experiment(["A(5)", "PSL2(7)"], order_cap=100)
    assert report.values == {"A(5)": 22}
    assert "PSL2(7)" in report.skipped


@pytest.mark.slow
def test_experiment_over_catalog():
    report = conjecture_experiment()
    assert set(report.values) == {"A(5)", "PSL2(7)", "PSL2(8)"}
    assert report.pairwise_distinct
