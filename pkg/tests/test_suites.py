from typing import Dict, List

import pytest

from qjacobi import ReportRecord, Workbench
from qjacobi.models.form import E4
from qjacobi.workbench import SUITE_NAMES


@pytest.fixture(scope="module")
def bench() -> Workbench:
    return Workbench(seed=1)


@pytest.fixture(scope="module")
def suite_records(bench: Workbench) -> Dict[str, List[ReportRecord]]:
    return {name: bench.verify(name) for name in SUITE_NAMES}


def _failures(records: List[ReportRecord]) -> List[dict]:
    return [r.to_dict() for r in records if not r.passed]


def _results(records: List[ReportRecord], check: str) -> List[dict]:
    return [r.result for r in records if r.inputs["check"] == check]


@pytest.mark.parametrize("name", SUITE_NAMES)
def test_suite_passes(suite_records: Dict[str, List[ReportRecord]], name: str) -> None:
    records = suite_records[name]
    assert records
    assert all(r.command == "verify" and r.inputs["suite"] == name for r in records)
    assert all(r.seed == 1 for r in records)
    assert _failures(records) == []


def test_records_are_sorted(suite_records: Dict[str, List[ReportRecord]]) -> None:
    records = suite_records["dimensions"]
    assert [r.sort_key for r in records] == sorted(r.sort_key for r in records)


def test_analytic_suite_is_deterministic() -> None:
    first = Workbench(seed=4).verify("analytic")
    second = Workbench(seed=4).verify("analytic")
    assert [r.to_dict() for r in first] == [r.to_dict() for r in second]


def test_numeric_records_carry_residuals(
    bench: Workbench, suite_records: Dict[str, List[ReportRecord]]
) -> None:
    records = suite_records["analytic"]
    transformation = [r for r in records if r.inputs["check"] == "transformation"]
    # five generators and ten random forms against six group elements
    assert len(transformation) == 15 * 6
    assert all(r.residual is not None and r.residual <= bench.tolerance for r in transformation)


def test_identities_cover_required_sample_sizes(
    suite_records: Dict[str, List[ReportRecord]],
) -> None:
    records = suite_records["identities"]
    assert {r["pairs"] for r in _results(records, "leibniz")} == {50}
    assert {r["forms"] for r in _results(records, "q-recurrences")} == {20}
    assert {r["forms"] for r in _results(records, "depth-bounds")} == {20}
    commute = [r for r in records if r.inputs["check"] == "commute"]
    assert {r.inputs["generator"] for r in commute} >= {"P", "E1", "random"}
    random_forms = [r for r in commute if r.inputs["generator"] == "random"]
    assert [r.result for r in random_forms] == [{"forms": 20, "failures": 0}]


def test_bracket_suites_cover_required_sample_sizes(
    suite_records: Dict[str, List[ReportRecord]],
) -> None:
    stability = _results(suite_records["stability"], "bracket")
    assert stability and {r["pairs"] for r in stability} == {20}
    star = _results(suite_records["associativity"], "star-associativity")
    assert len(star) == 3
    assert {r["triples"] for r in star} == {20}


def test_exact_record_reports_defect(bench: Workbench) -> None:
    passing = bench.identities.exact("demo", E4 - E4, form="E4")
    failing = bench.identities.exact("demo", E4, form="E4")
    assert passing.passed and passing.result == "0"
    assert not failing.passed and failing.result == "E4"
    assert failing.to_dict()["inputs"] == {"suite": "identities", "check": "demo", "form": "E4"}
