import dataclasses
import json

import pytest

from strangedual import singularities as sing
from strangedual import verify as vf
from strangedual.errors import UnknownNameError

DIVISOR_CLAUSE = "divisor graph signature"


def corrupted_table(name, **changes):
    return [dataclasses.replace(r, **changes) if r.name == name else r for r in sing.table()]


@pytest.fixture(scope="module")
def report():
    return vf.run_all()


def test_e12_record_checks():
    results = {r.check_id: r for r in vf.verify_record("E12")}
    assert list(results) == list(vf.ROW_CHECKS)
    for cid in ("C1", "C2", "C3", "C4", "C5", "C6", "C8"):
        assert results[cid].status == vf.PASS, results[cid].details
    c7 = results["C7"]
    assert c7.data["that_delta"] == {"signature": [2, 0, 10], "sturm": [2, 0, 10]}
    assert c7.data["that_gamma"] == {"signature": [2, 0, 10], "sturm": [2, 0, 10]}
    # the divisor clause of C7 cannot hold: NS of a K3 has one positive square
    assert c7.data["divisor"] == {"signature": [1, 0, 9]}
    assert c7.status == vf.FAIL and c7.details.startswith(DIVISOR_CLAUSE)


@pytest.mark.parametrize("name", [r.name for r in sing.table()])
def test_milnor_check_passes_every_row(name):
    (c1,) = vf.verify_record(name, checks=("C1",))
    assert c1.status == vf.PASS


def test_corrupted_dolgachev_fails_duality():
    records = corrupted_table("E13", dolgachev=(2, 4, 6))
    (c2,) = vf.verify_record("E13", records, checks=("C2",))
    assert c2.status == vf.FAIL
    assert "delta (2, 4, 6)" in c2.details


def test_verify_record_unknown_name():
    with pytest.raises(UnknownNameError):
        vf.verify_record("X99")


def test_pair_e13_z11():
    (r,) = vf.verify_pair("E13")
    assert r.subject == "E13/Z11"
    assert r.status == vf.PASS
    assert abs(r.data["that_delta"]["det"]) == abs(r.data["that_gamma"]["det"]) == 2


def test_pair_self_dual():
    (r,) = vf.verify_pair("E12")
    assert r.subject == "E12" and r.status == vf.PASS


def test_mismatched_synthetic_pair_fails():
    r = vf.lattice_duality_check("synthetic", (2, 3, 7), (2, 3, 8))
    assert r.status == vf.FAIL
    assert "|det| 1 vs 2" in r.details


def test_report_counts(report):
    subjects = {r.subject for r in report.results if r.check_id != "C9"}
    assert len(subjects) == 14
    pairs = [r.subject for r in report.results if r.check_id == "C9"]
    assert pairs == ["E12", "E13/Z11", "E14/Q10", "Z12", "W12", "Z13/Q11", "W13/S11", "Q12", "S12", "U12"]


def test_report_ordering(report):
    names = [r.name for r in sing.table()]
    rows = [(names.index(r.subject), vf.CHECK_IDS.index(r.check_id))
            for r in report.results if r.check_id != "C9"]
    assert rows == sorted(rows)
    assert all(r.check_id == "C9" for r in report.results[len(rows):])


def test_clean_build_fails_only_on_divisor_definiteness(report):
    # Every other check is clean; C7's negative-definiteness clause is false for all rows.
    assert report.summary == {"pass": 108, "fail": 14, "skipped": 0}
    assert all(r.check_id == "C7" and r.details.startswith(DIVISOR_CLAUSE) for r in report.failures)
    assert all(";" not in r.details for r in report.failures)


def test_run_all_deterministic(report):
    assert vf.run_all().to_json() == report.to_json()


def test_report_json_schema(report):
    doc = json.loads(report.to_json())
    assert list(doc) == ["version", "results", "summary"]
    assert set(doc["results"][0]) == {"check_id", "subject", "status", "details", "data"}
    assert doc["summary"] == report.summary


def test_filter_single_check():
    rep = vf.run_all(check="C9")
    assert len(rep.results) == 10 and all(r.check_id == "C9" for r in rep.results)
    assert rep.failures == []


def test_filter_rejects_unknown_check():
    with pytest.raises(ValueError):
        vf.run_all(check="C10")


def test_check_result_registry():
    with pytest.raises(ValueError):
        vf.CheckResult("C0", "E12", vf.PASS, "")


def test_small_dmax_fails_monodromy():
    (c8,) = vf.verify_record("E12", d_max=41, checks=("C8",))
    assert c8.status == vf.FAIL
