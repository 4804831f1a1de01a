"""Defining-relation defects and the verification suite driver."""

import json

import pytest
from fractions import Fraction

from iyang import (
    GaussRat,
    ParameterMismatch,
    PElem,
    Poly,
    RELATION_IDS,
    RepContext,
    WeightVec,
    build_defect,
    enumerate_tasks,
    report_to_json,
    run_suite,
    verify_task,
)


@pytest.fixture(scope="module")
def ctx11():
    return RepContext(1, 1)


def unit(ctx, entries, poly=None):
    v = WeightVec(ctx.n, entries)
    return PElem.from_component(v, poly if poly is not None else Poly.one(ctx.d))


def test_relation_registry():
    assert RELATION_IDS == (
        "HH",
        "HTAU0",
        "HTAU-R",
        "H0B",
        "H1B",
        "HRB2",
        "BB-MIXED",
        "SERRE-CIJ0",
        "SERRE-CIJ1",
        "SERRE-TAU",
        "SERRE-TAU-REDUCED",
    )


def test_enumerate_tasks_counts(ctx11):
    tasks = enumerate_tasks(ctx11, rmax=3, serre_max=2)
    assert len(tasks) == 244
    by_relation = {}
    for rel, params in tasks:
        by_relation.setdefault(rel, 0)
        by_relation[rel] += 1
    assert by_relation["HTAU0"] == 2
    assert by_relation["SERRE-TAU-REDUCED"] == 2
    # HH upper triangle with r <= s on the diagonal pairs
    assert by_relation["HH"] == 2 * 10 + 1 * 16


def test_defect_zero_simple(ctx11):
    # [h_{1,0}, b_{1,r}] = 3 b_{1,r} at this rank: the defect vanishes
    defect = build_defect(ctx11, "H0B", {"i": 1, "j": 1, "r": 1})
    for v in ctx11.weights():
        for e in ctx11.basis(v, 2):
            assert defect(e).is_zero()


def test_defect_zero_serre_reduced(ctx11):
    defect = build_defect(ctx11, "SERRE-TAU-REDUCED", {"i": 1})
    for v in ctx11.weights():
        for e in ctx11.basis(v, 3):
            assert defect(e).is_zero()


def test_defect_zero_bb_mixed(ctx11):
    defect = build_defect(ctx11, "BB-MIXED", {"i": 1, "j": 2, "r": 0, "s": 0})
    for v in ctx11.weights():
        for e in ctx11.basis(v, 2):
            assert defect(e).is_zero()


def test_defect_param_validation(ctx11):
    with pytest.raises(ParameterMismatch):
        build_defect(ctx11, "SERRE-CIJ0", {"i": 1, "j": 2, "r": 0, "s": 0})
    with pytest.raises(ParameterMismatch):
        build_defect(ctx11, "SERRE-CIJ1", {"i": 1, "j": 2, "k1": 0, "k2": 0, "r": 0})
    with pytest.raises(ParameterMismatch):
        build_defect(ctx11, "SERRE-TAU", {"i": 7, "k1": 0, "k2": 0, "r": 0})
    with pytest.raises(ParameterMismatch):
        build_defect(ctx11, "NO-SUCH", {})
    with pytest.raises(ParameterMismatch):
        build_defect(ctx11, "HH", {"i": 1, "j": 9, "r": 0, "s": 0})


def test_verify_task_pass(ctx11):
    res = verify_task(ctx11, "HTAU0", {"i": 1}, D=2)
    assert res.status == "pass"
    assert res.witness is None
    assert res.json_entry() == {
        "relation": "HTAU0",
        "params": {"i": 1},
        "status": "pass",
    }


def test_verify_task_fail_has_witness():
    bad = RepContext(1, 1, mutation="b-drop-imaginary-unit")
    res = verify_task(bad, "BB-MIXED", {"i": 1, "j": 2, "r": 0, "s": 0}, D=2)
    assert res.status == "fail"
    assert res.witness is not None
    assert "component" in res.witness and "poly" in res.witness
    # the witness is not leaked into the canonical report entry
    assert set(res.json_entry()) == {"relation", "params", "status"}


def test_run_suite_small_green():
    report, results = run_suite(1, 1, rmax=2, D=2)
    assert report["summary"]["fail"] == 0
    assert report["summary"]["pass"] == len(report["results"]) == len(results)
    assert report["suite"] == {"n": 1, "d": 1, "rmax": 2, "deg": 2}
    for entry in report["results"]:
        assert entry["status"] == "pass"


def test_run_suite_relation_filter():
    report, _ = run_suite(1, 1, rmax=1, D=1, relations=["HTAU0", "HTAU-R"])
    assert {e["relation"] for e in report["results"]} == {"HTAU0", "HTAU-R"}


def test_run_suite_mutation_fails():
    report, _ = run_suite(
        1, 1, rmax=1, D=2, mutation="b-drop-imaginary-unit",
        relations=["BB-MIXED"],
    )
    assert report["summary"]["fail"] > 0


def test_report_json_canonical():
    report, _ = run_suite(1, 1, rmax=1, D=1, relations=["HTAU0"])
    text = report_to_json(report)
    assert text.endswith("\n")
    assert json.loads(text) == report
    # byte-identical across repeated runs
    report2, _ = run_suite(1, 1, rmax=1, D=1, relations=["HTAU0"])
    assert report_to_json(report2) == text


def test_suite_results_deterministic_order():
    r1, _ = run_suite(1, 1, rmax=2, D=1, relations=["HH", "H0B"])
    r2, _ = run_suite(1, 1, rmax=2, D=1, relations=["HH", "H0B"])
    assert r1["results"] == r2["results"]


def test_worker_pool_matches_sequential(monkeypatch):
    sequential, _ = run_suite(1, 1, rmax=2, D=2)
    monkeypatch.setenv("IYANG_THREADS", "3")
    pooled, results = run_suite(1, 1, rmax=2, D=2)
    assert report_to_json(pooled) == report_to_json(sequential)
    assert all(r.status == "pass" for r in results)


def test_worker_pool_carries_witnesses(monkeypatch):
    monkeypatch.setenv("IYANG_THREADS", "2")
    report, results = run_suite(
        1, 1, rmax=1, D=2, mutation="b-drop-imaginary-unit",
        relations=["BB-MIXED"],
    )
    assert report["summary"]["fail"] > 0
    bad = [r for r in results if r.status == "fail"]
    assert bad and bad[0].witness is not None
