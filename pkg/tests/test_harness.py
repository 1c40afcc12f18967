import pytest

from invpaths.harness import (
    CheckSpec,
    default_specs,
    matches_form_201,
    run_checks,
)
from invpaths.inversions import InversionSequence, contains_pattern, enumerate_is


def test_matches_form_201_trivial():
    assert not matches_form_201(InversionSequence((0, 0)))
    assert matches_form_201(InversionSequence((0, 1, 0, 1)))


def test_matches_form_201_equivalence():
    # on {102,201}-avoiders the form characterises 101 containment
    for n in range(2, 7):
        for e in enumerate_is(n, ["102", "201"]):
            assert matches_form_201(e) == contains_pattern(e, "101"), e


def test_run_checks_small():
    specs = [
        CheckSpec.make("bijection-phi", 4),
        CheckSpec.make("bijection-psi", 4),
        CheckSpec.make("bijection-M", 4),
        CheckSpec.make("bijection-composed", 4),
        CheckSpec.make("tiling", 5),
        CheckSpec.make("formula-102", 6),
        CheckSpec.make("formula-pair", 6, tau="012"),
        CheckSpec.make("dyck-lemma", 6),
        CheckSpec.make("lf-class", 4, tau="210"),
        CheckSpec.make("identity", 10, tag="CATALAN_FIX"),
    ]
    report = run_checks(specs)
    assert report.passed
    assert all(r.status == "pass" for r in report.results)
    assert [r.spec.family for r in report.results] == [s.family for s in specs]


def test_guard_violation_fails_that_check_only():
    report = run_checks(
        [CheckSpec.make("bijection-psi", 9), CheckSpec.make("formula-102", 5)]
    )
    assert not report.passed
    assert report.results[0].status == "fail"
    assert "guard" in report.results[0].witness
    assert report.results[1].status == "pass"


def test_unknown_options_fail_cleanly():
    report = run_checks([CheckSpec.make("formula-pair", 4, tau="013")])
    assert report.results[0].status == "fail"


def test_report_deterministic_and_json_stable():
    specs = [CheckSpec.make("formula-102", 5), CheckSpec.make("dyck-lemma", 5)]
    first = run_checks(specs).to_json()
    second = run_checks(specs).to_json()
    assert first == second  # timing excluded from the serialised report
    assert '"seconds"' not in first


def test_composed_statistic_note():
    report = run_checks([CheckSpec.make("bijection-composed", 3)])
    assert report.passed
    notes = report.results[0].notes
    assert any("rank+1 holds on all" in n for n in notes)
    assert any("block(P) = rank fails" in n for n in notes)


def test_default_specs_cover_everything():
    families = [s.family for s in default_specs()]
    assert families.count("formula-pair") == 9
    assert families.count("identity") == 12
    for fam in (
        "bijection-phi",
        "bijection-psi",
        "bijection-M",
        "bijection-composed",
        "tiling",
        "formula-102",
        "formula-201-split",
        "formula-A-subset",
        "dyck-lemma",
    ):
        assert fam in families
    assert families.count("lf-class") == 2


@pytest.mark.parametrize("tau", ["210", "110"])
def test_lf_class_check(tau):
    report = run_checks([CheckSpec.make("lf-class", 4, tau=tau)])
    assert report.passed
