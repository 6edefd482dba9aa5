"""Contract of the check-suite driver."""

import pytest

from hyperzeta.verify import run


def test_report_shape_and_counts():
    report = run("qcomb", [3], 0)
    checks = report["checks"]
    assert report["counts"]["total"] == len(checks)
    assert report["counts"]["passed"] + report["counts"]["failed"] == len(checks)
    assert report["ok"] == (report["counts"]["failed"] == 0)
    assert [(c["suite"], c["id"]) for c in checks] == sorted(
        (c["suite"], c["id"]) for c in checks
    )


def test_deterministic_for_fixed_seed():
    assert run("weights", [3, 5], 11) == run("weights", [3, 5], 11)


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run("bogus", [3], 0)


def test_repn_suite_covers_four_ell_blocks():
    report = run("repn", [3], 0)
    by_id = {c["id"]: c for c in report["checks"]}
    assert by_id["tensor-factorization"]["count"] == 13
    assert report["ok"]
