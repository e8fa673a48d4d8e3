import pytest

from biquat.verify import SUITES, VerifyReport, run_all, run_suite


def test_every_suite_passes_small():
    for name in SUITES:
        report = run_suite(name, 5, 1)
        assert report.passed, report.format()
        assert set(report.max_residuals) == {c for c, _, _ in SUITES[name]}


def test_run_suite_rejects_bad_input():
    with pytest.raises(ValueError):
        run_suite("su3", 0, 1)
    with pytest.raises(KeyError):
        run_suite("nope", 1, 1)


def test_reports_are_deterministic():
    assert run_suite("table1", 20, 7).format() == run_suite("table1", 20, 7).format()
    assert run_suite("table1", 20, 7).max_residuals != run_suite("table1", 20, 8).max_residuals


def test_table1_suite_example():
    report = run_suite("table1", 50, 7)
    assert report.max_residuals["quat_pi_quat_roundtrip"] < 1e-10


def test_merge_is_order_independent():
    a = VerifyReport("x", 1, 0, {"c": 1e-15, "d": 3e-14}, {"c": 1e-12, "d": 1e-12})
    b = VerifyReport("x", 1, 0, {"c": 2e-15}, {"c": 1e-12})
    ab = VerifyReport("x", 1, 0)
    ab.merge(a)
    ab.merge(b)
    ba = VerifyReport("x", 1, 0)
    ba.merge(b)
    ba.merge(a)
    assert ab.max_residuals == ba.max_residuals == {"c": 2e-15, "d": 3e-14}


def test_format_layout():
    r = VerifyReport("s", 3, 9, {"check": 5e-13}, {"check": 1e-12})
    lines = r.format().splitlines()
    assert lines[:4] == ["suite: s", "samples: 3", "seed: 9", "max_residuals:"]
    assert lines[4].split() == ["check", "5.000e-13", "<", "1e-12", "ok"]
    assert lines[-1] == "pass: true"
    r.max_residuals["check"] = 2e-12
    assert r.format().splitlines()[4].endswith("FAIL")
    assert not r.passed


def test_run_all_covers_every_check():
    report = run_all(2, 3)
    assert len(report.max_residuals) == sum(len(v) for v in SUITES.values())
