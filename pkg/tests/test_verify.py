import json

from h3dunkl import verify as vf
from h3dunkl.config import VerifyConfig


def test_every_check_has_unique_id_and_anchor():
    seen = set()
    for name, make in vf.SUITES.items():
        for check in make(VerifyConfig()):
            assert check.id not in seen
            assert check.anchor
            seen.add(check.id)


def test_aliases_expand():
    assert vf.expand("group") == ["group"]
    assert set(vf.expand("all")) == set(vf.SUITES)
    assert "eigen" in vf.expand("waves")


def test_slow_checks_are_skipped_by_default():
    report = vf.run_suite("macdonald", VerifyConfig())
    statuses = {r.id: r.status for r in report.results}
    assert statuses["macdonald.symbolic"] == "skipped-slow"
    assert statuses["macdonald.kappa0"] == "pass"
    assert report.passed


def test_exceptions_become_errors():
    def boom():
        raise RuntimeError("bad")

    report = vf.run_checks("demo", [vf.Check("demo.boom", "raises", boom)])
    assert not report.passed
    assert report.failures[0].status == "error"
    assert "RuntimeError" in report.failures[0].witness["exception"]


def test_report_serialisation():
    report = vf.run_suite("group")
    data = json.loads(report.to_json())
    assert data["suite"] == "group" and data["passed"]
    assert "group.census" in report.to_text()


def test_fast_suites_pass():
    for name in ("dunkl", "kappa0", "eigen"):
        report = vf.run_suite(name)
        assert report.passed, report.to_text()
