import json

import pytest

from h3dunkl import verify as vf
from h3dunkl.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    return code, capsys.readouterr().out


def test_group_text_and_json(capsys):
    code, out = call(capsys, "group")
    assert code == 0 and "120" in out
    code, out = call(capsys, "group", "--format", "json")
    data = json.loads(out)
    assert data["verb"] == "group"
    census = data["result"]["census"]
    assert (census["order"], census["reflections"], census["rotations"], census["improper"]) == (120, 15, 59, 45)


def test_dunkl_on_x1_cubed(capsys):
    code, out = call(capsys, "dunkl", "--poly", "x1^3", "--format", "json")
    assert code == 0
    terms = json.loads(out)["result"]["terms"]
    assert {tuple(t["exponents"]) for t in terms} == {(2, 0, 0), (0, 2, 0), (0, 0, 2)}


def test_poly_file(tmp_path, capsys):
    path = tmp_path / "p.txt"
    path.write_text("x1*x2 + 1\n")
    code, _ = call(capsys, "dunkl", "--op", "laplacian", "--poly-file", str(path))
    assert code == 0


def test_invariant_norm(capsys):
    code, out = call(capsys, "waves", "phi", "--n", "6", "--invariant", "--norm", "--format", "json")
    assert code == 0
    assert json.loads(out)["result"]["closed_form_matches"] is True


def test_pair_verb(capsys):
    code, out = call(capsys, "pair", "--p", "x1", "--q", "x1", "--format", "json")
    assert code == 0 and json.loads(out)["verb"] == "pair"


def test_numeric_pair(capsys):
    code, out = call(
        capsys, "numeric", "pair", "--kappa", "0.5", "--samples", "20000", "--n", "6", "--format", "json"
    )
    assert code == 0
    result = json.loads(out)["result"]
    assert result["stderr"] > 0


@pytest.mark.parametrize(
    "argv",
    [
        ["waves", "q", "--n", "40"],
        ["dunkl", "--poly", "x1^^2"],
        ["dunkl"],
        ["nonsense"],
        ["verify", "no-such-suite"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as info:
        code = run(argv)
        raise SystemExit(code)
    assert info.value.code == 2


def test_verify_group_json(capsys):
    code, out = call(capsys, "verify", "group", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["passed"] is True
    ids = [r["id"] for r in data["suites"][0]["results"]]
    assert "group.census" in ids


def test_verify_failure_exits_1(capsys, monkeypatch):
    failing = lambda cfg: [vf.Check("demo.fail", "always fails", lambda: vf.compare(1, 2))]  # noqa: E731
    monkeypatch.setitem(vf.SUITES, "group", failing)
    code, out = call(capsys, "verify", "group")
    assert code == 1
    assert "demo.fail" in out and "lhs: 1" in out and "rhs: 2" in out
