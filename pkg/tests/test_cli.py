import json
import subprocess
import sys

import pytest

from qsolve.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


FIELD = ["--p", "2", "--n", "6", "--k", "2"]


def test_solve(capsys):
    code, doc = call(capsys, "solve", "--p", "3", "--n", "2", "--k", "1", "--a", "1")
    assert code == 0
    assert list(doc)[:2] == ["class", "roots"]
    assert doc["class"] == "one" and doc["roots"] == ["1"]
    assert doc["field"] == {"p": 3, "n": 2, "k": 1, "d": 1, "m": 2, "modulus": [1, 0, 1]}


def test_solve_full_and_coeffs(capsys):
    code, doc = call(capsys, "solve", *FIELD, "--coeffs", "1")
    assert code == 0 and doc["class"] == "full" and len(doc["roots"]) == 5
    assert doc["witness_u"] is not None
    assert doc["roots"] == sorted(doc["roots"], key=int)


def test_solve_zeta_path(capsys):
    _, plain = call(capsys, "solve", "--p", "2", "--n", "4", "--k", "2", "--a", "1")
    _, zeta = call(capsys, "solve", "--p", "2", "--n", "4", "--k", "2", "--a", "1", "--zeta-path")
    assert plain["roots"] == zeta["roots"] == ["6", "7"]


def test_census(capsys):
    code, doc = call(capsys, "census", "--p", "2", "--n", "4", "--k", "2")
    assert code == 0
    assert (doc["M0"], doc["M1"], doc["M2"], doc["Mfull"]) == (6, 4, 5, 0)
    assert all(doc["checks"].values())
    code, oracle = call(capsys, "census", "--p", "2", "--n", "4", "--k", "2", "--mode", "oracle")
    assert oracle["M0"] == 6 and oracle["mode"] == "oracle"


def test_param_and_invert(capsys):
    code, doc = call(capsys, "invert", *FIELD, "--a", "1")
    assert code == 0
    u = doc["u"]
    code, doc = call(capsys, "param", *FIELD, "--u", u)
    assert code == 0 and doc["a"] == "1" and len(doc["roots"]) == 5


def test_param_small_subfield(capsys):
    from qsolve.gf import FieldSpec, field_create

    gf4 = field_create(FieldSpec(2, 6, 2)).subfield_elements(2)
    for u in gf4:
        code, doc = call(capsys, "param", *FIELD, "--u", str(u))
        assert code == 1 and doc["error"] == "UInSmallSubfield"


def test_domain_errors(capsys):
    cases = [
        (["invert", "--p", "3", "--n", "2", "--k", "1", "--a", "1"], "NotFullSplit"),
        (["solve", "--p", "3", "--n", "2", "--k", "1", "--a", "0"], "ZeroA"),
        (["solve", "--p", "3", "--n", "2", "--k", "1", "--a", "9"], "InvalidElement"),
        (["solve", "--p", "6", "--n", "2", "--k", "1", "--a", "1"], "NonPrimeP"),
        (["solve", "--p", "2", "--n", "4", "--k", "2", "--a", "1", "--modulus", "1,0,1,0,1"], "BadModulus"),
    ]
    for argv, err in cases:
        code, doc = call(capsys, *argv)
        assert code == 1
        assert doc["error"] == err and doc["detail"]


def test_limit_from_env(capsys, monkeypatch):
    monkeypatch.setenv("QSOLVE_MAX_Q", "32")
    code, doc = call(capsys, "census", *FIELD)
    assert code == 1 and doc["error"] == "LimitExceeded"


def test_usage_errors(capsys):
    assert run(["solve", "--p", "2"]) == 2
    assert run(["frobnicate"]) == 2
    assert run(["solve", "--p", "2", "--n", "4", "--k", "2", "--a", "1", "--coeffs", "1"]) == 2
    assert run(["solve", "--p", "2", "--n", "4", "--k", "2", "--coeffs", "x,y"]) == 2
    capsys.readouterr()


def test_modulus_override(capsys):
    code, doc = call(capsys, "solve", "--p", "2", "--n", "4", "--k", "2", "--a", "1", "--modulus", "1,0,0,1,1")
    assert code == 0 and doc["field"]["modulus"] == [1, 0, 0, 1, 1]
    assert doc["class"] == "two"


def test_identities(capsys):
    code, doc = call(capsys, "identities", *FIELD)
    assert code == 0 and doc["ok"] and doc["selection"] == "exhaustive" and doc["checked"] == 63
    code, doc = call(capsys, "identities", *FIELD, "--samples", "20", "--seed", "3", "--rmax", "5")
    assert code == 0 and doc["checked"] == 20 and doc["r_max"] == 5


def test_oracle_check(capsys):
    code, doc = call(capsys, "oracle-check", "--p", "3", "--n", "3", "--k", "1")
    assert code == 0 and doc == {"status": "ok", "checked": 26, "field": doc["field"]}


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", *FIELD, "--a", "1"],
        ["census", *FIELD],
        ["identities", *FIELD, "--samples", "30", "--seed", "7"],
    ],
)
def test_byte_identical_across_processes(argv):
    cmd = [sys.executable, "-m", "qsolve", *argv]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first.endswith(b"\n")
    json.loads(first)
