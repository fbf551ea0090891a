import json
import os

import pytest

from ivhs.cli import main
from ivhs.nongenericity import Certificate

from conftest import FIXTURES

P4_FAN = os.path.join(FIXTURES, "p4.fan")
SIMPLEX = os.path.join(FIXTURES, "simplex4.json")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_ehrhart(capsys):
    code, out, _ = run(capsys, "ehrhart", "--polytope", SIMPLEX, "--json")
    assert code == 0
    assert json.loads(out)["coefficients"] == ["1", "25/12", "35/24", "5/12", "1/24"]
    code, out, _ = run(capsys, "ehrhart", "--polytope", SIMPLEX)
    assert code == 0 and "1/24" in out


def test_check_toric_json(capsys):
    argv = ["check", "toric", "--fan", P4_FAN, "--divisor", "1,0,0,0,0", "--t", "6",
            "--seed", "1", "--json"]
    code, out, _ = run(capsys, *argv)
    assert code == 0
    cert = Certificate.from_json(out)
    assert cert.verdict == "NonGeneric"
    assert cert.to_json() == out
    code, again, _ = run(capsys, *argv)
    assert again == out


def test_check_wps_not_cartier(capsys):
    code, _, err = run(capsys, "check", "wps", "--weights", "1,1,1,1,2", "--d", "7")
    assert code == 3 and "NotCartier" in err


def test_dimension_too_small_is_hypothesis_violation(capsys):
    code, _, err = run(capsys, "check", "wps", "--weights", "1,1,1,2", "--d", "4")
    assert code == 3 and "DimensionTooSmall" in err


def test_check_ci(capsys):
    code, out, _ = run(capsys, "check", "ci", "--n", "4", "--degrees", "5", "--json")
    assert code == 0 and json.loads(out)["h_next"] == "101"
    code, _, err = run(capsys, "check", "ci", "--n", "6", "--degrees", "2,2,2")
    assert code == 3 and "ModuliIdentificationUnavailable" in err


def test_hodge_and_moduli(capsys):
    code, out, _ = run(capsys, "hodge", "--fan", P4_FAN, "--divisor", "1,0,0,0,0", "--t", "5",
                       "--json")
    assert code == 0
    assert json.loads(out) == {"n": "4", "t": "5", "h_top": "1", "h_next": "101", "mu": "101"}
    code, out, _ = run(capsys, "moduli", "--weights", "1,1,1,1,2", "--d", "8", "--json")
    assert code == 0 and json.loads(out)["mu"] == "268"
    code, out, _ = run(capsys, "hodge", "--n", "4", "--degrees", "5")
    assert code == 0 and "[1, 101, 101, 1]" in out


def test_scan(capsys):
    code, out, _ = run(capsys, "scan", "--fan", P4_FAN, "--divisor", "1,0,0,0,0", "--t", "5..8",
                       "--json")
    assert code == 0
    data = json.loads(out)
    assert data["first_nongeneric_t"] == "6"
    assert [c["verdict"] for c in data["certificates"]] == \
        ["Inconclusive", "NonGeneric", "NonGeneric", "NonGeneric"]


def test_symm(capsys):
    code, out, _ = run(capsys, "symm", "--g0", "2", "--g1", "5", "--g2", "3", "--trials", "5",
                       "--json")
    assert code == 0
    data = json.loads(out)
    assert data["d"] == "9" and data["failures"] == "0" and data["threshold"] == "9"
    code, _, _ = run(capsys, "symm", "--g0", "2", "--g1", "5", "--g2", "3", "--d", "4")
    assert code == 2


def test_input_errors(capsys, tmp_path):
    code, _, err = run(capsys, "check", "toric", "--fan", str(tmp_path / "missing.fan"),
                       "--divisor", "1,0,0,0,0")
    assert code == 2 and "cannot read" in err
    bad = tmp_path / "bad.fan"
    bad.write_text('{"rays": [[1, 0],\n [0, 1]], "max_cones": [[0, 1]]')
    code, _, err = run(capsys, "check", "toric", "--fan", str(bad), "--divisor", "1,0")
    assert code == 2 and "line 2" in err
    bad.write_text(json.dumps({"rays": [[1, 0], [0, 1]]}))
    code, _, err = run(capsys, "check", "toric", "--fan", str(bad), "--divisor", "1,0")
    assert code == 2 and "max_cones" in err
    bad.write_text(json.dumps({"rays": [[1, 0], [0, "x"]], "max_cones": [[0, 1]]}))
    code, _, err = run(capsys, "check", "toric", "--fan", str(bad), "--divisor", "1,0")
    assert code == 2 and "rays[1]" in err
    code, _, _ = run(capsys, "check", "toric", "--fan", P4_FAN, "--divisor", "a,b")
    assert code == 2
    code, _, _ = run(capsys, "frobnicate")
    assert code == 2


def test_internal_failure_exit_code(capsys, monkeypatch):
    import ivhs.cli as cli

    def boom(*args, **kwargs):
        raise RuntimeError("boom")

    monkeypatch.setattr(cli, "check_toric", boom)
    code, _, err = run(capsys, "check", "toric", "--fan", P4_FAN, "--divisor", "1,0,0,0,0")
    assert code == 1 and "boom" in err
