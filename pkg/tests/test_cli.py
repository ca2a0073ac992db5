"""Command-line interface: flags, exit codes, JSON determinism."""

import json

import pytest

from polardeg.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_polar_single_level(capsys):
    code, out, _ = run_cli(capsys, "polar", "--poly", "x0*x1*x2", "--i", "0")
    assert code == 0
    assert "deg_0 = 1" in out


def test_polar_profile_json(capsys):
    code, out, _ = run_cli(capsys, "polar", "--poly", "x0^2+x1^2+x2^2", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["degrees"] == [1, 1]
    assert doc["status"] == "ok"
    assert doc["input"]["nvars"] == 3


def test_polar_json_byte_identical(capsys):
    argv = ["polar", "--poly", "x0^3+x1^3+x2^3", "--i", "0", "--json", "--seed", "11"]
    _, first, _ = run_cli(capsys, *argv)
    _, second, _ = run_cli(capsys, *argv)
    assert first == second


def test_polar_rejects_zero_total_degree(capsys):
    code, _, err = run_cli(capsys, "polar", "--poly", "x0", "--poly", "x1",
                           "--weights", "1,-1")
    assert code == 1
    assert "total weighted degree" in err


def test_polar_rejects_nonreduced_factors(capsys):
    # powers of variables violate the squarefree-factor contract up front
    code, _, err = run_cli(capsys, "polar", "--poly", "x0^2", "--poly", "x1^3",
                           "--weights", "1,-2/3")
    assert code == 1
    assert "squarefree" in err


def test_polar_rejects_zero_weight(capsys):
    code, _, err = run_cli(capsys, "polar", "--poly", "x0", "--poly", "x1",
                           "--weights", "1,0")
    assert code == 1
    assert "nonzero" in err


def test_polar_parse_error_is_reported(capsys):
    code, _, err = run_cli(capsys, "polar", "--poly", "x0 x1")
    assert code == 1
    assert "column" in err


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["polar", "--i", "0", "--profile", "--poly", "x0"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["unknown-verb"])
    assert exc.value.code == 2


def test_gauss_defaults_and_k(capsys):
    code, out, _ = run_cli(capsys, "gauss", "--poly", "x0*x1*x2", "--k", "2", "--i", "0")
    assert code == 0
    assert "degree 2" in out        # the attached triangle foliation
    assert "e^2_0 = 2" in out


def test_gauss_foliation_from_spec_string(capsys):
    code, out, _ = run_cli(capsys, "gauss", "--foliation-from", "x0; x1; x2; 1,1,1",
                           "--k", "3", "--i", "1", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["value"] == 3
    assert doc["command"] == "gauss(k=3, i=1)"


def test_foliation_sing_degree(capsys):
    code, out, _ = run_cli(capsys, "foliation", "--sing-degree",
                           "--poly", "x0", "--poly", "x1", "--poly", "x2",
                           "--weights", "1,1,-2", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["value"] == 3 and doc["degree"] == 1


def test_foliation_requires_descent(capsys):
    code, _, err = run_cli(capsys, "foliation", "--sing-degree",
                           "--poly", "x0", "--poly", "x1", "--poly", "x2",
                           "--weights", "1,1,1")
    assert code == 1
    assert "sum to zero" in err


def test_env_pair_cap_is_honored(capsys, monkeypatch):
    monkeypatch.setenv("POLARDEG_MAX_PAIRS", "2")
    code, _, err = run_cli(capsys, "polar", "--poly", "x0^4+x1^4+x2^4", "--i", "0")
    assert code == 1
    assert "cap" in err


def test_verify_dolgachev(capsys):
    code, out, _ = run_cli(capsys, "verify", "dolgachev")
    assert code == 0
    lines = [l for l in out.strip().splitlines()]
    assert len(lines) == 6 and all(l.startswith("PASS") for l in lines)


def test_verify_resonance_single_k_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "resonance", "--k", "2", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "ok"
    claims = {o["claim"] for o in doc["outcomes"]}
    assert claims == {"resonance-example", "resonance-singular-degree"}
