import json

import pytest

from fatpoints.cli import main


@pytest.fixture()
def case_iv_cfg(tmp_path):
    path = tmp_path / "iv.json"
    path.write_text(json.dumps({
        "kind": "distinct",
        "collinear": [[1, 2, 3], [1, 4, 5], [3, 5, 6], [2, 4, 6]],
        "six_on_conic": False}))
    return str(path)


@pytest.fixture()
def a1_cfg(tmp_path):
    path = tmp_path / "a1.json"
    path.write_text(json.dumps({"kind": "nodal", "roots": [[0, 1, -1, 0, 0, 0, 0]]}))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_resolve_worked_example(capsys, case_iv_cfg):
    code, out, _ = run(capsys, "resolve", "--config", case_iv_cfg,
                       "--mult", "2,2,6,2,2,2")
    assert code == 0
    assert "F0 = R[-6] + R[-7] + R[-8]^3 + R[-10]^2" in out
    assert "F1 = R[-8] + R[-9]^3 + R[-11]^2" in out


def test_resolve_json(capsys, case_iv_cfg):
    code, out, _ = run(capsys, "resolve", "--config", case_iv_cfg,
                       "--mult", "2,2,6,2,2,2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["t"] == {"6": 1, "7": 1, "8": 3, "10": 2}
    assert data["s"] == {"8": 1, "9": 3, "11": 2}
    assert data["alpha"] == 6 and data["sigma"] == 10


def test_neg_rows(capsys, case_iv_cfg):
    code, out, _ = run(capsys, "neg", "--config", case_iv_cfg)
    assert code == 0
    assert len(out.strip().splitlines()) == 13


def test_nefgens_counts(capsys, case_iv_cfg):
    code, out, _ = run(capsys, "nefgens", "--config", case_iv_cfg)
    assert code == 0
    assert len(out.strip().splitlines()) == 39
    code, out, _ = run(capsys, "nefgens", "--config", case_iv_cfg, "--raw")
    assert len(out.strip().splitlines()) == 212


def test_catalog_rows(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    assert len(out.strip().splitlines()) == 20


def test_orbit(capsys):
    code, out, _ = run(capsys, "orbit", "1 0 0 0 0 0 0")
    assert code == 0
    assert len(out.strip().splitlines()) == 72
    code, out, _ = run(capsys, "orbit", "3,-1,-1,-1,-1,-1,-1")
    assert len(out.strip().splitlines()) == 1


def test_hilbert(capsys, case_iv_cfg):
    code, out, _ = run(capsys, "hilbert", "--config", case_iv_cfg,
                       "--mult", "2,2,6,2,2,2", "--deg", "10")
    assert code == 0
    lines = out.strip().splitlines()
    assert "6 1" in lines and "10 30" in lines
    assert "alpha 6" in lines and "sigma 10" in lines


def test_verify_ok(capsys, a1_cfg):
    code, out, _ = run(capsys, "verify", "--config", a1_cfg)
    assert code == 0
    assert out.strip().endswith("RESULT ok")


def test_oracle_compare(capsys):
    code, out, _ = run(capsys, "oracle", "--case", "iv",
                       "--mult", "2,2,6,2,2,2", "--deg", "8", "--compare")
    assert code == 0
    assert "dim 11" in out
    assert "MATCH" in out


def test_determinism(capsys, case_iv_cfg):
    _, out1, _ = run(capsys, "nefgens", "--config", case_iv_cfg)
    _, out2, _ = run(capsys, "nefgens", "--config", case_iv_cfg)
    assert out1 == out2
    _, j1, _ = run(capsys, "resolve", "--config", case_iv_cfg,
                   "--mult", "1,1,1,1,1,1", "--json")
    _, j2, _ = run(capsys, "resolve", "--config", case_iv_cfg,
                   "--mult", "1,1,1,1,1,1", "--json")
    assert j1 == j2


def test_verify_all_markings_cli(capsys, tmp_path):
    path = tmp_path / "d4.json"
    path.write_text(json.dumps({"kind": "dynkin", "type": "D4"}))
    code, out, _ = run(capsys, "verify", "--config", str(path), "--all-e0", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True
    assert len(data["markings"]) == 7


def test_nefgens_rejects_non_nef_anticanonical(capsys, tmp_path):
    path = tmp_path / "four.json"
    path.write_text(json.dumps({
        "kind": "distinct", "collinear": [[1, 2, 3, 4]]}))
    code, _, err = run(capsys, "nefgens", "--config", str(path))
    assert code == 1
    assert "anticanonical" in err


def test_validation_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({
        "kind": "distinct", "collinear": [[1, 2, 3], [2, 3, 4]]}))
    code, _, err = run(capsys, "neg", "--config", str(bad))
    assert code == 1
    assert "share 2 points" in err

    code, _, err = run(capsys, "orbit", "1 0 0")
    assert code == 1
    assert "7 integers" in err

    code, _, err = run(capsys, "hilbert", "--config", str(bad),
                       "--mult", "1,1,1,1,1,1")
    assert code == 1

    missing = tmp_path / "nope.json"
    code, _, err = run(capsys, "neg", "--config", str(missing))
    assert code == 1
