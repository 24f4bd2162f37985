from __future__ import annotations

import csv
import io
import json

import pytest

from qrm.cli import main


def run(capsys, *argv: str) -> tuple[int, str, str]:
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_tables_quantum_csv(capsys):
    code, out, _ = run(capsys, "tables", "--which", "quantum", "--max-m", "10", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["m", "r", "n", "k", "d"]
    assert len(rows) == 29
    assert [int(r["k"]) for r in rows if r["n"] == "32"] == [30, 20, 0]


def test_tables_classical_small(capsys):
    code, out, _ = run(capsys, "tables", "--which", "classical", "--max-m", "2")
    assert code == 0
    assert out == "m,r,n,k,d\n2,1,4,3,2\n2,0,4,1,4\n"


def test_tables_markdown_grid(capsys):
    code, out, _ = run(capsys, "tables", "--which", "classical", "--max-m", "3", "--format", "md")
    assert code == 0
    assert "| n \\ d | 2 | 4 | 8 |" in out
    assert "| 8 | 7 | 4 | 1 |" in out
    assert "| 4 | 3 | 1 |  |" in out


def test_tables_json(capsys):
    code, out, _ = run(capsys, "tables", "--which", "quantum", "--max-m", "3", "--format", "json")
    assert code == 0
    assert json.loads(out)[0] == {"m": 2, "r": 1, "n": 4, "k": 2, "d": 2}


def test_tables_usage_error(capsys):
    code, _, err = run(capsys, "tables", "--which", "quantum", "--max-m", "1")
    assert code == 2
    assert "max-m" in err


def test_params(capsys):
    assert run(capsys, "params", "--r", "5", "--m", "10", "--quantum")[:2] == (0, "[[1024,252,32]] t=15\n")
    assert run(capsys, "params", "--r", "0", "--m", "3")[:2] == (0, "(8,1,8)\n")
    code, out, err = run(capsys, "params", "--r", "1", "--m", "4", "--quantum")
    assert code == 1 and out == "" and "NotSelfDualNested" in err


def test_matrix_text_format(capsys):
    assert run(capsys, "matrix", "--r", "1", "--m", "2")[:2] == (0, "1111\n0011\n0101\n")


def test_encode(capsys):
    code, out, _ = run(capsys, "encode", "--r", "1", "--m", "2", "--w", "0000", "--basis", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "n": 4,
        "k": 2,
        "basis": 2,
        "w": "0000",
        "terms": [{"v": "0000", "sign": 1}, {"v": "1111", "sign": 1}],
    }
    code, out, _ = run(capsys, "encode", "--r", "1", "--m", "2", "--w", "0000", "--basis", "1")
    terms = json.loads(out)["terms"]
    assert len(terms) == 8 and {t["sign"] for t in terms} == {1}
    code, _, err = run(capsys, "encode", "--r", "1", "--m", "2", "--w", "1000", "--basis", "1")
    assert code == 1 and "NotInCodespace" in err


def test_encode_cap_named(capsys):
    code, _, err = run(capsys, "encode", "--r", "2", "--m", "4", "--w", "0" * 16, "--basis", "1", "--enum-cap", "8")
    assert code == 1
    assert "CapExceeded" in err and "enumeration cap" in err


def test_enum_cap_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("QRM_ENUM_CAP", "2")
    code, _, err = run(capsys, "encode", "--r", "1", "--m", "2", "--w", "0000", "--basis", "1")
    assert code == 1 and "2^2" in err
    # an explicit flag wins over the environment
    assert run(capsys, "encode", "--enum-cap", "3", "--r", "1", "--m", "2", "--w", "0000", "--basis", "1")[0] == 0


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "qrm.conf"
    cfg.write_text("# caps\nenumeration_cap = 2\nseed = 9\n")
    code, _, err = run(capsys, "encode", "--config", str(cfg), "--r", "1", "--m", "2", "--w", "0000", "--basis", "1")
    assert code == 1 and "2^2" in err
    code, out, _ = run(capsys, "mc", "--config", str(cfg), "--n", "5", "--d", "3", "--p", "0.1", "--trials", "100")
    assert "seed=9" in out


def test_bad_config_key_is_usage_error(capsys, tmp_path):
    cfg = tmp_path / "bad.conf"
    cfg.write_text("colour = blue\n")
    assert run(capsys, "params", "--config", str(cfg), "--r", "1", "--m", "2")[0] == 2


def test_bound(capsys):
    code, out, _ = run(capsys, "bound", "--n", "1024", "--d", "32", "--p", "0.003")
    assert code == 0
    values = dict(line.split("=") for line in out.split())
    assert float(values["P_q"]) <= 1e-9
    assert float(values["P_e"]) == pytest.approx(1.5701259444852926e-07, rel=1e-9)
    code, out, _ = run(capsys, "bound", "--n", "5", "--d", "3", "--p", "0")
    assert out == "P_e=0.000000000e+00\nP_q=0.000000000e+00\n"
    assert run(capsys, "bound", "--n", "5", "--d", "3", "--p", "1.5")[0] == 1


def test_curve(capsys):
    argv = [
        "curve", "--codes", "rm:5,10", "rep:13,5", "rep:29,11", "rep:5,3",
        "--p-min", "1e-4", "--p-max", "0.2", "--points", "50", "--spacing", "log",
    ]
    code, out, _ = run(capsys, *argv)
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 200
    assert list(rows[0]) == ["label", "p", "pe", "pq"]
    assert [r["label"] for r in rows[::50]] == ["[[1024,252,32]]", "[[13,1,5]]", "[[29,1,11]]", "[[5,1,3]]"]
    assert rows[0]["p"] == "1.000000000e-04"


def test_curve_bad_code_spec(capsys):
    assert run(capsys, "curve", "--codes", "bch:1,2")[0] == 2
    assert run(capsys, "curve", "--codes", "rm:1,4")[0] == 2


def test_mc(capsys):
    code, out, _ = run(capsys, "mc", "--n", "13", "--d", "5", "--p", "0.05", "--trials", "20000", "--seed", "4")
    assert code == 0
    values = dict(line.split("=", 1) for line in out.strip().splitlines())
    assert set(values) == {"estimate", "stderr", "trials", "seed", "rng"}
    assert values["trials"] == "20000" and values["seed"] == "4"
    again = run(capsys, "mc", "--n", "13", "--d", "5", "--p", "0.05", "--trials", "20000", "--seed", "4")[1]
    assert again == out


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-m", "4")
    assert code == 0
    assert all(line.split()[0] in {"PASS", "SKIP"} for line in out.splitlines())


def test_verify_usage_error(capsys):
    assert run(capsys, "verify", "--max-m", "1")[0] == 2
