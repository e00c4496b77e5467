import json

import pytest

from qlattice.cli import main, parse_config, parse_list


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    data = json.loads(out)
    assert code == 0 and data["schema"] == "qlattice/1"
    assert {"Ex3.4", "DR2", "NABLA"} <= {r["entry"] for r in data["records"]}


def test_derive_ex3_2(capsys):
    code, out, _ = run(capsys, "derive", "--entry", "Ex3.2", "--nu", "3")
    data = json.loads(out)
    assert code == 0 and len(data["records"]) == 5
    assert all(r["residual"] < 1e-9 for r in data["records"])


def test_derive_empty(capsys):
    code, out, _ = run(capsys, "derive", "--entry", "Ex3.2", "--z", "")
    assert code == 0 and json.loads(out)["records"] == []


def test_derive_inadmissible(capsys):
    code, _, err = run(capsys, "derive", "--pairs", "3,3;3,2;4,3")
    assert code == 3 and "CaseNotApplicable" in err


def test_derive_rational(capsys):
    code, out, _ = run(capsys, "derive", "--backend", "rational", "--entry", "Ex3.1", "--nu", "2", "--z", "1/3")
    rec = json.loads(out)["records"][0]
    assert code == 0 and rec["residual"] == 0 and "/" in rec["A"][1]


def test_verify_dr2_from_config(capsys, tmp_path):
    cfg = tmp_path / "dh.cfg"
    cfg.write_text("# dual Hahn\nfamily = dual-hahn\na = 0.3\nb = 10.3\nc = 0.2\n")
    code, out, _ = run(capsys, "verify", "--config", str(cfg), "--entry", "DR2", "--n", "1..5")
    data = json.loads(out)
    assert code == 0 and data["summary"]["max_residual"] < 1e-8


def test_verify_ex3_4_flags(capsys):
    code, out, _ = run(capsys, "verify", "--family", "q-racah", "--entry", "Ex3.4")
    data = json.loads(out)
    assert "proportionality_dev" in data["records"][0]
    assert data["summary"]["flagged"] > 0
    assert code == 4


def test_verify_unknown(capsys):
    assert run(capsys, "verify", "--entry", "Ex9.9")[0] == 2


def test_verify_csv_and_out(capsys, tmp_path):
    out = tmp_path / "r.csv"
    code, _, _ = run(capsys, "verify", "--entry", "TTRR", "--format", "csv", "--out", str(out))
    text = out.read_text()
    assert code == 0 and text.startswith("nu,z,residual") and "# summary" in text


def test_seeded_sweep_is_deterministic(capsys):
    a = run(capsys, "verify", "--entry", "NABLA", "--random", "3", "--seed", "7")[1]
    b = run(capsys, "verify", "--entry", "NABLA", "--random", "3", "--seed", "7")[1]
    assert a == b


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "--n", "0", "--s", "1.3,2.3")
    assert code == 0 and [r["ttrr"] for r in json.loads(out)["records"]] == [1, 1]
    code, out, _ = run(capsys, "eval", "--n", "3")
    assert code == 0 and json.loads(out)["summary"]["max_relative_difference"] < 1e-8
    assert run(capsys, "eval", "--n", "3", "--s", "20")[0] == 3


def test_tolerance_violation(capsys):
    assert run(capsys, "verify", "--entry", "DR1")[0] == 4


def test_parse_errors(capsys, tmp_path):
    bad = tmp_path / "bad.cfg"
    bad.write_text("family dual-hahn\n")
    assert run(capsys, "list", "--config", str(bad))[0] == 2
    assert run(capsys, "eval", "--family", "nope")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "derive", "--pairs", "1,2;3")[0] == 2


def test_helpers():
    assert parse_config("a=1\n\n# c\nb = x y\n") == {"a": "1", "b": "x y"}
    assert parse_list("1..3") == [1, 2, 3]
    assert parse_list("") == []
