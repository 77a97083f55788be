import json
import shutil
from pathlib import Path

import pytest

from mbdef.cli import main

GOLDEN = Path(__file__).resolve().parent.parent / "golden"

MODEL = {
    "generators": [
        {"name": "y1", "degree": 0}, {"name": "ybar1", "degree": 0},
        {"name": "z1", "degree": 1, "weight": 1}, {"name": "th1", "degree": 1, "weight": 1},
        {"name": "t", "degree": 0}, {"name": "tht", "degree": 1, "weight": 1},
        {"name": "e1", "degree": 1, "weight": 1}, {"name": "e2", "degree": 1, "weight": 1},
    ],
    "pairing": [["th1", "y1"], ["tht", "t"]],
    "fiber": [["tht", "t"]],
    "differential": {"ybar1": "z1"},
}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def model_file(tmp_path):
    p = tmp_path / "model.json"
    p.write_text(json.dumps(MODEL))
    return p


def test_universal_phic(capsys):
    code, out, _ = run(capsys, "universal-phic", "--n", "3", "--max-weight", "8")
    assert code == 0
    rep = json.loads(out)
    ann = rep["annotations"]["phi_c:phi1^3*phi3"]
    assert ann["computed"] == ann["oracle"] == "-1"
    assert ann["printed"] == "-3"


def test_table_output(capsys):
    code, out, _ = run(capsys, "universal-phic", "--n", "2", "--max-weight", "6", "--format", "table")
    assert code == 0 and "phi1^2*phi2" in out


def test_mc_check(capsys, model_file, tmp_path):
    good = tmp_path / "good.txt"
    good.write_text("e1*e2*t + z1*th1*t^2")
    code, out, _ = run(capsys, "mc-check", "--model", str(model_file), "--element", str(good))
    assert code == 0
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"text": "ybar1*th1*e1", "cutoff": 6}))
    code, out, _ = run(capsys, "mc-check", "--model", str(model_file), "--element", str(bad))
    assert code == 1
    assert json.loads(out)["checks"]["maurer_cartan"] is False


def test_chi_check_deterministic(capsys):
    a = run(capsys, "chi-check", "--seed", "7", "--samples", "10", "--cutoff", "6")
    b = run(capsys, "chi-check", "--seed", "7", "--samples", "10", "--cutoff", "6")
    assert a[0] == 0 and a == b


def test_chi_check_with_model_and_eta(capsys, model_file, tmp_path):
    eta = tmp_path / "eta.txt"
    eta.write_text("e1*e2*t + z1*th1*t^2 + e1*tht")
    code, out, _ = run(capsys, "chi-check", "--model", str(model_file), "--eta", str(eta))
    assert code == 0


def test_other_commands(capsys):
    assert run(capsys, "clifford", "--rank", "2")[0] == 0
    assert run(capsys, "clifford", "--rank", "1", "--check", "koszul")[0] == 0
    assert run(capsys, "hh-ua1", "--n", "2", "--max-weight", "6")[0] == 0
    assert run(capsys, "koszul", "--rank", "2", "--max-degree", "3")[0] == 0
    assert run(capsys, "scaling", "--n", "3", "--max-weight", "8")[0] == 0
    assert run(capsys, "ideal-check", "--n", "2", "--max-weight", "8")[0] == 0


def test_negative_control_exit_code(capsys):
    code, out, _ = run(capsys, "ideal-check", "--n", "2", "--max-weight", "8", "--perturb", "phi1*phi2")
    assert code == 1


def test_input_errors(capsys, model_file, tmp_path):
    code, _, err = run(capsys, "mc-check", "--model", str(tmp_path / "missing.json"), "--element", "x")
    assert code == 2 and "error" in err
    bad = tmp_path / "bad.txt"
    bad.write_text("e1 *")
    assert run(capsys, "mc-check", "--model", str(model_file), "--element", str(bad))[0] == 2
    assert run(capsys, "clifford", "--rank", "3", "--check", "resolution")[0] == 2
    assert run(capsys, "universal-phic", "--n", "0")[0] == 2


def test_config(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"format": "table", "max_weight": 6}))
    code, out, _ = run(capsys, "--config", str(cfg), "hh-ua1", "--n", "2")
    assert code == 0 and not out.lstrip().startswith("{")
    cfg.write_text(json.dumps({"bogus": 1}))
    assert run(capsys, "--config", str(cfg), "hh-ua1", "--n", "2")[0] == 2


def test_golden(capsys, tmp_path):
    code, out, _ = run(capsys, "golden", "--golden-dir", str(GOLDEN))
    assert code == 0
    d = tmp_path / "g"
    shutil.copytree(GOLDEN, d)
    path = d / "universal_phic_N3_w8.json"
    doc = json.loads(path.read_text())
    for rec in doc["outputs"]["phi_c"]:
        if rec["mono"] == [["phi1", 3], ["phi3", 1]]:
            rec["coeff"] = [-3, 1, 0, 1]
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "golden", "--name", "universal_phic_N3_w8", "--golden-dir", str(d))
    assert code == 1
    assert "coefficient of phi1^3*phi3: -1 != -3" in out
    assert run(capsys, "golden", "--name", "universal_phic_N3_w8", "--golden-dir", str(d), "--bless")[0] == 0
    assert run(capsys, "golden", "--name", "universal_phic_N3_w8", "--golden-dir", str(d))[0] == 0
    empty = tmp_path / "none"
    assert run(capsys, "golden", "--golden-dir", str(empty))[0] == 2
