import json
import subprocess
import sys

import pytest

from ellindep.cli import run


def _run(tmp_path, *argv):
    out = tmp_path / "out.json"
    code = run([*argv, "--out", str(out)])
    text = out.read_text() if out.exists() else None
    return code, (json.loads(text) if text else None)


@pytest.fixture
def sl2_bundle(tmp_path):
    path = tmp_path / "sl2.json"
    assert run(["fixtures", "sl2-std", "--primes", "7,11,13", "--out", str(path)]) == 0
    return path


def test_fixture_generation(tmp_path, sl2_bundle):
    obj = json.loads(sl2_bundle.read_text())
    assert obj["primes"] == [7, 11, 13] and obj["n"] == 2
    code, rep = _run(tmp_path, "fixtures")
    assert code == 0 and "weil-res-sl2" in rep["fixtures"]
    assert run(["fixtures", "nope"]) == 2


def test_independence_exit_codes(tmp_path, sl2_bundle):
    code, rep = _run(tmp_path, "independence", "--bundle", str(sl2_bundle), "--seed", "0")
    assert code == 0 and rep["verdict"] and rep["seed"] == 0
    adv = tmp_path / "adv.json"
    run(["fixtures", "torus-adversarial", "--out", str(adv)])
    code, rep = _run(tmp_path, "independence", "--bundle", str(adv))
    assert code == 1 and rep["offending_primes"] == [17]


def test_input_errors_exit_two(tmp_path, capsys):
    assert run(["independence", "--bundle", str(tmp_path / "missing.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["compat-check", "--bundle", str(bad)]) == 2
    bad.write_text(json.dumps({"n": 2}))
    assert run(["compat-check", "--bundle", str(bad)]) == 2
    err = capsys.readouterr().err
    assert "ellindep." in err


def test_threshold_error_is_qualified(tmp_path, capsys):
    path = tmp_path / "sym3.json"
    run(["fixtures", "sym3", "--primes", "7,11", "--out", str(path)])
    assert run(["independence", "--bundle", str(path)]) == 2
    assert "ThresholdError" in capsys.readouterr().err


def test_envelope_and_compat(tmp_path, sl2_bundle):
    code, rep = _run(tmp_path, "envelope", "--bundle", str(sl2_bundle), "--ell", "11")
    assert code == 0 and rep["per_prime"][0]["envelope"]["dim"] == 3
    code, rep = _run(tmp_path, "compat-check", "--bundle", str(sl2_bundle))
    assert code == 0 and rep["passed"]


def test_formchar_and_rank(tmp_path):
    w = tmp_path / "w.json"
    w.write_text(json.dumps({"weights": [[2, 0, -2]]}))
    code, rep = _run(tmp_path, "formchar", "--in", str(w))
    assert code == 0 and rep["annihilator"] == [[1, 0, 1], [0, 1, 0]]
    f = tmp_path / "f.json"
    f.write_text(json.dumps([{"type": "A1", "f": 2, "ell": 11}]))
    code, rep = _run(tmp_path, "rank", "--in", str(f))
    assert code == 0 and rep["rank_report"]["total_rank"] == 2
    f.write_text(json.dumps([{"type": "A1", "twist": 2, "ell": 11}]))
    assert run(["rank", "--in", str(f)]) == 2


def test_tame_commands(tmp_path):
    code, rep = _run(tmp_path, "tame", "decompose", "--ell", "7", "--level", "2")
    assert code == 0 and [c["digits"] for c in rep["characters"]] == [[0, 1], [1, 0]]
    code, rep = _run(tmp_path, "tame", "digits", "--ell", "7", "--level", "2", "--exponent", "7")
    assert rep["digits"] == [0, 1]
    code, rep = _run(tmp_path, "tame", "raise", "--ell", "7", "--digits", "1,0", "--target", "4")
    assert rep["raised"]["digits"] == [1, 0, 1, 0]
    chars = tmp_path / "c.json"
    chars.write_text(json.dumps([{"ell": 7, "level": 2, "digits": [5, 0]}]))
    assert run(["tame", "serre", "--in", str(chars), "--e", "1", "--i", "2"]) == 1
    rep_path = tmp_path / "rep.json"
    run(["tame", "mult-fixture", "--ell", "7", "--level", "2", "--out", str(rep_path)])
    code, rep = _run(tmp_path, "tame", "decompose", "--in", str(rep_path))
    assert [c["digits"] for c in rep["characters"]] == [[0, 1], [1, 0]]


def test_text_format(tmp_path, sl2_bundle):
    out = tmp_path / "r.txt"
    assert run(["compat-check", "--bundle", str(sl2_bundle), "--format", "text", "--out", str(out)]) == 0
    assert "passed: true" in out.read_text()


def test_module_entry_point(sl2_bundle):
    proc = subprocess.run(
        [sys.executable, "-m", "ellindep", "compat-check", "--bundle", str(sl2_bundle)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["passed"]
