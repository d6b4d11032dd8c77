"""Command-line surface: outputs, formats, exit codes."""
import json
import subprocess
import sys

import pytest

from cyclosum.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_poly_pinned_examples(capsys):
    assert run(capsys, "poly", "--m", "1", "--lambda", "2") == (0, "1\n", "")
    assert run(capsys, "poly", "--m", "2", "--lambda", "1") == (0, "q^2 - q + 1/6\n", "")
    assert run(capsys, "poly", "--m", "0", "--lambda", "2") == (0, "0\n", "")


def test_poly_classical_flag(capsys):
    code, out, _ = run(capsys, "poly", "--m", "2", "--classical")
    assert (code, out) == (0, "q^2 - q + 1/6\n")
    with pytest.raises(SystemExit) as exc:
        main(["poly", "--m", "2", "--classical", "--lambda", "1"])
    assert exc.value.code == 2


def test_poly_json_format(capsys):
    code, out, _ = run(capsys, "poly", "--m", "2", "--lambda", "2", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"m": "2", "lambda": "2", "poly": "2q - 4"}


def test_bad_rational_flag_is_usage_error(capsys):
    code, _, err = run(capsys, "poly", "--m", "2", "--lambda", "0.5")
    assert code == 2
    assert "bad arguments" in err


def test_hpoly(capsys):
    code, out, _ = run(
        capsys, "hpoly", "--m", "1", "--p", "1", "--lambda", "2", "--gamma", "-1"
    )
    assert (code, out) == (0, "(2/3)q - 4/9\n")


def test_hpoly_collision_exit(capsys):
    code, _, err = run(
        capsys, "hpoly", "--m", "2", "--p", "1", "--lambda", "3", "--gamma", "3"
    )
    assert code == 3
    assert "collision" in err


def test_hpoly_invalid_power_is_usage_error(capsys):
    code, _, err = run(
        capsys, "hpoly", "--m", "2", "--p", "-1", "--lambda", "2", "--gamma", "1"
    )
    assert code == 2


def test_hpoly_zeta_gamma(capsys):
    code, out, _ = run(
        capsys,
        "hpoly", "--m", "0", "--p", "0", "--lambda", "2", "--gamma", "zeta:4:2",
        "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["gamma"] == "-1"


def test_esum_delta_vanishes(capsys):
    code, out, _ = run(
        capsys,
        "esum", "--m", "3", "--n", "4", "--r", "1", "--p", "1",
        "--lambda", "2", "--seq", "delta",
    )
    assert (code, out) == (0, "0\n")


def test_esum_from_file(capsys, tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"n": 2, "values": ["0", "1"]}))
    code, out, _ = run(
        capsys,
        "esum", "--m", "1", "--n", "2", "--r", "0", "--p", "1",
        "--lambda", "2", "--seq", str(path),
    )
    assert (code, out) == (0, "1/3\n")


def test_esum_file_period_mismatch(capsys, tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"n": 3, "values": ["0", "1", "0"]}))
    code, _, err = run(
        capsys,
        "esum", "--m", "1", "--n", "2", "--r", "0", "--p", "1",
        "--lambda", "2", "--seq", str(path),
    )
    assert code == 4
    assert "period" in err


def test_esum_bad_family_exit_and_diagnostic(capsys):
    code, _, err = run(
        capsys,
        "esum", "--m", "1", "--n", "4", "--r", "0", "--p", "1",
        "--lambda", "1", "--seq", "fourier-dedekind:a=2",
    )
    assert code == 4
    assert "gcd(2, 4) = 2" in err


def test_esum_collision_exit(capsys):
    code, _, err = run(
        capsys,
        "esum", "--m", "2", "--n", "2", "--r", "0", "--p", "1",
        "--lambda", "-1", "--seq", "delta",
    )
    assert code == 3
    assert "k=1" in err


def test_esum_at_point(capsys):
    code, out, _ = run(
        capsys,
        "esum", "--m", "1", "--n", "2", "--r", "0", "--p", "1",
        "--lambda", "2", "--seq", "fourier-dedekind:a=1", "--at", "0",
    )
    assert (code, out) == (0, "1/6\n")


def test_vsum_and_ramanujan(capsys):
    assert run(capsys, "vsum", "--n", "6", "--k", "0", "--lambda", "2") == (0, "34\n", "")
    assert run(capsys, "ramanujan", "--n", "6", "--k", "2") == (0, "-1\n", "")


def test_interp(capsys):
    code, out, _ = run(capsys, "interp", "--n", "6", "--r", "0", "--seq", "ramanujan")
    assert (code, out) == (0, "q^5 + q\n")


def test_csv_format(capsys):
    code, out, _ = run(capsys, "ramanujan", "--n", "6", "--k", "2", "--format", "csv")
    assert code == 0
    assert out == "n,k,value\n6,2,-1\n"


def test_verify_small_campaign(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "moebius", "--workers", "1")
    assert code == 0
    report = json.loads(out)
    assert report["campaign"] == "moebius"
    assert report["summary"] == {"pass": 11, "fail": 0, "skipped": 0}
    assert report["grid"][0]["identity"] == "moebius"


def test_verify_writes_report_under_out_dir(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("CYCLOSUM_OUT", str(tmp_path))
    code, out, _ = run(
        capsys, "verify", "--identity", "moebius", "--workers", "1", "--out", "rep.json"
    )
    assert code == 0
    assert "pass=11" in out
    assert (tmp_path / "rep.json").exists()


def test_verify_same_seed_same_bytes(capsys):
    outputs = []
    for _ in range(2):
        code, out, _ = run(
            capsys, "verify", "--identity", "mult", "--workers", "1", "--seed", "77"
        )
        assert code == 0
        outputs.append(out)
    assert outputs[0] == outputs[1]


def test_verify_csv_matches_json_cases(capsys):
    _, js, _ = run(capsys, "verify", "--identity", "moebius", "--workers", "1")
    _, cs, _ = run(
        capsys, "verify", "--identity", "moebius", "--workers", "1", "--format", "csv"
    )
    n_cases = len(json.loads(js)["cases"])
    assert len(cs.splitlines()) == n_cases + 1


def test_verify_mutation_grid_fails(capsys, tmp_path):
    grid = {
        "identity": "mult",
        "m": [1, 2],
        "n": [2, 3],
        "lambdas": ["2"],
        "perturb_index": 1,
    }
    path = tmp_path / "grid.json"
    path.write_text(json.dumps(grid))
    code, out, _ = run(
        capsys, "verify", "--identity", "mult", "--grid", str(path), "--workers", "1"
    )
    assert code == 1
    assert json.loads(out)["summary"]["fail"] == 1


def test_verify_grid_with_all_is_rejected(capsys, tmp_path):
    path = tmp_path / "grid.json"
    path.write_text("{}")
    code, _, err = run(capsys, "verify", "--grid", str(path))
    assert code == 2
    assert "identity" in err


def test_verify_missing_grid_file(capsys):
    code, _, err = run(
        capsys, "verify", "--identity", "mult", "--grid", "/nonexistent.json"
    )
    assert code == 2
    assert "bad grid" in err


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cyclosum.cli", "poly", "--m", "1", "--lambda", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "1\n"
