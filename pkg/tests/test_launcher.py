import inspect
import json
from typing import get_type_hints

import pytest

import clbc_config
import launcher
import main_api
from clbc_config import EXAMPLE_MATRIX_FILE
from coset_oracle import VerificationReport
from launcher import EXIT_CAP, EXIT_DISCREPANCY, EXIT_OK, EXIT_USAGE, run_cli


def run(capsys, *argv):
    code = run_cli(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_leaders(capsys):
    code, out, _ = run(capsys, "leaders", "-H", EXAMPLE_MATRIX_FILE)
    assert code == EXIT_OK
    assert "64 cosets, 118 coset leaders" in out
    assert "[1, 10, 30, 23, 0, 0, 0, 0, 0, 0, 0]" in out


def test_leaders_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "leaders", "-H", EXAMPLE_MATRIX_FILE)
    _, second, _ = run(capsys, "leaders", "-H", EXAMPLE_MATRIX_FILE)
    assert first == second


def test_leaders_json(capsys, tmp_path):
    target = tmp_path / "example.json"
    code, _, _ = run(capsys, "leaders", "-H", EXAMPLE_MATRIX_FILE, "--json", str(target), "--no-matphi")
    assert code == EXIT_OK
    data = json.loads(target.read_text(encoding="utf-8"))
    assert data["code"]["num_cosets"] == 64
    assert data["matphi"] is None
    assert data["stats"]["total_leaders"] == 118


def test_stats_with_d(capsys):
    code, out, _ = run(capsys, "stats", "-H", EXAMPLE_MATRIX_FILE, "--with-d")
    assert code == EXIT_OK
    assert "Minimum distance:        4" in out
    assert "Cosets meeting B(C,t):   11" in out


def test_stats_without_d(capsys):
    code, out, _ = run(capsys, "stats", "-H", EXAMPLE_MATRIX_FILE)
    assert code == EXIT_OK
    assert "not computed" in out


def test_decode(capsys):
    code, out, _ = run(capsys, "decode", "-H", EXAMPLE_MATRIX_FILE, "-y", "0000110000")
    assert code == EXIT_OK
    assert "error 1100000000" in out
    assert "error 0000110000" in out
    assert "2 nearest codewords" in out


def test_decode_wrong_length(capsys):
    code, _, err = run(capsys, "decode", "-H", EXAMPLE_MATRIX_FILE, "-y", "0101")
    assert code == EXIT_USAGE
    assert "❌" in err


def test_matphi(capsys, tmp_path):
    target = tmp_path / "phi.json"
    code, out, _ = run(capsys, "matphi", "-H", EXAMPLE_MATRIX_FILE, "--json", str(target))
    assert code == EXIT_OK
    assert len(json.loads(target.read_text(encoding="utf-8"))["matphi"]) == 64


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "-H", EXAMPLE_MATRIX_FILE)
    assert code == EXIT_OK
    assert "64 cosets, 118 coset leaders" in out


def test_oracle_cap(capsys):
    code, _, err = run(capsys, "oracle", "-H", EXAMPLE_MATRIX_FILE, "--cap", "8")
    assert code == EXIT_CAP
    assert "cap" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "-H", EXAMPLE_MATRIX_FILE)
    assert code == EXIT_OK
    assert "matches" in out


def test_verify_discrepancy(capsys, monkeypatch):
    monkeypatch.setattr(launcher, "verify", lambda result, truth: VerificationReport(64, ["coset 3: made up"]))
    code, out, _ = run(capsys, "verify", "-H", EXAMPLE_MATRIX_FILE)
    assert code == EXIT_DISCREPANCY
    assert "made up" in out


def test_parse_error(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("10\n1\n", encoding="utf-8")
    code, _, err = run(capsys, "leaders", "-H", str(bad))
    assert code == EXIT_USAGE
    assert "line 2" in err


def test_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "leaders", "-H", str(tmp_path / "nope.txt"))
    assert code == EXIT_USAGE


@pytest.mark.parametrize("argv", [[], ["leaders"], ["frobnicate", "-H", "x"]])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == EXIT_USAGE


@pytest.mark.parametrize("command", ["oracle", "verify"])
def test_cap_out_of_range(capsys, command):
    code, _, err = run(capsys, command, "-H", EXAMPLE_MATRIX_FILE, "--cap", "100")
    assert code == EXIT_USAGE
    assert "1..40" in err


def test_stats_cap_out_of_range(capsys):
    code, _, err = run(capsys, "stats", "-H", EXAMPLE_MATRIX_FILE, "--with-d", "--cap", "0")
    assert code == EXIT_USAGE
    assert "❌" in err


def test_stats_zero_code(capsys, tmp_path):
    identity = tmp_path / "identity.txt"
    identity.write_text("100\n010\n001\n", encoding="utf-8")
    code, out, _ = run(capsys, "stats", "-H", str(identity), "--with-d")
    assert code == EXIT_OK
    assert "k=0" in out
    assert "undefined (no nonzero codeword)" in out
    assert "not computed" not in out


@pytest.mark.parametrize(
    "function",
    [
        launcher.run_cli,
        launcher.run_stats,
        launcher.print_stats,
        launcher.build_parser,
        clbc_config.get_oracle_cap,
        clbc_config.check_oracle_cap,
        clbc_config.configure_logging,
        main_api.stats,
        main_api.read_matrix,
    ],
    ids=lambda f: f"{f.__module__}.{f.__name__}",
)
def test_public_functions_are_annotated(function):
    hints = get_type_hints(function)
    assert "return" in hints
    params = [p for p in inspect.signature(function).parameters if p != "self"]
    assert all(p in hints for p in params)
