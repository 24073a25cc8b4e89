import os
import subprocess
import sys
from pathlib import Path

import pytest
from sqlalchemy import create_engine
from sqlalchemy.orm import sessionmaker

import database
from config import Settings, get_settings
from main import run
from plength import sieve_length3_candidates

ROOT = Path(__file__).parent.parent
DATA = Path(__file__).parent / "data"


def cli(capsys, *argv, settings=None):
    code = run(list(argv), settings)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def ledger(tmp_path, monkeypatch):
    engine = create_engine(f"sqlite:///{tmp_path / 'runs.db'}")
    monkeypatch.setattr(database, "engine", engine)
    monkeypatch.setattr(database, "SessionLocal", sessionmaker(autocommit=False, autoflush=False, bind=engine))
    return engine


@pytest.mark.parametrize("argv, output", [
    (["length", "46", "--base", "5"], "4\n"),
    (["lambda", "--base", "2", "--k", "3"], "11\n"),
    (["lambda", "--base", "5", "--k", "5", "--digits"], "13\n[-2, -2, 1]\n"),
    (["expand", "0", "--base", "7"], "[]\nlength 0\n"),
    (["expand", "46", "--base", "5"], "[1, -1, 2]\nlength 4\n"),
    (["expand", "-46", "--base", "5"], "[-1, 1, -2]\nlength 4\n"),
    (["goldbach", "28"], "5 23\n"),
    (["three-primes", "21"], "3 5 13\n"),
    (["sun-member", "47867742232066880047611079"], "true\n"),
    (["sun-member", "47867742232066880047611080"], "false\n"),
    (["factor", "58164433"], "4889 * 11897\n"),
    (["factor", "1024"], "2^10\n"),
    (["is-prime", "2"], "prime (small prime)\n"),
    (["restricted", "7", "--exclude", "7"], "2\n"),
    (["oracle-lambda", "--set", "list:2,3", "--k", "3", "--bound", "5000"], "21\n"),
    (["oracle-lambda", "--set", "g:2", "--k", "12", "--bound", "100"], "not-found\n"),
    (["oracle", "--set", "g:2", "--window=-3:3"], "n,length\n-3,2\n-2,1\n-1,1\n0,0\n1,1\n2,1\n3,2\n"),
    (["oracle", "--set", "g:2", "--window", "-3:3"], "n,length\n-3,2\n-2,1\n-1,1\n0,0\n1,1\n2,1\n3,2\n"),
    (["oracle", "--window", "-2:0", "--set", "g:3"], "n,length\n-2,2\n-1,1\n0,0\n"),
    (["bfile", "--base", "3", "--count", "5"], "1 1\n2 2\n3 5\n4 14\n5 41\n"),
    (["fig3", "--base", "2", "--nmax", "3"], "series,x,y\nlength,1,1\nlength,2,1\nlength,3,2\nlambda,1,1\nlambda,2,3\n"),
    (["lambda-table", "--bases", "2,3", "--kmax", "3", "--format", "csv"], "k,2,3\n1,1,1\n2,3,2\n3,11,5\n"),
])
def test_subcommand_output(capsys, argv, output):
    """Test the printed result of each subcommand."""
    code, out, err = cli(capsys, *argv)
    assert (code, out, err) == (0, output, "")


def test_lambda_table_default(capsys):
    """Test that the default table is the published one."""
    code, out, _ = cli(capsys, "lambda-table")
    assert code == 0
    assert out == (DATA / "lambda_table.txt").read_text(encoding="utf-8")


def test_fig2_to_file(capsys, tmp_path):
    """Test writing the g-length dataset to a file."""
    path = tmp_path / "length_vs_g.csv"
    code, out, _ = cli(capsys, "fig2", "--output", str(path))
    assert (code, out) == (0, "")
    assert path.read_text(encoding="utf-8") == (DATA / "length_vs_g.csv").read_text(encoding="utf-8")


def test_plength_candidate(capsys):
    """Test the report for 58164433."""
    code, out, _ = cli(capsys, "plength", "58164433", "--cap", "64")
    assert code == 0
    lines = out.splitlines()
    assert "upper_bound 3" in lines
    assert "status candidate" in lines
    assert "two_power_cap 64" in lines
    assert "factors 4889 * 11897" in lines


def test_plength_negative(capsys):
    """Test that negative integers are accepted."""
    code, out, _ = cli(capsys, "plength", "-6")
    assert code == 0
    assert "upper_bound 2" in out.splitlines()


def test_is_prime_composite(capsys):
    """Test the verdict line for a composite."""
    code, out, _ = cli(capsys, "is-prime", "58164433")
    assert code == 0
    assert out.startswith("composite (")


def test_sun_verify(capsys):
    """Test that every check of the Sun example passes."""
    code, out, _ = cli(capsys, "sun-verify")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4
    assert all(line.startswith("PASS ") for line in lines)


def test_sieve3(capsys):
    """Test that sieve3 prints the count and the survivors of the library call."""
    code, out, _ = cli(capsys, "sieve3", "--lo", "3", "--hi", "2001", "--cap", "1", "--threads", "2")
    survivors = sieve_length3_candidates(3, 2001, 1, 2)
    assert code == 0
    assert out == f"two_power_cap 1\ncandidates {len(survivors)}\n" + "".join(f"{n}\n" for n in survivors)


def test_sieve3_store_and_frontier(capsys, ledger):
    """Test storing runs and reading back the frontier."""
    assert cli(capsys, "sieve3", "--lo", "3", "--hi", "999", "--cap", "40", "--store")[0] == 0
    assert cli(capsys, "sieve3", "--lo", "1001", "--hi", "1999", "--cap", "40", "--store")[0] == 0

    code, out, _ = cli(capsys, "frontier", "--cap", "40")
    assert code == 0
    assert out == "two_power_cap 40\ncovered_through 1999\nfirst_candidate none\n"

    code, out, _ = cli(capsys, "runs")
    lines = out.splitlines()
    assert len(lines) == 2
    assert lines[0].split()[1:3] == ["3", "999"]


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["length", "4x", "--base", "5"],
    ["length", "0x10", "--base", "5"],
    ["length", "46"],
    ["length", "46", "--base", "1"],
    ["goldbach", "7"],
    ["oracle", "--set", "cube:3", "--window=0:5"],
    ["oracle", "--set", "g:2", "--window", "5"],
    ["oracle", "--set", "g:2", "--window"],
    ["three-primes", "4"],
    ["restricted", "10", "--exclude", "4"],
])
def test_usage_errors(capsys, argv):
    """Test that malformed input exits with status 1 and a diagnostic."""
    code, out, err = cli(capsys, *argv)
    assert code == 1
    assert out == ""
    assert err.startswith("error: ")


def test_computation_error(capsys):
    """Test that an exhausted rho budget exits with status 2."""
    settings = Settings(rho_budget=10, trial_division_bound=100)
    code, out, err = cli(capsys, "factor", str(299723 * 19295212676140402555471), settings=settings)
    assert code == 2
    assert out == ""
    assert "rho" in err


def test_output_is_deterministic(capsys):
    """Test that repeated runs print identical output."""
    first = cli(capsys, "plength", "1000001")
    second = cli(capsys, "plength", "1000001")
    assert first == second


def test_invalid_environment_exits_with_usage_error(capsys, monkeypatch):
    """Test that a bad GADIC_* variable gives a diagnostic and status 1."""
    monkeypatch.setenv("GADIC_THREADS", "0")
    get_settings.cache_clear()
    try:
        code, out, err = cli(capsys, "length", "46", "--base", "5")
    finally:
        get_settings.cache_clear()
    assert (code, out) == (1, "")
    assert err.startswith("error: invalid configuration")


def test_invalid_environment_from_the_command_line(tmp_path):
    """Test the same diagnostic when the program is started as a script."""
    environ = dict(os.environ, GADIC_THREADS="0", DATABASE_URL=f"sqlite:///{tmp_path / 'runs.db'}")
    result = subprocess.run(
        [sys.executable, str(ROOT / "main.py"), "length", "46", "--base", "5"],
        cwd=tmp_path, env=environ, capture_output=True, text=True,
    )
    assert result.returncode == 1
    assert result.stdout == ""
    assert result.stderr.startswith("error: invalid configuration")
