"""Shared fixtures.

The acceptance tests compare and gate on the CSV bundle produced by the
command-line ``all`` run.  That run is expensive, so it executes once per
session for each thread count and the result directories are shared.
"""
import pytest

from zerofilter.cli import main as cli_main


def _run_all(tmp_root, threads: int) -> str:
    out = str(tmp_root / f"all-threads{threads}")
    code = cli_main(["all", "--out", out, "--threads", str(threads)])
    assert code == 0, f"cli all --threads {threads} exited {code}"
    return out


@pytest.fixture(scope="session")
def all_run_serial(tmp_path_factory):
    return _run_all(tmp_path_factory.mktemp("runs"), 1)


@pytest.fixture(scope="session")
def all_run_threaded(tmp_path_factory):
    return _run_all(tmp_path_factory.mktemp("runs"), 8)


@pytest.fixture
def announce(capsys):
    """Print one uncaptured verdict line per acceptance criterion."""
    def _announce(name: str, ok: bool) -> None:
        with capsys.disabled():
            print(f"\nACCEPTANCE {name}: {'PASS' if ok else 'FAIL'}")
    return _announce
