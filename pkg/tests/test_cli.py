"""End-to-end command-line behavior on reduced problem sizes."""
import json
import os

import pytest

from zerofilter.cli import main

FAST = ["--set", "N=4096", "--set", "samples=3", "--set", "t_end=0.05",
        "--set", "alphas=0.5,0.25,0.125,0.0625", "--set", "taylor_t0=0.01",
        "--set", "taylor_alphas=0.0,0.0625", "--set", "n_range=4..5",
        "--set", "t0=0.01"]


def test_version(capsys):
    with pytest.raises(SystemExit) as exc_info:
        main(["--version"])
    assert exc_info.value.code == 0
    assert "zerofilter" in capsys.readouterr().out


def test_requires_subcommand():
    with pytest.raises(SystemExit) as exc_info:
        main([])
    assert exc_info.value.code == 2


def test_thm1_small(tmp_path, capsys):
    out = str(tmp_path / "r")
    code = main(["thm1", "--out", out, "--threads", "1"] + FAST)
    assert code == 0
    assert capsys.readouterr().out.startswith("thm1: pass")
    with open(os.path.join(out, "thm1.csv")) as fh:
        header = fh.readline().strip()
    assert header == "case_id,alpha,t_end,e_alpha,order_p,C1,verdict"
    assert os.path.exists(os.path.join(out, "thm1.summary.json"))
    assert os.path.exists(os.path.join(out, "run_manifest.json"))


def test_thm2_small_schema(tmp_path):
    out = str(tmp_path / "r")
    assert main(["thm2", "--out", out, "--threads", "2"] + FAST) == 0
    with open(os.path.join(out, "thm2.csv")) as fh:
        header = fh.readline().strip()
    assert header == ("case_id,n,alpha,t0,d_n,E_gap_norm,taylor_residual,"
                      "Hs_u0,breakdown_margin,verdict")


def test_lemmas_small(tmp_path):
    out = str(tmp_path / "r")
    assert main(["lemmas", "--out", out] + FAST) == 0


def test_all_bundle(tmp_path):
    out = str(tmp_path / "r")
    assert main(["all", "--out", out, "--threads", "2"] + FAST) == 0
    for name in ("thm1", "prop1", "thm2", "lemmas"):
        assert os.path.exists(os.path.join(out, f"{name}.csv"))
    # bench produces timing cells, so the bundle leaves it out
    assert not os.path.exists(os.path.join(out, "bench.csv"))
    with open(os.path.join(out, "all.summary.json")) as fh:
        summary = json.load(fh)
    assert summary["all_pass"] is True
    assert summary["juxtaposition"]["eta0"] > 0
    assert len(summary["juxtaposition"]["alpha_decay"]) == 4
    assert len(summary["juxtaposition"]["nonuniform_floor"]) == 2


def test_config_error_exit(tmp_path, capsys):
    code = main(["thm1", "--out", str(tmp_path), "--set", "s=1.0"])
    assert code == 65
    assert "s must exceed 3/2" in capsys.readouterr().err


def test_missing_config_file(tmp_path):
    assert main(["thm1", "--out", str(tmp_path),
                 "--config", "/no/such.toml"]) == 65


def test_bad_override_exit(tmp_path):
    assert main(["thm1", "--out", str(tmp_path), "--set", "bogus=1"]) == 65


def test_config_file_round_trip(tmp_path):
    cfg = tmp_path / "c.toml"
    cfg.write_text('N = 4096\nsamples = 3\nt_end = 0.05\n'
                   'alphas = [0.5, 0.25, 0.125, 0.0625]\n'
                   'taylor_t0 = 0.01\ntaylor_alphas = [0.0]\n'
                   'n_range = "4..5"\nt0 = 0.01\n')
    out = str(tmp_path / "r")
    assert main(["prop1", "--config", str(cfg), "--out", out]) == 0
    assert os.path.exists(os.path.join(out, "prop1.csv"))


def test_io_error_exit(tmp_path):
    blocker = tmp_path / "blocker"
    blocker.write_text("x")
    code = main(["lemmas", "--out", str(blocker / "sub")] + FAST)
    assert code == 66


def test_threads_env_default(tmp_path, monkeypatch):
    monkeypatch.setenv("ZEROFILTER_THREADS", "2")
    out = str(tmp_path / "r")
    assert main(["lemmas", "--out", out] + FAST) == 0
    with open(os.path.join(out, "run_manifest.json")) as fh:
        manifest = json.load(fh)
    assert manifest["config"]["threads"] == 2


def test_bench_small(tmp_path):
    out = str(tmp_path / "r")
    code = main(["bench", "--out", out, "--set", "bench_sizes=128,256",
                 "--set", "bench_alphas=0.5", "--set", "bench_reps=20"])
    assert code == 0
    with open(os.path.join(out, "bench.csv")) as fh:
        header = fh.readline().strip()
    assert header == ("case_id,op,backend,N,alpha,reps,"
                      "median_seconds,delta,verdict")
