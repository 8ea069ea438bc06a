import json
import os
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from fqfrs.cli import main
from fqfrs.experiment import DecisionSystem, save_csv

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_quantify_golden(capsys):
    expected = dict(line.split() for line in (GOLDEN / "quantify_s07.txt").read_text().splitlines())
    for model, value in expected.items():
        code, out, _ = run(capsys, "quantify", "--model", model, "--rim", "s:0.7,1", "--in", str(GOLDEN / "example.json"))
        assert code == 0
        assert out.strip() == value


def test_quantify_errors(capsys, tmp_path):
    code, _, err = run(capsys, "quantify", "--model", "owa", "--in", str(tmp_path / "nope.json"))
    assert code == 2 and "error" in err
    bad = tmp_path / "mismatch.json"
    bad.write_text(json.dumps({"A": [1, 0.5], "B": [1]}))
    assert run(capsys, "quantify", "--model", "ywi", "--in", str(bad))[0] == 1
    bad.write_text("{not json")
    assert run(capsys, "quantify", "--model", "ywi", "--in", str(bad))[0] == 2
    bad.write_text(json.dumps({"A": [1.5], "B": [1]}))
    assert run(capsys, "quantify", "--model", "ywi", "--in", str(bad))[0] == 1
    good = GOLDEN / "example.json"
    assert run(capsys, "quantify", "--model", "nope", "--in", str(good))[0] == 1
    assert run(capsys, "quantify", "--model", "owa", "--rim", "most", "--in", str(good))[0] == 1


def test_approx_golden(capsys):
    code, out, _ = run(capsys, "approx", "--relation", str(GOLDEN / "relation.csv"),
                       "--concept", str(GOLDEN / "concept.json"), "--model", "ywi", "--rim", "id", "--upper")
    assert code == 0
    assert out == (GOLDEN / "approx_ywi_id.txt").read_text()


def test_approx_identity_echoes_and_classical_upper(capsys, tmp_path):
    rel = tmp_path / "eye.csv"
    rel.write_text("1,0,0\n0,1,0\n0,0,1\n")
    concept = tmp_path / "c.json"
    concept.write_text("[1, 0, 1]")
    code, out, _ = run(capsys, "approx", "--relation", str(rel), "--concept", str(concept), "--upper")
    assert code == 0
    assert out.splitlines() == ["lower,upper", "1,1", "0,0", "1,1"]


def test_approx_non_square(capsys, tmp_path):
    rel = tmp_path / "r.csv"
    rel.write_text("1,0,0,0\n0,1,0,0\n0,0,1,0\n")
    concept = tmp_path / "c.json"
    concept.write_text("[1, 0, 1]")
    assert run(capsys, "approx", "--relation", str(rel), "--concept", str(concept))[0] == 1


@pytest.fixture
def experiment_files(tmp_path):
    rng = np.random.default_rng(0)
    X = np.vstack([rng.normal(0, 1, (10, 2)), rng.normal(3, 1, (10, 2))])
    save_csv(DecisionSystem.from_arrays(X, ["a"] * 10 + ["b"] * 10), tmp_path / "tiny.csv")
    config = {"models": ["FRS", "OWA", "YWI"], "a_grid": [0.0, 0.5], "folds": 2,
              "noise_fraction": 0.2, "seed": 5, "datasets": ["tiny.csv"]}
    path = tmp_path / "config.json"
    path.write_text(json.dumps(config))
    return tmp_path, path, config


def test_experiment_writes_three_csvs(capsys, experiment_files):
    tmp, cfg, _ = experiment_files
    code, out, _ = run(capsys, "experiment", str(cfg), "--out", str(tmp / "o1"))
    assert code == 0
    names = sorted(p.name for p in (tmp / "o1").iterdir())
    assert names == ["plot_data.csv", "results.csv", "stats.csv"]
    assert (tmp / "o1" / "results.csv").read_text().splitlines()[0] == "dataset,model,a,fold,balanced_accuracy"
    assert (tmp / "o1" / "stats.csv").read_text().splitlines()[0] == "a,model_1,model_2,p_value"
    assert (tmp / "o1" / "plot_data.csv").read_text().splitlines()[0] == \
        "a,model,mean_balanced_accuracy,mean_fractional_rank"
    assert "result rows" in out
    run(capsys, "experiment", str(cfg), "--out", str(tmp / "o2"))
    for name in names:
        assert (tmp / "o1" / name).read_bytes() == (tmp / "o2" / name).read_bytes()


def test_experiment_seed_override_and_env(capsys, experiment_files, monkeypatch):
    tmp, cfg, _ = experiment_files
    monkeypatch.setenv("FQFRS_OUTPUT_DIR", str(tmp / "env_out"))
    assert run(capsys, "experiment", str(cfg), "--seed", "11")[0] == 0
    assert (tmp / "env_out" / "results.csv").exists()


def test_experiment_rejects_a_equal_one(capsys, experiment_files):
    tmp, cfg, config = experiment_files
    cfg.write_text(json.dumps({**config, "a_grid": [0.5, 1.0]}))
    code, _, err = run(capsys, "experiment", str(cfg), "--out", str(tmp / "o"))
    assert code == 1
    assert "a_grid" in err


def test_stats_and_plotdata(capsys, experiment_files):
    tmp, cfg, _ = experiment_files
    run(capsys, "experiment", str(cfg), "--out", str(tmp / "o"))
    code, out, _ = run(capsys, "stats", str(tmp / "o" / "results.csv"))
    assert code == 0
    assert out == (tmp / "o" / "stats.csv").read_text()
    code, out, _ = run(capsys, "plotdata", str(tmp / "o" / "results.csv"))
    assert code == 0
    assert out == (tmp / "o" / "plot_data.csv").read_text()
    assert run(capsys, "stats", str(tmp / "missing.csv"))[0] == 2


def test_classify(capsys, experiment_files):
    tmp, _, _ = experiment_files
    code, out, err = run(capsys, "classify", "--train", str(tmp / "tiny.csv"), "--test", str(tmp / "tiny.csv"),
                         "--model", "ywi", "--rim", "s:0.2,1")
    assert code == 0
    assert len(out.split()) == 20
    assert "balanced_accuracy=" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fqfrs", "quantify", "--model", "ywi", "--rim", "s:0.7,1",
                           "--in", str(GOLDEN / "example.json")], capture_output=True, text=True,
                          env={**os.environ, "LC_ALL": "de_DE.UTF-8"})
    assert proc.returncode == 0
    assert proc.stdout == "0.7\n"
