import json
import subprocess
import sys

import pytest

from pdhyper.cli import main


def run_cli(*args, capsys=None):
    code = main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def test_domset_star_exact(capsys):
    code, out, _ = run_cli("domset", "--fixture", "star", "--method", "exact", capsys=capsys)
    assert code == 0
    assert "weight=1" in out and "P1" in out


def test_vc_fig4(capsys):
    code, out, _ = run_cli("vc", "--fixture", "fig4", capsys=capsys)
    assert code == 0
    assert "size 4 found" in out and "size 5: none" in out


def test_count_counterexample(capsys):
    code, out, _ = run_cli("count", "--fixture", "counterexample:5", "--k", "2", capsys=capsys)
    assert code == 0
    assert "edges<=2: 10" in out


def test_goodpairs_star(capsys):
    code, out, _ = run_cli("goodpairs", "--fixture", "star", "--k", "2", capsys=capsys)
    assert code == 0
    assert "2-good pairs: 5" in out


def test_gen_count_round_trip(tmp_path, capsys):
    inst = tmp_path / "inst.json"
    code, _, _ = run_cli(
        "gen", "--n", "20", "--seed", "4", "--out", str(inst), capsys=capsys
    )
    assert code == 0
    code, out, _ = run_cli("count", "--in", str(inst), "--k", "3", capsys=capsys)
    assert code == 0
    assert out.startswith("edges<=3:")


def test_gen_config_file(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"n": 7, "seed": 12}))
    inst = tmp_path / "inst.json"
    code, _, _ = run_cli("gen", "--config", str(cfg), "--out", str(inst), capsys=capsys)
    assert code == 0
    doc = json.loads(inst.read_text())
    assert len(doc["elements"]) == 7


def test_domset_result_file(tmp_path, capsys):
    out_path = tmp_path / "res.json"
    code, _, _ = run_cli(
        "domset", "--fixture", "star", "--method", "lp_round",
        "--seed", "3", "--out", str(out_path), capsys=capsys,
    )
    assert code == 0
    doc = json.loads(out_path.read_text())
    assert doc["method"] == "lp_round"
    assert doc["total_weight"] >= 1.0
    assert doc["seed"] == 3


def test_gallery_report(tmp_path, capsys):
    rep = tmp_path / "report.json"
    code, out, _ = run_cli(
        "gallery", "--fixture", "star", "--out", str(rep), capsys=capsys
    )
    assert code == 0
    doc = json.loads(rep.read_text())
    assert doc["edge_count"] == 5 and doc["violations"] == []


def test_missing_input_is_exit_2(capsys):
    code, _, err = run_cli("count", "--k", "2", capsys=capsys)
    assert code == 2
    assert json.loads(err)["error"] == "invalid_input"


def test_missing_file_is_exit_2(capsys):
    code, _, err = run_cli("count", "--in", "/nonexistent.json", "--k", "2", capsys=capsys)
    assert code == 2


def test_bad_k_is_exit_2(capsys):
    code, _, err = run_cli("count", "--fixture", "star", "--k", "0", capsys=capsys)
    assert code == 2


def test_node_limit_is_exit_4(capsys):
    code, _, err = run_cli(
        "domset", "--fixture", "star", "--method", "exact",
        "--node-limit", "1", capsys=capsys,
    )
    assert code == 4
    assert json.loads(err)["error"] == "resource_limit"


def test_bench_counterexample(tmp_path, capsys):
    out_path = tmp_path / "ce.csv"
    code, out, _ = run_cli(
        "bench", "--exp", "counterexample", "--n-list", "5,10",
        "--seed", "2", "--format", "csv", "--out", str(out_path), capsys=capsys,
    )
    assert code == 0
    assert out_path.exists()
    assert (tmp_path / "ce.csv.manifest.json").exists()


@pytest.mark.parametrize("threads", ["1", "8"])
def test_bench_shallow_runs(tmp_path, capsys, threads):
    out_path = tmp_path / f"sh{threads}.csv"
    code, _, _ = run_cli(
        "bench", "--exp", "shallow", "--n-list", "50,100", "--k", "2",
        "--trials", "3", "--seed", "5", "--threads", threads,
        "--format", "csv", "--out", str(out_path), capsys=capsys,
    )
    assert code == 0


def test_determinism_across_threads(tmp_path, capsys):
    paths = []
    for threads in ("1", "8"):
        p = tmp_path / f"t{threads}.csv"
        run_cli(
            "bench", "--exp", "shallow", "--n-list", "50,100", "--k", "3",
            "--trials", "4", "--seed", "11", "--threads", threads,
            "--format", "csv", "--out", str(p), capsys=capsys,
        )
        paths.append(p.read_bytes())
        man = (tmp_path / f"t{threads}.csv.manifest.json").read_bytes()
        paths.append(man)
    assert paths[0] == paths[2]
    assert paths[1] == paths[3]


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "pdhyper.cli", "vc", "--fixture", "fig4"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "size 4 found" in proc.stdout
