import json
import subprocess
import sys

import pytest

from braided_casimir import __version__
from braided_casimir.cache import CACHE_ENV, CacheStore, cache_key
from braided_casimir.cli import main


def run_json(capsys, argv):
    code = main(argv + ["--format", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_omega_vector(capsys):
    code, data = run_json(capsys, ["omega", "--n", "2", "--lambda", "1,0"])
    assert code == 0
    assert data["matrix"] == [["E[1,1]", "E[2,1]"], ["E[1,2]", "E[2,2]"]]


def test_sdet_hc_matches_closed_form(capsys):
    code, data = run_json(capsys, ["sdet", "--n", "2", "--lambda", "3,1", "--hc"])
    assert code == 0
    assert data["matches_gl2_formula"] is True
    assert all(data["centrality_report"].values())


def test_hc_command(capsys):
    code = main(["hc", "--n", "2", "--element", "E[1,1]E[2,2] - E[2,1]E[1,2] - E[1,1]"])
    assert code == 0
    assert capsys.readouterr().out.strip() == "chi = mu1*mu2 - mu1"


def test_hc_of_non_central_element_fails(capsys):
    assert main(["hc", "--n", "2", "--element", "E[1,2]"]) == 1


def test_capelli_command(capsys):
    code, data = run_json(capsys, ["capelli", "--n", "2", "--lambda", "1,1", "--hc"])
    assert code == 0
    assert all(data["centrality_report"].values())
    assert "hc" in data


def test_charpoly_with_explicit_samples(capsys):
    samples = "4,0;5,1;6,3;3,-2;7,0;2,-3;8,5;1,-6"
    code, data = run_json(capsys, ["charpoly", "--n", "2", "--lambda", "1,0", "--mu", samples])
    assert code == 0
    assert len(data["used"]) + len(data["discarded"]) == 8


@pytest.mark.parametrize(
    "argv",
    [
        ["omega", "--n", "2", "--lambda", "1,2"],
        ["omega", "--n", "2", "--lambda", "1,0,0"],
        ["omega", "--n", "1", "--lambda", "1"],
        ["omega", "--n", "2", "--lambda", "a,b"],
        ["bogus"],
        ["omega", "--n", "2"],
        ["sdet", "--n", "2", "--lambda", "1,0", "--parallelism", "0"],
        ["hc", "--n", "2", "--element", "E[[1"],
        ["capelli", "--n", "2", "--lambda", "0,0"],
        ["verify", "--n", "3", "--suite", "gl2"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv) == 2


def test_resource_bounds_exit_3(capsys):
    assert main(["capelli", "--n", "3", "--lambda", "9,0,0"]) == 3
    assert main(["sdet", "--n", "2", "--lambda", "3,0", "--term-bound", "2"]) == 3


def test_verify_exit_codes(capsys):
    assert main(["verify", "--n", "2", "--suite", "rtt"]) == 0
    assert main(["verify", "--n", "2", "--suite", "plethysm"]) == 1
    out = capsys.readouterr().out
    assert "FAIL  plethysm" in out and "witness" in out


def test_json_is_deterministic_across_parallelism(capsys):
    outs = []
    for p in ("1", "3"):
        main(["sdet", "--n", "3", "--lambda", "1,1,0", "--hc", "--format", "json", "--parallelism", p])
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]


def test_conjecture_scan_is_non_gating(capsys):
    code, data = run_json(capsys, ["conjecture-scan", "--n", "3"])
    assert code == 0
    assert data["experimental"] is True
    assert [s["lambda"] for s in data["scans"]] == [[1, 1, 0], [2, 0, 0]]


def test_cache_round_trip(tmp_path, capsys, monkeypatch):
    path = tmp_path / "cache.json"
    monkeypatch.setenv(CACHE_ENV, str(path))
    code, first = run_json(capsys, ["sdet", "--n", "2", "--lambda", "2,0", "--hc"])
    assert code == 0 and path.exists()
    stored = json.loads(path.read_text())
    assert cache_key("sdet", 2, (2, 0)) in stored
    code, second = run_json(capsys, ["sdet", "--n", "2", "--lambda", "2,0", "--hc"])
    assert first == second


def test_cache_store_semantics(tmp_path, caplog):
    path = tmp_path / "c.json"
    store = CacheStore(str(path))
    assert store.get("k") is None
    store.put("k", {"a": 1})
    assert store.get("k") == {"a": 1}
    assert CacheStore(str(path), version=__version__ + ".post1").get("k") is None
    path.write_text("{not json")
    assert store.get("k") is None
    assert "corrupt" in caplog.text
    store.put("k2", [1, 2])
    assert store.get("k2") == [1, 2]
    assert not list(tmp_path.glob(".cache-*"))


def test_console_entry_point_runs():
    proc = subprocess.run([sys.executable, "-m", "braided_casimir.cli", "omega", "--lambda", "1,0"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip().splitlines()[0] == "[E[1,1], E[2,1]]"
