import json
import subprocess
import sys

import numpy as np
import pytest

from coinkit import cli
from coinkit.convkit import INF
from coinkit.corekit import dp_all_capacities, dp_all_targets, make_coins, normalize_items
from coinkit.cli import main, run


@pytest.fixture
def files(tmp_path):
    (tmp_path / "text").write_bytes(b"ababab")
    (tmp_path / "dict").write_bytes(b"ab\nabab\n")
    (tmp_path / "coins").write_text("1 5\n10 25\n")
    (tmp_path / "items").write_text("2 3\n3 5\n")
    (tmp_path / "bad").write_text("1 5\n10 x7\n")
    (tmp_path / "baditems").write_text("2 3\n3\n")
    return tmp_path


def parse_lines(out):
    return [int(line.split()[1]) for line in out.splitlines()]


def test_coins_all_t43(files):
    code, out = run(["coins-all", "--algo", "t43", "--coins", str(files / "coins"), "--target", "12"])
    assert code == 0
    want = dp_all_targets(make_coins([1, 5, 10, 25]), 12)
    assert len(out.splitlines()) == 13
    assert parse_lines(out) == want.tolist()


def test_coins_single_infeasible():
    assert run(["coins-single", "--algo", "fftu", "--inline", "3 5", "--target", "7"]) == (1, "-1\n")


def test_wordbreak(files):
    assert run(["wordbreak", "--text", str(files / "text"), "--dict", str(files / "dict")]) == (0, "2\n")


def test_validation_diagnostics(files, capsys):
    assert main(["coins-all", "--coins", str(files / "bad"), "--target", "5"]) == 2
    assert ":2:4:" in capsys.readouterr().err
    assert main(["knapsack-all", "--items", str(files / "baditems"), "--target", "5"]) == 2
    assert ":2:1:" in capsys.readouterr().err
    assert main(["coins-all", "--inline", "3", "--target", "-1"]) == 2
    assert main(["coins-all", "--inline", "3", "--target", "4", "--algo", "nope"]) == 2
    assert main(["coins-all", "--coins", str(files / "missing"), "--target", "4"]) == 2


@pytest.mark.parametrize("algo", sorted(cli.COINS_ALL))
def test_coins_roundtrip(algo):
    code, out = run(["coins-all", "--algo", algo, "--inline", "3 7 11 20", "--target", "300"])
    d = dp_all_targets(make_coins([3, 7, 11, 20]), 300)
    assert code == 0
    assert [INF if x < 0 else x for x in parse_lines(out)] == d.tolist()


@pytest.mark.parametrize("algo", sorted(cli.KNAPSACK_ALL))
def test_knapsack_roundtrip(files, algo):
    code, out = run(["knapsack-all", "--algo", algo, "--items", str(files / "items"), "--target", "50"])
    assert parse_lines(out) == dp_all_capacities(normalize_items([(2, 3), (3, 5)], 50), 50).tolist()


@pytest.mark.parametrize("algo", sorted(cli.COINS_SINGLE))
def test_coins_single_algos(algo):
    code, out = run(["coins-single", "--algo", algo, "--inline", "3 7 11 20", "--target", "301", "--format", "json"])
    doc = json.loads(out)
    assert code == 0
    assert doc["targets"] == [{"j": 301, "count": int(dp_all_targets(make_coins([3, 7, 11, 20]), 301)[301])}]
    assert doc["algo"] == algo


@pytest.mark.parametrize("algo", sorted(cli.KNAPSACK_SINGLE))
def test_knapsack_single_algos(algo):
    code, out = run(["knapsack-single", "--algo", algo, "--inline", "2 3, 3 5", "--target", "7"])
    assert (code, out) == (0, "11\n")


def test_json_null_for_infeasible():
    code, out = run(["coins-all", "--inline", "3 5", "--target", "8", "--format", "json"])
    doc = json.loads(out)
    assert [e["count"] for e in doc["targets"]] == [0, None, None, 1, None, 1, 2, None, 2]
    assert doc["params"] == {"t": 8, "n": 2, "u": 5, "sigma": 8}


def test_verify_ok(files):
    assert run(["verify", "--problem", "coins-all", "--algo", "t43", "--inline", "3 5 11", "--target", "900"]) == (0, "OK\n")
    assert run(["verify", "--problem", "knapsack-single", "--items", str(files / "items"), "--target", "99"]) == (0, "OK\n")
    assert run(["verify", "--problem", "wordbreak", "--text", str(files / "text"), "--dict", str(files / "dict")]) == (0, "OK\n")
    assert run(["verify", "--problem", "coins-all", "--inline", "3", "--target", "0"]) == (0, "OK\n")


def test_verify_reports_injected_fault(monkeypatch):
    monkeypatch.setattr(cli, "FAULT_INDEX", 17)
    code, out = run(["verify", "--problem", "coins-all", "--algo", "algo1", "--inline", "3 5", "--target", "40"])
    assert code == 1
    assert out.startswith("MISMATCH at index 17")


def test_verify_budget():
    args = ["verify", "--inline", "3 5", "--target", "1000", "--oracle-budget", "10"]
    assert main(args) == 2


def test_bench_csv():
    code, out = run(["bench", "--algo", "algo1,dp", "--sizes", "1000,4000", "--u", "50", "--n", "10"])
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "algo,n,t,u,sigma,wall_nanos,work_counter"
    assert [l.split(",")[:3] for l in lines[1:]] == [["algo1", "10", "1000"], ["dp", "10", "1000"], ["algo1", "10", "4000"], ["dp", "10", "4000"]]
    assert run(["bench", "--sizes", ""]) == (0, "algo,n,t,u,sigma,wall_nanos,work_counter\n")
    assert main(["bench", "--sizes", "9,3"]) == 2


def test_bench_threads_keep_order(monkeypatch):
    monkeypatch.setenv("COINKIT_THREADS", "4")
    code, out = run(["bench", "--problem", "knapsack-all", "--algo", "algo2,tsigma,dp", "--sizes", "500,1000,2000", "--u", "40"])
    rows = [l.split(",") for l in out.splitlines()[1:]]
    assert [(r[0], r[2]) for r in rows] == [(a, t) for t in ("500", "1000", "2000") for a in ("algo2", "tsigma", "dp")]
    assert code == 0


def test_deterministic_output():
    args = ["coins-all", "--algo", "tsigma", "--inline", "4 9 13", "--target", "500", "--format", "json", "--seed", "3"]
    assert run(args) == run(args)
    b1 = [l.rsplit(",", 2)[0] + "," + l.rsplit(",", 1)[1] for l in run(["bench", "--sizes", "100,200", "--seed", "5"])[1].splitlines()]
    b2 = [l.rsplit(",", 2)[0] + "," + l.rsplit(",", 1)[1] for l in run(["bench", "--sizes", "100,200", "--seed", "5"])[1].splitlines()]
    assert b1 == b2


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "coinkit", "coins-single", "--inline", "3 5", "--target", "7"],
        capture_output=True, text=True,
    )
    assert (proc.returncode, proc.stdout) == (1, "-1\n")
