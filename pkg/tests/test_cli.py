import csv
import io
import json
from fractions import Fraction

import pytest

from blocksort.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv)
    assert code == 0
    data = json.loads(text)
    assert data["schema"] == "blocksort/1"
    return data


def test_distance_running_example():
    data = run_json("distance", "3417562")
    assert data == {"schema": "blocksort/1", "input": "3417562", "c_graph": 4, "distance": 2}


def test_sort_certificate():
    data = run_json("sort", "4213")
    assert data["distance"] == 2
    assert len(data["moves"]) == 2
    assert data["states"][0] == "4 2 1 3"
    assert data["states"][-1] == "1 2 3 4"


def test_graph():
    data = run_json("graph", "1 2 3 4")
    assert data["c"] == 5
    assert len(data["black_edges"]) == len(data["gray_edges"]) == 5


def test_malformed_permutation_is_usage_error(capsys):
    code, _ = run("distance", "12a4")
    assert code == 1
    assert "'a'" in capsys.readouterr().err
    code, _ = run("sort", "1 1 2")
    assert code == 1


def test_bad_flag_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["hultman"])
    assert exc.value.code == 1


def test_hultman_csv():
    code, text = run("hultman", "--n", "4", "--method", "product", "--jobs", "1")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert {int(r["k"]): int(r["count"]) for r in rows} == {1: 8, 2: 0, 3: 15, 4: 0, 5: 1}
    assert {r["method"] for r in rows} == {"product"}


def test_hultman_out_of_range(capsys):
    code, _ = run("hultman", "--n", "12", "--method", "direct")
    assert code == 1
    assert "1..8" in capsys.readouterr().err


def test_table():
    code, text = run("table", "--max-n", "4")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert len(rows) == sum(n + 1 for n in range(1, 5))
    assert [int(r["count"]) for r in rows if r["n"] == "3"] == [0, 5, 0, 1]


def test_prob_exact():
    data = run_json("prob", "--h", "4", "--exact", "--pair", "1,3")
    assert data["value"] == "7/18" and data["formula"] == "7/18" and data["agrees"]
    data = run_json("prob", "--h", "6")
    assert data["method"] == "exhaustive_reduced"
    assert data["value"] == "9/20"


def test_prob_exact_out_of_range(capsys):
    code, _ = run("prob", "--h", "12", "--exact")
    assert code == 1
    assert "2..10" in capsys.readouterr().err


def test_prob_montecarlo_round_trip():
    data = run_json("prob", "--h", "9", "--trials", "5000", "--seed", "17", "--jobs", "1")
    assert data["method"] == "montecarlo"
    assert data["seed"] == 17 and data["trials"] == 5000
    again = run_json(
        "prob", "--h", str(data["h"]), "--trials", str(data["trials"]), "--seed", str(data["seed"]),
        "--jobs", str(data["jobs"]), "--pair", ",".join(map(str, data["pair"])),
    )
    assert again == data


def test_seed_from_environment(monkeypatch):
    monkeypatch.setenv("BLOCKSORT_SEED", "31")
    data = run_json("prob", "--h", "15", "--trials", "1000", "--jobs", "1")
    assert data["seed"] == 31


def test_averages_csv():
    code, text = run("averages", "--max-n", "5", "--brute-max", "4")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert rows[3]["a_exact"] == "7/3"
    assert rows[2]["b_exact"] == "5/6"
    assert rows[2]["b_float"] == "0.83333333333333333333"
    assert [r["brute_checked"] for r in rows] == ["true"] * 4 + ["false"]
    assert Fraction(rows[4]["a_exact"]) == Fraction(29, 12)


def test_verify_smoke():
    code, text = run("verify", "--level", "smoke", "--seed", "3", "--jobs", "1")
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0] == "level=smoke seed=3 jobs=1"
    assert len(lines) == 9 and all(l.startswith("PASS") for l in lines[1:])
    assert run("verify", "--level", "smoke", "--seed", "3", "--jobs", "1")[1] == text


def test_verify_failure_exit_code(monkeypatch):
    import blocksort.verify as v

    monkeypatch.setattr(v, "CHECKS", [lambda b, s, j: v.CheckResult("broken", False, "forced")])
    code, text = run("verify", "--level", "smoke", "--jobs", "1")
    assert code == 2
    assert "FAIL broken" in text
