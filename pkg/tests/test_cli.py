import json

import pytest

from dcminor.cli import RunOptions, main, run
from dcminor.cockade import CockadeSpec, GlueStep
from dcminor.graph import complement, complete_multipartite, cycle, petersen
from dcminor.graph6 import to_graph6


def test_run_writes_schema(tmp_path):
    path = tmp_path / "r.json"
    assert run(str(path), ["k6-free-deletions"]) == 0
    data = json.loads(path.read_text())
    assert set(data) >= {"suite", "version", "items", "elapsed_ms"}
    assert set(data["items"][0]) == {"id", "claim", "paper_ref", "verdict", "witness"}


def test_run_multiple_suites_writes_list(tmp_path):
    path = tmp_path / "r.json"
    assert run(str(path), ["kt-plus-k1"], RunOptions(t=None)) == 0
    assert [d["suite"] for d in json.loads(path.read_text())] == [f"kt-plus-k1/t={t}" for t in range(1, 5)]


def test_run_exit_codes(tmp_path):
    assert run(None, ["nope"]) == 2
    assert run(str(tmp_path / "missing" / "r.json"), ["k6-free-deletions"]) == 3
    assert run(None, ["extremal"], RunOptions(n_max=5, threshold_offset=-1)) == 1
    assert run(None, ["kt-plus-k1"], RunOptions(t=5)) == 2  # needs --long


def test_reports_are_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(str(a), ["extremal"], RunOptions(n_max=5))
    run(str(b), ["extremal"], RunOptions(n_max=5))
    strip = lambda p: {k: v for k, v in json.loads(p.read_text()).items() if k != "elapsed_ms"}
    assert strip(a) == strip(b)


def test_main_verify_and_search(tmp_path, capsys):
    assert main(["verify", "kt-plus-k1", "--t", "3", "--report", str(tmp_path / "x.json")]) == 0
    assert "verified" in capsys.readouterr().out
    assert main(["search", "double-critical", "--n-max", "5"]) == 0
    assert main(["verify", "extremal", "--n-max", "5", "--self-test"]) == 1
    with pytest.raises(SystemExit) as info:
        main(["verify", "bogus"])
    assert info.value.code == 2


def test_main_queries(tmp_path, capsys):
    assert main(["chromatic", to_graph6(petersen())]) == 0
    assert json.loads(capsys.readouterr().out)["chromatic_number"] == 3
    assert main(["minor", to_graph6(petersen()), "--kt", "6"]) == 0
    assert json.loads(capsys.readouterr().out)["minor"] is None
    assert main(["minor", to_graph6(petersen()), "--hadwiger"]) == 0
    assert json.loads(capsys.readouterr().out)["hadwiger_number"] == 5
    assert main(["minor", to_graph6(complement(petersen())), "--kt", "6", "--plus-k1"]) == 0
    assert json.loads(capsys.readouterr().out)["minor"] is None


def test_main_checks(capsys):
    k = to_graph6(complete_multipartite([1, 2, 2, 2, 2]))
    assert main(["check", "pair-augmentation", k]) == 0
    assert json.loads(capsys.readouterr().out)["via"] == "isomorphic-K12222"
    c = to_graph6(cycle(10))
    assert main(["check", "set-augmentation", c, "--A", "0,1,2,3,4", "--B", "5,6,7,8,9"]) == 0
    assert json.loads(capsys.readouterr().out)["tag"] == "cross-edge"
    assert main(["check", "set-augmentation", c, "--A", "0,1,2,3", "--B", "5,6,7,8,9"]) == 2
    assert main(["chromatic", "not graph6!"]) == 2


def test_main_cockade(tmp_path, capsys):
    spec = CockadeSpec(complete_multipartite([2] * 5), 5, (GlueStep((0, 2, 4, 6, 8), (0, 2, 4, 6, 8)),))
    path = tmp_path / "c.json"
    path.write_text(json.dumps(spec.to_json()))
    assert main(["cockade", "build", str(path)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["n"] == 15 and out["edges"] == 6 * 15 - 20
    assert main(["cockade", "build", str(tmp_path / "none.json")]) == 3
