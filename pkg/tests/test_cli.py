import json

from hanoikernel import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out), err


def test_verify_single_lemma(capsys):
    code, report, err = run_json(capsys, "verify", "stab12", "--depth", "2")
    assert code == 0
    assert report["pass"] is True
    assert report["command"] == "verify"
    (result,) = report["results"]
    assert result["id"] == "stab12"
    assert result["computed"]["stab1_mod_stab2_order"] == 108
    assert "pass  stab12" in err


def test_verify_orders_output_by_id(capsys):
    code, report, _ = run_json(
        capsys, "verify", "transitive", "selfsim", "branching", "--depth", "2"
    )
    assert code == 0
    ids = [r["id"] for r in report["results"]]
    assert ids == sorted(ids)


def test_verify_list(capsys):
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0
    for lemma in ("stab12", "transrec", "ristquot"):
        assert lemma in out


def test_verify_unknown_id_is_usage_error(capsys):
    code, out, err = run(capsys, "verify", "bogus")
    assert code == 2
    assert "unknown" in err


def test_verify_without_ids_is_usage_error(capsys):
    code, _, _ = run(capsys, "verify")
    assert code == 2


def test_bad_flag_is_usage_error(capsys):
    assert cli.main(["verify", "stab12", "--nonsense"]) == 2


def test_game_act_known_example(capsys):
    code, report, _ = run_json(
        capsys, "game", "act", "--state", "2,1,3,2,2,1", "--move", "b"
    )
    assert code == 0
    assert report["results"][0]["computed"]["result"] == "2,3,3,2,2,1"


def test_game_act_invalid_state(capsys):
    code, _, err = run(capsys, "game", "act", "--state", "2,9", "--move", "b")
    assert code == 2


def test_game_solve(capsys):
    code, report, _ = run_json(capsys, "game", "solve", "--disks", "3")
    assert code == 0
    result = report["results"][0]
    assert result["computed"]["length"] == 7
    assert result["computed"]["moves"] == list(result["computed"]["word"])


def test_game_solve_resource_cap(capsys):
    code, _, err = run(capsys, "game", "solve", "--disks", "15")
    assert code == 3
    assert "resource" in err.lower()


def test_depth_cap_without_slow(capsys):
    code, _, err = run(capsys, "qtable", "--n-max", "1", "--depth", "5")
    assert code == 3


def test_qtable(capsys):
    code, report, _ = run_json(capsys, "qtable", "--n-max", "1", "--depth", "3")
    assert code == 0
    rows = {r["id"]: r["computed"] for r in report["results"]}
    assert rows == {"q(1,2)": 4, "q(1,3)": 4}


def test_kernel_report(capsys):
    code, report, _ = run_json(capsys, "kernel-report", "--n-max", "1", "--depth", "3")
    assert code == 0
    final = report["results"][-1]
    assert final["id"] == "kernel"
    assert final["computed"] == {"order": 4, "type": "Klein four-group"}
    assert report["table"]["rows"][0]["h(n,n+1)"] == 4


def test_relators(capsys):
    code, report, _ = run_json(capsys, "relators", "--max-tau", "1", "--depth", "5")
    assert code == 0
    ids = {r["id"] for r in report["results"]}
    assert {"a^2", "w1", "tau^1(w4)"} <= ids


def test_export_json(capsys):
    code, out, _ = run(capsys, "export", "portrait", "acab", "--depth", "2")
    assert code == 0
    data = json.loads(out)
    assert data["depth"] == 2 and data["labels"] == {
        "1": [1, 3, 2], "2": [2, 3, 1], "3": [1, 3, 2],
    }


def test_export_dot(capsys):
    code, out, _ = run(capsys, "export", "portrait", "a", "--depth", "1", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph")
    assert '"root" [label="(2 3)"];' in out


def test_export_bad_word(capsys):
    code, _, _ = run(capsys, "export", "portrait", "axe", "--depth", "1")
    assert code == 2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "--out", str(target), "game", "solve", "--disks", "2")
    assert code == 0
    assert out == ""
    data = json.loads(target.read_text())
    assert data["results"][0]["computed"]["length"] == 3


def test_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "verify", "index", "--depth", "2")
    _, second, _ = run(capsys, "verify", "index", "--depth", "2")
    assert first == second
