import json

import pytest

from bpdrsk.cli import main

from conftest import EXAMPLE


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_growth_both(capsys):
    code, out, _ = run(capsys, "growth", "--biword", EXAMPLE, "--method", "both")
    assert code == 0
    assert "METHODS AGREE" in out
    assert "12345    12435    12534    13524    15324    25314" in out


def test_growth_json(capsys):
    code, out, _ = run(capsys, "growth", "--biword", EXAMPLE, "--render", "json")
    data = json.loads(out)
    assert code == 0 and data["chain"] == ["12345", "12435", "13425", "25314"]
    assert data["pipe_dream"] == [[1, 1], [1, 3], [1, 4], [2, 1], [3, 1]]


def test_insert_empty(capsys):
    code, out, _ = run(capsys, "insert", "--biword", "/")
    assert code == 0 and out.splitlines() == ["perm 1", "r"]


def test_insert_json(capsys):
    code, out, _ = run(capsys, "--json", "insert", "--biword", EXAMPLE)
    data = json.loads(out)
    assert [s["perm"] for s in data["steps"]] == ["1243", "12534", "13524", "15324", "25314"]
    assert data["steps"][0]["path"][0] == [1, 1]


def test_insert_trace(capsys):
    code, out, _ = run(capsys, "insert", "--biword", "1/3", "--trace")
    assert code == 0 and "insert 1/3  ->  1243" in out


def test_knuth_pair(capsys):
    code, out, _ = run(capsys, "knuth", "--pair", "1,2/3,3", "1,2/3,2")
    assert code == 0 and out.strip() == "NOT CONNECTED"
    code, out, _ = run(capsys, "knuth", "--pair", "1,3,2/3,3,3", "1,3,2/3,3,2")
    assert out.strip() == "CONNECTED"


def test_knuth_class(capsys):
    code, out, _ = run(capsys, "knuth", "--class", "1,3,2/3,3,3", "--max", "1000")
    assert code == 0 and "1,3,2/3,3,2" in out and out.strip().endswith("5 words")


def test_jdt_round_trip_through_files(tmp_path, capsys):
    code, out, _ = run(capsys, "--json", "render", "--biword", EXAMPLE)
    grid_file = tmp_path / "d.json"
    grid_file.write_text(out)
    code, out, _ = run(capsys, "--json", "jdt", "--grid", str(grid_file))
    step = json.loads(out)["steps"][0]
    assert code == 0 and step["pop"] == [4, 1] and step["perm"] == "2431"
    after = tmp_path / "after.json"
    after.write_text(json.dumps({"rows": step["grid"]}))
    code, out, _ = run(capsys, "--json", "rjdt", "--grid", str(after), "--row", "1", "--col", "4")
    assert code == 0 and json.loads(out)["steps"][0]["perm"] == "25314"


def test_rect(capsys):
    code, out, _ = run(capsys, "rect", "--biword", EXAMPLE)
    assert code == 0 and "I = [4, 3, 1]" in out and "perm 1342\n" in out


def test_render_pipe_dream(capsys):
    code, out, _ = run(capsys, "render", "--what", "pipe-dream", "--biword", EXAMPLE)
    assert code == 0 and out.splitlines()[0] == "+ . + +" and "perm 25314" in out


def test_verify_and_replay(tmp_path, capsys):
    report = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--suite", "rect-strip", "--max-k", "2", "--max-len", "3",
                       "--out", str(report))
    assert code == 0 and "rect-strip: 25 cases" in out
    data = json.loads(report.read_text())
    data[0]["failures"] = [{"input": EXAMPLE, "message": "recorded earlier"}]
    report.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", "--replay", str(report))
    assert code == 0 and "rect-strip: 1 cases" in out


@pytest.mark.parametrize("argv", [
    ["insert", "--biword", "2/1"],
    ["growth", "--biword", "nonsense"],
    ["verify", "--suite", "nope"],
    ["rjdt", "--biword", EXAMPLE, "--row", "1", "--col", "1"],
    ["jdt", "--biword", "/"],
    ["jdt", "--grid", "/does/not/exist.json"],
])
def test_input_errors_exit_1(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and err.startswith("error:")


def test_breach_exits_2(capsys, monkeypatch):
    import bpdrsk.cli as cli
    from bpdrsk.growth import growth_by_rules
    from bpdrsk.perm import Permutation

    def skewed(q):
        g = growth_by_rules(q)
        g.cells[0][-1] = Permutation.parse("312")
        return g

    monkeypatch.setattr(cli, "growth_by_insertion", skewed)
    code, out, err = run(capsys, "growth", "--biword", "1/1", "--method", "both")
    assert code == 2 and "METHODS DISAGREE" in out


def test_output_is_deterministic(capsys):
    first = run(capsys, "growth", "--biword", EXAMPLE, "--method", "both")
    second = run(capsys, "growth", "--biword", EXAMPLE, "--method", "both")
    assert first == second
