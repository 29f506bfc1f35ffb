import json

import pytest

from abpart.cli import instance_from_json, instance_to_json, run
from abpart.generators import fixture


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def test_solve_fixture(capsys):
    code, out, _ = call(capsys, "solve", "--fixture", "petersen", "--strict")
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "feasible" and rep["deficiency"] == 0
    assert sorted(rep["A"] + rep["B"]) == list(range(10))


def test_solve_infeasible_and_strict_abort(capsys):
    code, out, _ = call(capsys, "solve", "--fixture", "c5-tight-degree")
    assert code == 1 and json.loads(out)["status"] == "infeasible"
    code, out, _ = call(capsys, "solve", "--fixture", "c5-tight-degree", "--strict")
    assert code == 2 and json.loads(out)["violations"]


def test_solve_unknown(capsys):
    code, out, _ = call(capsys, "solve", "--fixture", "triangle-ab2", "--max-exact", "0")
    assert code == 1 and json.loads(out)["status"] == "unknown"


def test_check(capsys):
    code, out, _ = call(capsys, "check", "--fixture", "k23")
    res = json.loads(out)
    assert code == 2 and not res["valid"]
    assert res["forbidden_subgraph"]["kind"] == "K23"
    code, out, _ = call(capsys, "check", "--fixture", "robertson")
    assert code == 0 and json.loads(out) == {"valid": True, "violations": [], "forbidden_subgraph": None}


def test_oracle_and_verify(capsys, tmp_path):
    code, out, _ = call(capsys, "oracle", "--fixture", "petersen")
    verdict = json.loads(out)
    assert code == 0 and verdict["status"] == "feasible"
    inst = write(tmp_path, "p.json", instance_to_json(fixture("petersen")))
    part = write(tmp_path, "a.json", {"A": verdict["A"]})
    code, out, _ = call(capsys, "verify", inst, "--partition", part)
    assert code == 0 and json.loads(out)["feasible"]
    part = write(tmp_path, "bad.json", {"A": [0, 1]})
    code, out, _ = call(capsys, "verify", inst, "--partition", part)
    res = json.loads(out)
    assert code == 1 and res["deficiency"] > 0 and res["shortfall"]
    code, out, _ = call(capsys, "oracle", "--fixture", "triangle-ab2")
    assert code == 1 and json.loads(out)["status"] == "infeasible"


def test_gen_round_trip(capsys, tmp_path):
    code, out, _ = call(capsys, "gen", "--family", "girth5", "--n", "14", "--seed", "4")
    assert code == 0
    obj = json.loads(out)
    inst = instance_from_json(obj)
    assert instance_to_json(inst) == obj
    code2, out2, _ = call(capsys, "gen", "--family", "girth5", "--n", "14", "--seed", "4")
    assert out2 == out
    path = write(tmp_path, "g.json", obj)
    code, out, _ = call(capsys, "solve", path)
    assert code in (0, 1) and json.loads(out)["status"] in ("feasible", "infeasible", "unknown")


def test_gen_warns_without_admissible_spec(capsys):
    code, out, err = call(capsys, "gen", "--family", "hypothesis", "--n", "3", "--seed", "0")
    assert code == 0 and "warning" in err
    assert json.loads(out)["a"] == [2, 2, 2]


@pytest.mark.parametrize(
    "obj",
    [
        [],
        {"n": 2, "edges": [], "a": [2]},
        {"n": 2, "edges": [[0, 1]], "a": [2, 2], "b": [2, 2]},
        {"n": 2, "edges": [[1, 0, 1]], "a": [2, 2], "b": [2, 2]},
        {"n": 2, "edges": [[0, 1, 0]], "a": [2, 2], "b": [2, 2]},
        {"n": 2, "edges": [[0, 1, 1], [0, 1, 1]], "a": [2, 2], "b": [2, 2]},
        {"n": 2, "edges": [], "a": [2], "b": [2, 2]},
        {"n": "2", "edges": [], "a": [2, 2], "b": [2, 2]},
    ],
)
def test_bad_input_exits_2(capsys, tmp_path, obj):
    path = write(tmp_path, "bad.json", obj)
    code, _, err = call(capsys, "solve", path)
    assert code == 2 and err.startswith("error:")


def test_missing_file_and_fixture(capsys, tmp_path):
    assert call(capsys, "solve", str(tmp_path / "none.json"))[0] == 2
    assert call(capsys, "solve", "--fixture", "nope")[0] == 2
    assert call(capsys, "solve")[0] == 2
