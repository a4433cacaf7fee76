import json

import pytest

from grovekit.cli import main
from grovekit.ring import parse

EXAMPLE_37 = (
    "x1^2*x2 + x1^2*x3 + x1^2*x4 + x1*x2^2 + x1*x2*x3 + x1*x2*x4 + x2^2*x3 + x2^2*x4"
)
SIX = "x2^2*x3 + x1*x2*x3 + x1^2*x3 + x1^2*x2"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_poly_commands(capsys):
    code, out, _ = run(capsys, "poly", "schubert", "--perm", "3,2,1")
    assert code == 0 and out == "x1^2*x2\n"
    code, out, _ = run(capsys, "poly", "grove", "--forest", "e")
    assert out == "1\n"
    code, out, _ = run(capsys, "poly", "grove", "--forest", "2,2,4", "--beta", "sym")
    assert out.startswith(EXAMPLE_37 + " + b*x1^2*x2^2")
    code, out, _ = run(capsys, "poly", "grove", "--forest", "2,2,4", "--beta", "0")
    assert out.strip() == EXAMPLE_37
    code, out, _ = run(capsys, "poly", "forest", "--forest", "2,2,4")
    assert out.strip() == EXAMPLE_37
    code, out, _ = run(capsys, "poly", "grothendieck", "--perm", "1,3,2")
    assert out.strip() == "x1 + x2 + b*x1*x2"
    code, out, _ = run(capsys, "poly", "multifund", "--alpha", "1", "--n", "2")
    assert out.strip() == "x1 + x2 + b*x1*x2"


def test_poly_json_round_trips(capsys):
    code, out, _ = run(capsys, "poly", "grove", "--forest", "2,3", "--format", "json")
    data = json.loads(out)
    assert data["schema"] == "grove-kit/1"
    assert data["index"] == {"word": [2, 3]}
    assert str(parse(data["polynomial"])) == data["polynomial"]


def test_expand_commands(capsys):
    code, out, _ = run(capsys, "expand", "grove", "--n", "4", "--beta", "1", "--input", SIX)
    assert code == 0
    assert out.splitlines() == ["2,2,3 -> 1", "1,1,2,3 -> -2", "1,2,2,3 -> -1", "# reconstructs: yes"]
    code, out, _ = run(capsys, "expand", "forest", "--n", "2", "--input", "x1 + x2")
    assert out.splitlines()[0] == "2 -> 1"
    code, out, _ = run(capsys, "expand", "grove", "--n", "1", "--input", "7")
    assert out.splitlines()[0] == "e -> 7"


def test_expand_json(capsys):
    code, out, _ = run(capsys, "expand", "multifund", "--n", "3", "--beta", "1", "--input", SIX,
                       "--format", "json")
    data = json.loads(out)
    assert data["reconstructs"] is True and data["basis"] == "multifund"
    assert [(t["index"]["composition"], t["coeff"]) for t in data["terms"]] == [
        ([2, 1], "1"), ([1, 2, 1], "-1"), ([2, 1, 1], "-2")]


@pytest.mark.parametrize("argv", [
    ["poly", "grove", "--forest", "x"],
    ["poly", "grove"],
    ["poly", "multifund", "--alpha", "1,1,1,1", "--n", "3"],
    ["expand", "grove", "--n", "2", "--input", "x1 +"],
    ["expand", "multifund", "--n", "2", "--input", "x1"],
    ["expand", "grove", "--n", "1", "--input", "x2"],
    ["poly", "grove", "--forest", "1", "--beta", "two"],
    ["nonsense"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_verify_and_determinism(capsys):
    code, first, _ = run(capsys, "verify", "duality", "--max-size", "2", "--n", "3")
    assert code == 0 and "PASS" in first
    code, second, _ = run(capsys, "verify", "duality", "--max-size", "2", "--n", "3")
    assert first == second
    code, out, _ = run(capsys, "verify", "operators", "--seed", "3", "--count", "5", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["ok"] and data["reports"][0]["failures"] == []


def test_verify_all_small(capsys):
    code, out, _ = run(capsys, "verify", "all", "--max-size", "2", "--n", "3", "--count", "20")
    assert code == 0
    assert [line.split(":")[0] for line in out.splitlines()] == [
        "operators", "duality", "characterization", "positivity", "multifund"]


def test_experiment(capsys):
    code, out, _ = run(capsys, "experiment", "forest-to-grove-signs", "--max-size", "0")
    assert code == 0
    assert len(out.splitlines()) == 2 and out.splitlines()[1].split()[:4] == ["e", "e", "0", "1"]
    code, out, _ = run(capsys, "experiment", "forest-to-grove-signs", "--max-size", "2", "--n", "3",
                       "--format", "json")
    rows = json.loads(out)["rows"]
    assert {"F": "3", "G": "2,3", "shift": 1, "coeff": -1, "alternating": True} in rows
    assert "PASS" not in out and "FAIL" not in out
