import json
from importlib import resources

import jsonschema
import pytest

from thetagraph.cli import run


def schema(name):
    text = resources.files("thetagraph").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, out


@pytest.mark.parametrize("argv, name", [
    (["build", "--ring", "zmod:6"], "graph"),
    (["build", "--n", "2", "--q", "2"], "graph"),
    (["stats", "--n", "3", "--q", "2"], "stats"),
    (["verify", "characterization", "--n", "2", "--q", "3"], "verification"),
    (["verify", "degrees", "--n", "3", "--q", "2"], "verification"),
    (["verify", "model", "--n", "2", "--q", "2"], "verification"),
    (["verify", "closure", "--n", "2", "--q", "2"], "verification"),
    (["hamilton", "--n", "3", "--q", "2"], "walk"),
    (["clique", "--n", "3", "--q", "2"], "clique"),
    (["dominate", "--n", "2", "--q", "3"], "domination"),
    (["tensor-check", "--left", "zmod:2", "--right", "zmod:3", "--target", "zmod:6"], "tensor"),
    (["automorphism", "--n", "2", "--q", "4", "--sigma", "1"], "automorphism"),
    (["automorphism", "--n", "2", "--q", "5", "--exotic", "1,0,2,3,4,5"], "automorphism"),
])
def test_json_outputs_match_schema(capsys, argv, name):
    code, out = call(capsys, *argv)
    assert code == 0
    jsonschema.validate(json.loads(out), schema(name))


def test_pair_labels_match_schema(capsys):
    _, out = call(capsys, "build", "--n", "2", "--q", "3")
    for label in json.loads(out)["labels"]:
        jsonschema.validate(label, schema("pair_label"))


def test_deterministic(capsys):
    first = call(capsys, "build", "--n", "3", "--q", "2")
    second = call(capsys, "build", "--n", "3", "--q", "2", "--seed", "4")
    assert first == second


def test_dot_and_text(capsys):
    code, out = call(capsys, "build", "--ring", "zmod:4", "--format", "dot")
    assert code == 0 and out.startswith("digraph") and out.count("->") == 6
    code, out = call(capsys, "hamilton", "--n", "2", "--q", "2", "--format", "text")
    assert out.startswith("cycle of 9 vertices")


def test_out_file(tmp_path, capsys):
    path = tmp_path / "g.json"
    assert run(["build", "--n", "2", "--q", "2", "--out", str(path)]) == 0
    assert json.loads(path.read_text())["n"] == 11


@pytest.mark.parametrize("argv", [
    ["build", "--ring", "zmod:7:3"],
    ["build", "--n", "2", "--q", "6"],
    ["build", "--ring", "zmod:4", "--n", "2"],
    ["hamilton", "--n", "2"],
    ["build", "--n", "5", "--q", "2", "--cap", "1000"],
    ["automorphism", "--n", "2", "--q", "2", "--matrix", "1,1;1,1"],
    ["automorphism", "--n", "3", "--q", "2", "--exotic", "1,0,2"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert run(argv) == 2
