import json
import subprocess
import sys

import pytest

from hypermoment import cli
from hypermoment.core import family_f, hypercycle, hyperpath, hyperstar, to_json, to_text


def _run(argv, capsys):
    code = cli.main(["--no-timing"] + argv)
    out = capsys.readouterr().out
    return code, json.loads(out)["report"]


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, h in [("p4", hyperpath(4, 3)), ("s4", hyperstar(4, 3)), ("c3", hypercycle(3, 3))]:
        p = tmp_path / f"{name}.json"
        p.write_text(to_json(h))
        paths[name] = str(p)
    t = tmp_path / "f32.txt"
    t.write_text(to_text(family_f(3, 2, 3)))
    paths["f32"] = str(t)
    return paths


def test_gen_star(capsys):
    code, rep = _run(["gen", "--family", "hyperstar", "--m", "3", "--q", "4"], capsys)
    assert code == 0 and rep["status"] == "ok"
    assert rep["result"]["n"] == 9 and len(rep["result"]["edges"]) == 4


def test_gen_power(capsys):
    code, rep = _run(["gen", "--family", "power", "--m", "4", "--graph", "[[0,1],[1,2]]"], capsys)
    assert code == 0 and rep["result"]["n"] == 7


def test_compare(files, capsys):
    code, rep = _run(["compare", files["p4"], files["s4"], "--dmax", "9"], capsys)
    assert code == 0
    assert rep["result"]["relation"] == "Before"
    assert rep["result"]["deciding_index"] == 6
    assert rep["result"]["first"][6] == ["6", "4896"]


def test_moments(files, capsys):
    code, rep = _run(["moments", files["c3"], "--dmax", "9"], capsys)
    assert code == 0
    values = dict(rep["result"]["moments"])
    assert (values["3"], values["6"], values["9"]) == ("216", "540", "1836")


def test_census_and_zagreb_text_input(files, capsys):
    code, rep = _run(["census", files["f32"]], capsys)
    assert rep["result"] == {"P1": "5", "P2": "8", "P3": "4", "S3": "4"}
    code, rep = _run(["zagreb", files["f32"]], capsys)
    assert rep["result"]["zagreb"] == "31"
    assert rep["result"]["structure"] == "linear-unicyclic(3)"


def test_enumerate_and_order(files, capsys):
    code, rep = _run(["enumerate", "--family", "hypertrees", "--m", "3", "--q", "4", "--binary"], capsys)
    assert code == 0 and rep["result"]["count"] == "2"
    code, rep = _run(["order", "--family", "unicyclic", "--m", "3", "--e", "3", "--f", "2"], capsys)
    assert code == 0 and rep["result"]["member_count"] == "8"
    code, rep = _run(["order", files["s4"], files["p4"]], capsys)
    first = rep["result"]["blocks"][0]["members"][0]
    assert first["edges"] == hyperpath(4, 3).sorted_edges()


def test_transform_spec_and_reduce(files, capsys):
    spec = json.dumps({"kind": "T1", "edge": [2, 3, 4], "u": 2, "v": 4})
    code, rep = _run(["transform", files["p4"], "--spec", spec], capsys)
    assert code == 0
    assert rep["result"]["predicted_delta"] == rep["result"]["actual_delta"] == "2"
    code, rep = _run(["transform", files["p4"], "--reduce", "star-ward"], capsys)
    assert rep["result"]["final"]["edges"] == [[0, 1, 6], [2, 3, 6], [4, 5, 6], [6, 7, 8]]
    code, rep = _run(["transform", files["p4"], "--sites", "T1"], capsys)
    assert rep["result"]["count"] == "2"


def test_transform_precondition_exit_code(files, capsys):
    spec = json.dumps({"kind": "T2", "u": 2, "v": 4})
    code, rep = _run(["transform", files["p4"], "--spec", spec], capsys)
    assert code == 3
    assert rep["error"]["kind"] == "precondition"


def test_invalid_inputs_exit_two(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"m": 3, "edges": [[0, 1, 2], [0, 1, 2]]}')
    assert _run(["moments", str(bad)], capsys)[0] == 2
    junk = tmp_path / "junk.json"
    junk.write_text("{not json")
    assert _run(["census", str(junk)], capsys)[0] == 2
    assert _run(["census", str(tmp_path / "missing.json")], capsys)[0] == 2
    assert _run(["transform", str(bad)], capsys)[0] == 2


def test_scope_errors_exit_three(capsys):
    assert _run(["enumerate", "--family", "hypertrees", "--m", "3", "--q", "50"], capsys)[0] == 3
    assert _run(["gen", "--family", "hypercycle", "--m", "3", "--e", "2"], capsys)[0] == 3


def test_reports_are_deterministic(files, capsys):
    argv = ["order", "--family", "hypertrees", "--m", "3", "--q", "5"]
    cli.main(argv)
    a = json.loads(capsys.readouterr().out)
    cli.main(argv)
    b = json.loads(capsys.readouterr().out)
    assert "wall_time_s" in a
    assert a["report"] == b["report"]


def test_flags_after_subcommand(files, capsys):
    code = cli.main(["census", files["c3"], "--format", "text"])
    out = capsys.readouterr().out
    assert code == 0 and out.startswith("command: census")


def test_verify_small_caps(capsys):
    caps = json.dumps({"trees": {"3": 4}, "unicyclic": [[3, 1]], "engine_tree_q": 3,
                       "engine_unicyclic_e": [3], "engine_unicyclic_f": 1, "oracle_tree_q": 4})
    code, rep = _run(["verify", "--suite", "trees", "--caps", caps], capsys)
    assert code == 0 and rep["result"]["failed"] == "0"
    names = [c["name"] for c in rep["result"]["checks"]]
    assert names == sorted(names)


def test_stdin_and_module_entry(files):
    text = to_text(hyperstar(3, 3))
    proc = subprocess.run([sys.executable, "-m", "hypermoment.cli", "--no-timing", "zagreb", "-"],
                          input=text, capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["report"]["result"]["zagreb"] == "15"


def test_gen_writes_file(tmp_path, capsys):
    out = tmp_path / "e32.json"
    code, _ = _run(["gen", "--family", "E", "--m", "3", "--e", "3", "--f", "2", "--out", str(out)], capsys)
    assert code == 0
    code, rep = _run(["zagreb", str(out)], capsys)
    assert rep["result"]["zagreb"] == "25"
