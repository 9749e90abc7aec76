import json

import pytest

from minimal_disks.cli import read_config, run_cli


def test_winding(capsys):
    assert run_cli(["winding", "--a", "0.001", "--t1", "0.1", "--t2", "0.2"]) == 0
    out = capsys.readouterr().out.split()
    assert out == ["turns", "0.79573", "limit", "0.79577"]


@pytest.mark.parametrize("argv", [
    ["theorem", "--bogus"],
    ["winding", "--a", "0.7", "--t1", "0.1", "--t2", "0.2"],
    ["mesh", "--a", "0.1", "--format", "stl"],
    ["converge", "--k-list", "3,x"],
    [],
])
def test_bad_arguments_exit_2(argv, capsys):
    assert run_cli(argv) == 2
    assert "usage" in capsys.readouterr().err


def test_domain_error_exit_2(capsys):
    assert run_cli(["slice", "--a", "0.1", "--x", "0.7"]) == 2
    assert "error" in capsys.readouterr().err


def test_theorem_defaults(tmp_path):
    out = tmp_path / "theorem.json"
    assert run_cli(["theorem", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["kind"] == "theorem" and doc["passed"]
    assert [k for k in doc["payload"] if k.startswith("item")] == [
        "item_1_blowup", "item_2_bounded_curvature", "item_3_multigraphs",
        "item_4_convergence"]


def test_verify(tmp_path):
    out = tmp_path / "v.json"
    assert run_cli(["verify", "--grid-preset", "acceptance", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    criteria = {c.get("acceptance_criterion") for c in _records(doc["payload"])}
    assert {1, 2, 3, 4, 5, 6, 7, 11, 12} <= criteria


def _records(node):
    if isinstance(node, dict):
        if "measured" in node and "pass" in node:
            yield node
        for v in node.values():
            yield from _records(v)
    elif isinstance(node, list):
        for v in node:
            yield from _records(v)


def test_converge_and_slice(tmp_path, capsys):
    out = tmp_path / "c.json"
    assert run_cli(["converge", "--k-list", "3,6", "--out", str(out)]) == 0
    assert len(json.loads(out.read_text())["payload"]["table"]) == 2
    csv = tmp_path / "s.csv"
    assert run_cli(["slice", "--a", "0.1", "--x", "0.25", "--n", "11",
                    "--out", str(csv)]) == 0
    assert len(csv.read_text().splitlines()) == 12
    assert capsys.readouterr().err.count("PASS") == 3


def test_mesh_outputs(tmp_path, capsys):
    out = tmp_path / "m.obj"
    assert run_cli(["mesh", "--a", "0.1", "--nx", "3", "--ns", "3",
                    "--out", str(out)]) == 0
    assert out.read_text().count("\nf ") == 8
    assert run_cli(["mesh", "--sheet", "plus", "--nx", "2", "--ns", "2",
                    "--format", "csv"]) == 0
    assert capsys.readouterr().out.startswith("x,y,F1")


def test_config_file_and_override(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# winding defaults\na = 0.001\nt1 = 0.1\nt2 = 0.2\n")
    assert read_config(cfg) == {"a": "0.001", "t1": "0.1", "t2": "0.2"}
    assert run_cli(["winding", "--config", str(cfg)]) == 0
    assert "turns 0.79573" in capsys.readouterr().out
    assert run_cli(["winding", "--config", str(cfg), "--t2", "0.4"]) == 0
    assert "limit 1.19366" in capsys.readouterr().out
    assert run_cli(["winding", "--config", str(tmp_path / "nope.cfg")]) == 2


def test_output_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run_cli(["converge", "--k-list", "3,6", "--out", str(a)])
    run_cli(["converge", "--k-list", "3,6", "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()
