import json
import shutil
import subprocess

import pytest

from permgraph.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_group_info(capsys):
    code, out, _ = run(capsys, "group-info", "Q 8")
    assert code == 0
    assert "order: 8" in out and "proper_cyclic_subgroups: 4" in out
    code, out, _ = run(capsys, "group-info", "Z 4 x Z 2", "--json")
    info = json.loads(out)
    assert code == 0 and info["order"] == 8 and info["abelian"] is True


def test_group_info_undefined(capsys):
    code, out, err = run(capsys, "group-info", "Z 7")
    assert code == 3
    assert "undefined" in err
    assert "graph_defined: false" in out


def test_graph_dot_and_json(capsys, tmp_path):
    code, out, _ = run(capsys, "graph", "S 3", "--dot")
    assert code == 0 and out.count("[label=") == 4 and out.count(" -- ") == 3
    code, out, _ = run(capsys, "graph", "A 4", "--json")
    doc = json.loads(out)
    assert len(doc["vertices"]) == 7 and len(doc["edges"]) == 3
    dest = tmp_path / "z16.json"
    code, out, _ = run(capsys, "graph", "Z 16", "--json", "-o", str(dest))
    doc = json.loads(dest.read_text())
    assert code == 0 and out == ""
    assert len(doc["vertices"]) == 3 and len(doc["edges"]) == 3


def test_graph_all_subgroups(capsys):
    code, out, _ = run(capsys, "graph", "A 4", "--json", "--all-subgroups")
    assert code == 0 and len(json.loads(out)["vertices"]) == 8


def test_analyze(capsys):
    code, out, _ = run(capsys, "analyze", "Q 8")
    assert code == 0 and "complete: true" in out and "diameter: 1" in out
    code, out, _ = run(capsys, "analyze", "Z 12", "--json")
    assert json.loads(out)["recognized_name"] == "K4"
    code, out, _ = run(capsys, "analyze", "SD 5 2 1 1", "--json")
    d = json.loads(out)
    assert d["recognized_name"] == "K1,5" and d["girth"] == "inf"


def test_text_mirrors_json(capsys):
    _, text, _ = run(capsys, "analyze", "D 8")
    _, js, _ = run(capsys, "analyze", "D 8", "--json")
    assert [line.split(":")[0] for line in text.splitlines()] == list(json.loads(js))


@pytest.mark.parametrize(
    "argv,code",
    [
        (["graph", "Q 9"], 2),
        (["analyze", "bogus 3"], 2),
        (["graph", "SD 5 3 1 1"], 2),
        (["graph", "Z 11"], 3),
        (["analyze", "Z 1"], 3),
        (["verify", "--families", "nope"], 2),
    ],
)
def test_error_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["graph", "S 3", "--dot", "--json"])
    assert exc.value.code == 2


def test_verify_small(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--max-order", "16", "--report", str(report))
    assert code == 0
    assert "FAIL" not in out and out.count("PASS") == 9
    first = report.read_bytes()
    doc = json.loads(first)
    assert doc["header"]["max_order"] == 16
    assert all(t["passed"] for t in doc["theorems"])
    run(capsys, "verify", "--max-order", "16", "--report", str(report))
    assert report.read_bytes() == first


def test_verify_scope_note(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--max-order", "4096", "--families", "modular", "--report", str(report))
    assert code == 0
    assert "capped at order 256" in out
    assert any("capped at order 256" in n for n in json.loads(report.read_text())["header"]["scope"])


def test_verify_threads_env(capsys, monkeypatch):
    monkeypatch.setenv("PERMGRAPH_THREADS", "2")
    code, out, _ = run(capsys, "verify", "--max-order", "12")
    assert code == 0


def test_output_deterministic(capsys):
    a = run(capsys, "graph", "S 4", "--json")
    b = run(capsys, "graph", "S 4", "--json")
    assert a == b


@pytest.mark.skipif(shutil.which("permgraph") is None, reason="entry point not installed")
def test_console_script():
    p = subprocess.run(["permgraph", "group-info", "Z 7"], capture_output=True, text=True)
    assert p.returncode == 3
    p = subprocess.run(["permgraph", "graph", "S 3"], capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout.startswith('graph "S 3"')
