import json

from frieze import frieze_from_json, triangulation_from_json
from frieze.cli import main

HEX_TRI = {"m": 6, "diagonals": [[2, 4], [2, 5], [2, 6]]}


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_build_validate_roundtrip(tmp_path, capsys):
    out = tmp_path / "square.json"
    code, _, _ = run(capsys, "build", "--boundary", "3,7,5,3",
                     "--quiddity", "4,9,4,9", "-o", str(out))
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["m"] == 4 and doc["entries"]["1,3"] == "9"
    code, stdout, _ = run(capsys, "validate", str(out))
    assert code == 0 and json.loads(stdout)["valid"] is True


def test_build_rejects_invalid_quiddity(capsys):
    code, _, err = run(capsys, "build", "--boundary", "3,7,5,3",
                       "--quiddity", "4,8,4,8")
    assert code == 1
    record = json.loads(err)
    assert record["error"] == "validation"
    assert any(v["rule"] == "local" for v in record["detail"])


def test_build_usage_errors(capsys):
    code, _, err = run(capsys, "build", "--boundary", "3,x,5,3",
                       "--quiddity", "4,9,4,9")
    assert code == 2 and json.loads(err)["error"] == "usage"
    code, _, _ = run(capsys, "build", "--boundary", "3,0,5,3",
                     "--quiddity", "4,9,4,9")
    assert code == 2


def test_validate_detects_mutation(tmp_path, capsys):
    out = tmp_path / "square.json"
    run(capsys, "build", "--boundary", "3,7,5,3", "--quiddity", "4,9,4,9",
        "-o", str(out))
    doc = json.loads(out.read_text())
    doc["entries"]["1,3"] = "10"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, _, err = run(capsys, "validate", str(bad))
    assert code == 1 and json.loads(err)["error"] == "validation"


def test_from_triangulation_and_cut(tmp_path, capsys):
    tri = tmp_path / "hex.json"
    tri.write_text(json.dumps(HEX_TRI))
    fz = tmp_path / "hex_frieze.json"
    code, _, _ = run(capsys, "from-triangulation", str(tri), "-o", str(fz))
    assert code == 0
    f = frieze_from_json(json.loads(fz.read_text()))
    assert f.value(1, 3) == 4
    code, stdout, _ = run(capsys, "cut", str(fz), "--verts", "1,2,3,5")
    assert code == 0
    sub = frieze_from_json(json.loads(stdout))
    assert [int(x) for x in sub.edge_values] == [1, 1, 2, 2]


def test_accordion_command(capsys):
    code, stdout, _ = run(capsys, "accordion", "4", "3")
    assert code == 0
    doc = json.loads(stdout)
    tri = triangulation_from_json(doc["triangulation"])
    assert tri.m == 6 and doc["k"] == 3
    code, _, err = run(capsys, "accordion", "4", "6")
    assert code == 1 and json.loads(err)["error"] == "validation"


def test_classify_command(capsys):
    code, stdout, _ = run(capsys, "classify-triangle", "1", "2", "2")
    assert code == 0 and stdout.strip() == "false"
    code, stdout, _ = run(capsys, "classify-triangle", "2", "4", "6")
    assert code == 0 and stdout.strip() == "true"
    code, _, err = run(capsys, "classify-triangle", "0", "1", "1")
    assert code == 2 and json.loads(err)["error"] == "usage"


def test_realize_command(capsys):
    code, stdout, _ = run(capsys, "realize-triangle", "2", "3", "1")
    assert code == 0
    doc = json.loads(stdout)
    assert len(doc["vertices"]) == 3
    triangulation_from_json(doc["triangulation"])
    code, _, err = run(capsys, "realize-triangle", "1", "2", "2")
    assert code == 1 and json.loads(err)["error"] == "validation"


def test_enumerate_command(capsys):
    code, stdout, _ = run(capsys, "enumerate", "--boundary", "3,7,5,3",
                          "--domain", "nat")
    assert code == 0
    lines = [json.loads(line) for line in stdout.splitlines()]
    summary = lines[-1]
    assert summary["count"] == 9 and len(lines) == 10
    assert all("entries" in doc for doc in lines[:-1])
    code, _, err = run(capsys, "enumerate", "--boundary", "1,1,1,1",
                       "--domain", "galaxies")
    assert code == 2 and json.loads(err)["error"] == "usage"


def test_enumerate_validation_failure(capsys):
    code, _, err = run(capsys, "enumerate", "--boundary", "1,1,1/2,1",
                       "--domain", "nat")
    assert code == 1 and json.loads(err)["error"] == "validation"


def test_render_commands(tmp_path, capsys):
    tri = tmp_path / "hex.json"
    tri.write_text(json.dumps(HEX_TRI))
    code, stdout, _ = run(capsys, "render", str(tri), "--format", "svg",
                          "--mark", "1,3,5")
    assert code == 0 and stdout.startswith("<svg") and 'stroke="red"' in stdout
    code, stdout, _ = run(capsys, "render", str(tri), "--format", "ascii")
    assert code == 0 and len(stdout.splitlines()) == 6
    fz = tmp_path / "f.json"
    run(capsys, "build", "--boundary", "3,7,5,3", "--quiddity", "4,9,4,9",
        "-o", str(fz))
    code, stdout, _ = run(capsys, "render", str(fz), "--format", "ascii")
    assert code == 0
    assert stdout.splitlines()[0].split() == ["0", "3", "4", "3", "0"]


def test_malformed_json_is_usage_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "validate", str(bad))
    assert code == 2 and json.loads(err)["error"] == "usage"
    code, _, _ = run(capsys, "validate", str(tmp_path / "missing.json"))
    assert code == 2


def test_unknown_subcommand_is_usage_error(capsys):
    assert run(capsys, "frobnicate")[0] == 2
