from __future__ import annotations

import json

import pytest

from oddcolor.cli import main

K4_EMB = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n0 1 2\n3 0 4\n1 3 5\n2 5 4\n"
K4 = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"
C4 = "4 4\n0 1\n1 2\n2 3\n3 0\n"


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip().startswith("{") else out)


def test_gen_gn(capsys):
    code, out = run(["gen", "gn", "4"], capsys)
    assert code == 0
    lines = [x for x in out.splitlines() if not x.startswith("#")]
    assert lines[0] == "6 1"


def test_gen_planar_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a", tmp_path / "b"
    assert main(["gen", "planar", "--n", "20", "--seed", "7", "--out", str(a)]) == 0
    assert main(["gen", "planar", "--n", "20", "--seed", "7", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_gen_chord_k3(capsys):
    code, out = run(["gen", "chord", "--word", "012012"], capsys)
    assert code == 0 and out.splitlines()[0] == "3 3"


def test_gen_usage_errors(capsys):
    assert main(["gen", "gn", "--n", "1"]) == 2
    with pytest.raises(SystemExit) as info:
        main(["gen", "nonsense"])
    assert info.value.code == 2


def test_color_circle98(files, capsys):
    code, out = run(["color", "circle98", files("k4e.txt", K4_EMB), "--tree", files("t", "0 1 2")], capsys)
    assert code == 0 and out["num_colors"] <= 98 and out["report"]["verification"]


def test_check_roundtrip_circle98(files, capsys, tmp_path):
    emb, tree = files("k4e.txt", K4_EMB), files("t", "0 1 2")
    col = tmp_path / "c.json"
    assert main(["color", "circle98", emb, "--tree", tree, "--out", str(col)]) == 0
    code, out = run(["check", emb, str(col), "--tree", tree], capsys)
    assert code == 0 and out["kind"] == "fundamental-graph" and out["valid"]
    data = json.loads(col.read_text())
    data["colors"] = {k: 1 for k in data["colors"]}
    col.write_text(json.dumps(data))
    code, out = run(["check", emb, str(col), "--tree", tree], capsys)
    assert code == 1 and not out["valid"]


def test_color_fundcut(files, capsys):
    code, out = run(["color", "fundcut", files("k4.txt", K4), "--tree", files("t", "0 1 2")], capsys)
    assert code == 0 and out["num_colors"] <= 49


def test_color_improper_on_g4(files, capsys, tmp_path):
    g4 = tmp_path / "g4"
    main(["gen", "gn", "4", "--out", str(g4)])
    code, out = run(["color", "improper-odd", str(g4)], capsys)
    assert code == 0 and out["verification"]
    assert out["num_colors"] == 1


def test_color_one_sided_and_product(files, capsys, tmp_path):
    bip = tmp_path / "bip"
    main(["gen", "random-bipartite", "--nx", "6", "--ny", "7", "--p", "0.4", "--seed", "3", "--out", str(bip)])
    code, out = run(["color", "one-sided", str(bip)], capsys)
    assert code == 0 and out["verification"]
    code, out = run(["color", "product", files("c4", C4)], capsys)
    assert code == 0 and out["proper"] and out["num_colors"] <= 4


def test_exact_and_eta(files, capsys):
    code, out = run(["exact", "chi-o", files("c4", C4)], capsys)
    assert code == 0 and out["value"] == 4
    assert set(out) >= {"instance_id", "parameter", "value", "nodes", "seconds"}
    code, out = run(["eta", files("k4", K4), "--m", "2"], capsys)
    assert code == 0 and out["value"] == 3
    code, out = run(["exact", "fundcut", files("k4b", K4), "--tree", files("t", "0 1 2")], capsys)
    assert out["value"] == 3


def test_exact_budget_exit(files, capsys):
    code, out = run(["exact", "chi-o", files("k4", K4), "--budget-nodes", "1"], capsys)
    assert code == 1 and "lower" in out


def test_check_invalid_coloring(files, capsys):
    bad = files("bad.json", json.dumps({"colors": {"0": 1, "1": 2, "2": 1, "3": 2}, "proper": True}))
    code, out = run(["check", files("c4", C4), bad], capsys)
    assert code == 1 and out["failing_vertex"] == 0
    good = files("good.json", json.dumps({"colors": {"0": 1, "1": 2, "2": 3, "3": 4}, "proper": True}))
    assert run(["check", files("c4b", C4), good], capsys)[0] == 0


def test_check_roundtrip_fundcut(files, capsys, tmp_path):
    res = tmp_path / "res.json"
    k4 = files("k4", K4)
    t = files("t", "0 1 2")
    assert main(["color", "fundcut", k4, "--tree", t, "--out", str(res)]) == 0
    code, out = run(["check", k4, str(res), "--tree", t], capsys)
    assert code == 0 and out["valid"]
    data = json.loads(res.read_text())
    data["edge_colors"] = {"3": 1, "4": 1, "5": 2}
    res.write_text(json.dumps(data))
    code, out = run(["check", k4, str(res), "--tree", t], capsys)
    assert code == 1 and out["failing_tree_edge"] == 0


def test_parse_errors_exit_2(files, capsys):
    assert main(["color", "improper-odd", files("bad", "3 5\n0 1\n")]) == 2
    assert main(["color", "circle98", files("c4", C4)]) == 2
    assert main(["color", "improper-odd", "/nonexistent/file"]) == 2


def test_scans(capsys):
    code, out = run(["scan51", "--count", "3", "--n-max", "6"], capsys)
    assert code == 0 and len(out["records"]) == 3
    code, out = run(["scan52", "--max-edges", "4"], capsys)
    assert code == 0 and out["max_value"] >= 1
