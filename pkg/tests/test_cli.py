import json

import pytest

from graphcstar.cli import main

from conftest import fixture_path

G_SOURCE_LOOP = str(fixture_path("g_source_loop"))
G_CYCLE2 = str(fixture_path("g_cycle2"))
G_LCM = str(fixture_path("g_lcm"))
G_TWO_LOOPS = str(fixture_path("g_two_loops"))
G_EXIT = str(fixture_path("g_exit"))


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_text(capsys):
    code, out, err = run(capsys, "analyze", G_SOURCE_LOOP)
    assert code == 0
    assert "simplicity: not_simple" in out
    assert "periodicity: nonperiodic" in out
    assert "saturated hereditary lattice: {} {u w}" in out
    assert "schweizer hypotheses: fail (has_sources)" in out
    assert "nonperiodic_trivial_invariant_not_simple" in out


def test_analyze_json_stable(capsys):
    code1, out1, _ = run(capsys, "analyze", G_TWO_LOOPS, "--format", "json")
    code2, out2, _ = run(capsys, "analyze", G_TWO_LOOPS, "--format", "json")
    assert code1 == code2 == 0
    assert out1 == out2
    data = json.loads(out1)
    assert data["simplicity"] == "not_simple"
    assert data["counterexample_flags"] == ["nonperiodic_but_not_L"]
    assert data["violating_cycle"] == ["c"]


def test_classify_text(capsys):
    code, out, _ = run(capsys, "classify", G_SOURCE_LOOP)
    assert code == 0
    assert "nonperiodic_but_not_L: yes" in out
    assert "nonperiodic_trivial_invariant_not_simple: yes" in out
    assert "periodic_disjoint_cycles: no" in out


def test_power_twelve_is_nine_loops(capsys):
    code, out, _ = run(capsys, "power", G_LCM, "-n", "12")
    assert code == 0
    edge_lines = [l for l in out.splitlines() if l.startswith("edge ")]
    assert len(edge_lines) == 9
    for line in edge_lines:
        _, _, src, dst = line.rsplit(" ", 3)
        assert src == dst


def test_power_json(capsys):
    code, out, _ = run(capsys, "power", G_CYCLE2, "-n", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["edges"] == [
        {"id": "e1.e2", "src": "v1", "dst": "v1"},
        {"id": "e2.e1", "src": "v2", "dst": "v2"},
    ]


def test_power_cap_exhaustion_exits_3(capsys):
    code, _, err = run(capsys, "power", G_EXIT, "-n", "12", "--cap-paths", "10")
    assert code == 3
    assert "power graph too large" in err


def test_cycles(capsys):
    code, out, _ = run(capsys, "cycles", G_EXIT)
    assert code == 0
    assert out.splitlines() == ["u: a", "u: b d", "w: c"]
    code, out, _ = run(capsys, "cycles", G_EXIT, "--format", "json")
    assert json.loads(out) == [["a"], ["b", "d"], ["c"]]


def test_ideals(capsys):
    code, out, _ = run(capsys, "ideals", G_TWO_LOOPS)
    assert code == 0
    assert out.splitlines() == ["{}", "{w}", "{u w}"]
    code, out, _ = run(capsys, "ideals", G_SOURCE_LOOP, "--kind", "hereditary",
                       "--format", "json")
    assert json.loads(out) == [[], ["w"], ["u", "w"]]


def test_witness_not_found_exits_3(capsys):
    code, out, _ = run(capsys, "witness", G_CYCLE2, "--support", "v1",
                       "--n", "2", "--epsilon", "0.5", "--max-length", "10")
    assert code == 3
    assert "no witness found up to length 10" in out


def test_witness_found(capsys):
    code, out, _ = run(capsys, "witness", G_EXIT, "--support", "u",
                       "--n", "2", "--epsilon", "0.5", "--max-length", "10")
    assert code == 0
    assert "witness: m=3 path: a a b" in out
    code, out, _ = run(capsys, "witness", G_EXIT, "--weights", "u=1.0,w=0.25",
                       "--n", "0", "--epsilon", "0.5", "--max-length", "4",
                       "--format", "json")
    data = json.loads(out)
    assert data == {"found": True, "m": 1, "path": ["a"], "source": "u"}


def test_witness_bad_weights_exit_2(capsys):
    code, _, err = run(capsys, "witness", G_EXIT, "--weights", "u=-1",
                       "--n", "0", "--epsilon", "0.5", "--max-length", "4")
    assert code == 2 and "negative" in err


def test_parse_error_exits_1(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("vertx u\n")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 1
    assert "line 1, column 1" in err and "unknown directive" in err


def test_semantic_error_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("vertex u\nedge e u zz\n")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 2
    assert "line 2" in err and "undeclared vertex 'zz'" in err


def test_bad_json_exits_1(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": }')
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 1


def test_missing_file_exits_1(capsys):
    code, _, err = run(capsys, "analyze", "/nonexistent/g.txt")
    assert code == 1


def test_cap_vertices_flag_and_env(tmp_path, capsys, monkeypatch):
    big = tmp_path / "big.txt"
    lines = [f"vertex v{i}" for i in range(17)]
    big.write_text("\n".join(lines) + "\n")
    code, _, err = run(capsys, "ideals", str(big))
    assert code == 3 and "exceeds cap" in err
    code, out, _ = run(capsys, "ideals", str(big), "--cap-vertices", "17",
                       "--format", "json")
    assert code == 0 and len(json.loads(out)) == 2 ** 17

    monkeypatch.setenv("GRAPHCSTAR_CAP_VERTICES", "17")
    code, _, _ = run(capsys, "ideals", str(big))
    assert code == 0
    # explicit flag beats the environment
    code, _, err = run(capsys, "ideals", str(big), "--cap-vertices", "16")
    assert code == 3
    monkeypatch.setenv("GRAPHCSTAR_CAP_VERTICES", "bogus")
    code, _, err = run(capsys, "ideals", str(big))
    assert code == 2 and "must be an integer" in err


def test_cap_paths_env(capsys, monkeypatch):
    monkeypatch.setenv("GRAPHCSTAR_CAP_PATHS", "10")
    code, _, err = run(capsys, "power", G_EXIT, "-n", "12")
    assert code == 3
    code, _, _ = run(capsys, "power", G_EXIT, "-n", "12", "--cap-paths", "1000000")
    assert code == 0


def test_dot_outputs(capsys):
    code, out, _ = run(capsys, "dot", G_SOURCE_LOOP)
    assert code == 0
    assert out.count("->") == 2 and "color=red" not in out
    code, out, _ = run(capsys, "dot", G_TWO_LOOPS, "--annotate")
    assert code == 0
    assert 'label="c", color=red' in out
    assert "// simplicity: not_simple" in out
