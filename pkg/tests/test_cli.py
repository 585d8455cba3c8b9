import json

import pytest

from intcolor.cli import main
from intcolor import graphio


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_gen_emits_graph_json(tmp_path, capsys):
    code, out = run(capsys, "gen", "balanced(n=2,r=3)")
    assert code == 0
    g = graphio.graph_from_json(json.loads(out))
    assert g.vertex_count == 6 and g.edge_count == 12


def test_gen_seed_flag_overrides(tmp_path, capsys):
    a = run(capsys, "gen", "tree(n=10)", "--seed", "1")[1]
    b = run(capsys, "gen", "tree(n=10)", "--seed", "2")[1]
    assert a != b


def test_color_and_verify_round_trip(tmp_path, capsys):
    gpath = tmp_path / "g.json"
    cpath = tmp_path / "c.json"
    assert main(["gen", "fixture(name=k33)", "--out", str(gpath)]) == 0
    assert main(["color", str(gpath), "--method", "subcubic", "--out", str(cpath)]) == 0
    code, out = run(capsys, "verify", str(gpath), str(cpath))
    assert code == 0
    assert json.loads(out)["interval"] is True


def test_verify_fails_on_gap(tmp_path, capsys):
    gpath = tmp_path / "g.json"
    bad = tmp_path / "bad.json"
    main(["gen", "fixture(name=k3)", "--out", str(gpath)])
    bad.write_text("[1, 2, 4]\n")
    code, out = run(capsys, "verify", str(gpath), str(bad))
    assert code == 1
    rep = json.loads(out)
    assert rep["proper"] and not rep["interval"]
    assert rep["offending_vertices"]


def test_decompose_auto_k5(tmp_path, capsys):
    gpath = tmp_path / "k5.json"
    main(["gen", "fixture(name=k5)", "--out", str(gpath)])
    code, out = run(capsys, "decompose", str(gpath), "--method", "auto")
    assert code == 0
    payload = json.loads(out)
    assert max(payload["part"]) + 1 == 2
    assert "odd complete" in payload["trace"]["bound_formula"]
    assert payload["trace"]["certified"]


def test_decompose_output_reverifies(tmp_path, capsys):
    gpath = tmp_path / "g.json"
    dpath = tmp_path / "d.json"
    main(["gen", "bipartite_random(nx=6,ny=6,edges=24,max_degree=6,seed=3)",
          "--out", str(gpath)])
    assert main(["decompose", str(gpath), "--method", "bipartite", "--out", str(dpath)]) == 0
    code, _ = run(capsys, "verify", str(gpath), str(dpath))
    assert code == 0


def test_decompose_cyclic_split(tmp_path, capsys):
    gpath = tmp_path / "c5.json"
    cpath = tmp_path / "cyc.json"
    main(["gen", "fixture(name=c5)", "--out", str(gpath)])
    cpath.write_text("[1, 2, 3, 4, 5]\n")
    code, out = run(capsys, "decompose", str(gpath),
                    "--cyclic-coloring", str(cpath), "--t", "5")
    assert code == 0
    assert max(json.loads(out)["part"]) + 1 == 2


def test_timetable_command(tmp_path, capsys):
    mpath = tmp_path / "school.csv"
    mpath.write_text("2,1\n1,2\n")
    code, out = run(capsys, "timetable", str(mpath), "--even")
    assert code == 0
    days = json.loads(out)
    assert len(days) == 1 and len(days[0]) == 2


def test_oracle_theta(tmp_path, capsys):
    gpath = tmp_path / "k3.json"
    main(["gen", "fixture(name=k3)", "--out", str(gpath)])
    code, out = run(capsys, "oracle", str(gpath), "theta")
    assert code == 0 and json.loads(out)["theta"] == 2


def test_oracle_interval_witness(tmp_path, capsys):
    gpath = tmp_path / "c4.json"
    main(["gen", "fixture(name=c4)", "--out", str(gpath)])
    code, out = run(capsys, "oracle", str(gpath), "interval")
    payload = json.loads(out)
    assert code == 0 and payload["interval_colorable"] and payload["witness"]


def test_text_graph_format_accepted(tmp_path, capsys):
    gpath = tmp_path / "g.txt"
    gpath.write_text("3 3\n0 1\n1 2\n2 0\n")
    code, out = run(capsys, "oracle", str(gpath), "chi")
    assert code == 0 and json.loads(out)["chi"] == 3


def test_bench_quick(tmp_path, capsys):
    code, out = run(capsys, "bench", "quick")
    assert code == 0
    rows = json.loads(out)
    assert all(r["certified"] for r in rows)


def test_bad_input_exit_code(tmp_path, capsys):
    gpath = tmp_path / "nope.json"
    gpath.write_text('{"vertex_count": 2, "edges": [[0, 9]]}\n')
    assert main(["oracle", str(gpath), "chi"]) == 2


def test_color_methods_all_verify(tmp_path, capsys):
    gpath = tmp_path / "g.json"
    main(["gen", "fixture(name=c4)", "--out", str(gpath)])
    for method in ("vizing", "shannon", "kernel:low_even"):
        code, out = run(capsys, "color", str(gpath), "--method", method)
        assert code == 0 and len(json.loads(out)) == 4
    tpath = tmp_path / "t.json"
    main(["gen", "tree(n=8,seed=1)", "--out", str(tpath)])
    code, out = run(capsys, "color", str(tpath), "--method", "kernel:forest")
    assert code == 0
    cpath = tmp_path / "cactus.json"
    main(["gen", "cactus(blocks=4,seed=2)", "--out", str(cpath)])
    assert run(capsys, "color", str(cpath), "--method", "kernel:cactus")[0] == 0


def test_verify_cyclic_flag(tmp_path, capsys):
    gpath = tmp_path / "c5.json"
    cpath = tmp_path / "col.json"
    main(["gen", "fixture(name=c5)", "--out", str(gpath)])
    cpath.write_text("[1, 2, 3, 4, 5]\n")
    code, out = run(capsys, "verify", str(gpath), str(cpath), "--cyclic", "5")
    assert code == 0 and json.loads(out)["cyclic_interval"] is True
    code, _ = run(capsys, "verify", str(gpath), str(cpath))
    assert code == 1  # plain interval mode fails on the wrap palette


def test_timetable_accepts_json_matrix(tmp_path, capsys):
    mpath = tmp_path / "b.json"
    mpath.write_text('{"b": [[1, 1], [1, 1]]}\n')
    code, out = run(capsys, "timetable", str(mpath))
    assert code == 0 and len(json.loads(out)) == 1


def test_unknown_decompose_method(tmp_path, capsys):
    gpath = tmp_path / "g.json"
    main(["gen", "fixture(name=c4)", "--out", str(gpath)])
    assert main(["decompose", str(gpath), "--method", "nonsense"]) == 2


def test_subcubic_color_uses_exact_search_off_bipartite(tmp_path, capsys):
    gpath = tmp_path / "k4.json"
    main(["gen", "fixture(name=k4)", "--out", str(gpath)])
    code, out = run(capsys, "color", str(gpath), "--method", "subcubic")
    assert code == 0
    cpath = tmp_path / "col.json"
    cpath.write_text(out)
    assert main(["verify", str(gpath), str(cpath)]) == 0


def test_subcubic_color_rejects_class2(tmp_path, capsys):
    gpath = tmp_path / "c5.json"
    main(["gen", "fixture(name=c5)", "--out", str(gpath)])
    assert main(["color", str(gpath), "--method", "subcubic"]) == 2
