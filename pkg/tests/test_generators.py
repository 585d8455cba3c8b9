import pytest

from intcolor.generators import (FIXTURES, FamilySpec, InfeasibleSpec,
                                 circular_complete_graph, generate)
from intcolor.multigraph import bipartition, verify


def test_spec_parsing():
    spec = FamilySpec.parse("biregular(a=3,b=6,scale=2,seed=7)")
    assert spec.family == "biregular"
    assert spec.params == {"a": 3, "b": 6, "scale": 2}
    assert spec.seed == 7
    assert FamilySpec.parse("fixture(name=k5)").params == {"name": "k5"}


def test_spec_from_json():
    spec = FamilySpec.from_json({"family": "tree", "n": 9, "seed": 3})
    assert spec == FamilySpec("tree", {"n": 9}, 3)


def test_determinism():
    a = generate(FamilySpec.parse("bipartite_random(nx=8,ny=8,edges=20,max_degree=5,seed=11)"))
    b = generate(FamilySpec.parse("bipartite_random(nx=8,ny=8,edges=20,max_degree=5,seed=11)"))
    c = generate(FamilySpec.parse("bipartite_random(nx=8,ny=8,edges=20,max_degree=5,seed=12)"))
    assert a.graph == b.graph
    assert a.graph != c.graph


def test_circular_complete_5_2_is_the_odd_cycle():
    g = circular_complete_graph(5, 2)
    assert g.vertex_count == 5 and g.edge_count == 5
    assert all(g.degree(v) == 2 for v in range(5))
    assert bipartition(g) is None


def test_circular_complete_rejects_empty():
    with pytest.raises(InfeasibleSpec):
        circular_complete_graph(3, 2)


def test_balanced_2_3_is_the_octahedron():
    g = generate(FamilySpec.parse("balanced(n=2,r=3)")).graph
    assert g.vertex_count == 6 and g.edge_count == 12
    assert all(g.degree(v) == 4 for v in range(6))


def test_biregular_degree_profile():
    gen = generate(FamilySpec.parse("biregular(a=3,b=9,scale=2,seed=4)"))
    g = gen.graph
    cert = gen.bipartition_cert
    assert cert is not None
    degs = {s: {g.degree(v) for v in cert.side_vertices(s) if g.degree(v)} for s in (0, 1)}
    assert degs[0] == {3} and degs[1] == {9}


def test_eulerian_bipartite_degrees_even():
    g = generate(FamilySpec.parse("eulerian_bipartite(nx=5,ny=5,walks=4,walk_len=4,"
                                  "max_degree=8,seed=2)")).graph
    assert g.edge_count > 0
    assert all(g.degree(v) % 2 == 0 for v in range(g.vertex_count))
    assert g.max_degree <= 8


def test_cubic_class1_comes_with_its_coloring():
    gen = generate(FamilySpec.parse("cubic_class1(n=20,seed=9)"))
    g = gen.graph
    assert all(g.degree(v) == 3 for v in range(20))
    assert gen.three_coloring is not None
    assert verify(g, gen.three_coloring, "proper").proper
    assert gen.three_coloring.colors_used() == 3


def test_tree_is_acyclic_and_connected():
    g = generate(FamilySpec.parse("tree(n=25,seed=1)")).graph
    assert g.edge_count == 24
    assert len(g.components()) == 1


def test_cactus_properties():
    g = generate(FamilySpec.parse("cactus(blocks=5,seed=3)")).graph
    assert len([c for c in g.components() if len(c) > 1]) == 1
    assert g.max_degree >= 3


def test_fixture_catalog_contents():
    for name in ("k3", "c5", "c7", "sharpness", "k5", "octahedron", "bireg36"):
        assert name in FIXTURES
    sharp, expected = FIXTURES["sharpness"]
    assert sharp.vertex_count == 6 and sharp.edge_count == 9 and sharp.max_degree == 4
    assert expected["interval_colorable"] is False


def test_unknown_family_and_fixture():
    with pytest.raises(InfeasibleSpec):
        generate(FamilySpec("nonsense", {}))
    with pytest.raises(InfeasibleSpec):
        generate(FamilySpec("fixture", {"name": "missing"}))
