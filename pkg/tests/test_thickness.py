import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from intcolor.edge_coloring import exact_chromatic_index, vizing_color
from intcolor.generators import (FIXTURES, complete_bipartite_graph, complete_graph,
                                 circular_complete_graph, cycle_graph,
                                 random_bipartite, random_biregular,
                                 random_eulerian_bipartite)
from intcolor.multigraph import (EdgeColoring, GraphError, bipartition, build_graph,
                                 verify_decomposition)
from intcolor.oracles import exact_cyclic_interval_coloring, exact_theta
from intcolor.thickness import (decompose_balanced_family, decompose_bipartite,
                                decompose_biregular, decompose_complete_multipartite,
                                decompose_eulerian_bipartite, decompose_forest_peel,
                                decompose_general, decompose_star_peel,
                                detect_complete_multipartite, dispatch_theta_upper,
                                multipartite_part_count, split_cyclic)
from intcolor.timetable import build_requirement_graph


def _certified(d):
    return verify_decomposition(d.graph, d).interval


def _part_degree(d, part, v):
    sub, _ = d.part_subgraph(part)
    return sub.degree(v)


# -- general five-class bound ------------------------------------------------------

def test_general_k4():
    g = complete_graph(4)
    d = decompose_general(g, exact_chromatic_index(g)[1])
    assert _certified(d) and d.part_count <= 2


def test_general_petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    g = build_graph(10, outer + inner + [(i, i + 5) for i in range(5)])
    d = decompose_general(g, vizing_color(g))
    assert _certified(d) and d.part_count <= 2


def test_general_max_degree_two_bipartite_single_part():
    g = cycle_graph(6)
    d = decompose_general(g, EdgeColoring(g, (1, 2, 1, 2, 1, 2)))
    assert _certified(d) and d.part_count == 1


def test_general_adversarial_coloring_resplits():
    # C_5 plus a chord colored so the three-class side is a bare odd cycle whose
    # only borrowed edge lies inside it; a different class split must be found
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    coloring = EdgeColoring(g, (3, 4, 3, 4, 5, 1))
    d = decompose_general(g, coloring)
    assert _certified(d) and d.part_count <= 2


def test_general_bare_odd_cycle_component():
    g = cycle_graph(5)
    d = decompose_general(g, EdgeColoring(g, (1, 2, 1, 2, 3)))
    assert _certified(d) and d.part_count == 2


def test_general_rejects_improper():
    g = cycle_graph(4)
    with pytest.raises(GraphError):
        decompose_general(g, EdgeColoring(g, (1, 1, 1, 1)))


@given(st.integers(0, 100_000))
@settings(max_examples=40, deadline=None)
def test_general_random_simple(seed):
    rng = random.Random(seed)
    n = rng.randint(4, 10)
    seen = set()
    for _ in range(rng.randint(3, 24)):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            seen.add((min(u, v), max(u, v)))
    g = build_graph(n, sorted(seen))
    if g.edge_count == 0:
        return
    coloring = vizing_color(g)
    d = decompose_general(g, coloring)
    t = coloring.colors_used()
    assert _certified(d)
    assert d.part_count <= 2 * -(-t // 5)


# -- bipartite thirds -----------------------------------------------------------------

def test_bipartite_k44_balanced_parts():
    g = complete_bipartite_graph(4, 4)
    d = decompose_bipartite(g)
    assert _certified(d) and d.part_count == 2
    for v in range(8):
        assert {_part_degree(d, p, v) for p in range(2)} == {2}


def test_bipartite_delta3_single_part():
    g = complete_bipartite_graph(3, 3)
    d = decompose_bipartite(g)
    assert _certified(d) and d.part_count == 1


def test_bipartite_k77_three_parts():
    d = decompose_bipartite(complete_bipartite_graph(7, 7))
    assert _certified(d) and d.part_count == 3


@given(st.integers(0, 100_000))
@settings(max_examples=30, deadline=None)
def test_bipartite_balance_property(seed):
    rng = random.Random(seed)
    g = random_bipartite(rng.randint(2, 12), rng.randint(2, 12), rng.randint(4, 40),
                         rng.randint(2, 10), rng, simple=False)
    if g.edge_count == 0:
        return
    d = decompose_bipartite(g)
    assert _certified(d)
    assert d.part_count <= max(1, -(-g.max_degree // 3))
    for v in range(g.vertex_count):
        degs = [_part_degree(d, p, v) for p in range(d.part_count)]
        if degs:
            assert max(degs) - min(degs) <= 1


# -- eulerian bipartite ------------------------------------------------------------------

def test_eulerian_k44_single_part():
    d = decompose_eulerian_bipartite(complete_bipartite_graph(4, 4))
    assert _certified(d) and d.part_count == 1
    cert = d.certificates[0]
    assert all(sorted(cert.palette(v)) == [1, 2, 3, 4] for v in range(8))


def test_eulerian_c6_single_part():
    d = decompose_eulerian_bipartite(cycle_graph(6))
    assert _certified(d) and d.part_count == 1


def test_eulerian_rejects_odd_degree():
    with pytest.raises(GraphError):
        decompose_eulerian_bipartite(complete_bipartite_graph(3, 3))


@given(st.integers(0, 100_000))
@settings(max_examples=25, deadline=None)
def test_eulerian_random(seed):
    rng = random.Random(seed)
    g = random_eulerian_bipartite(rng.randint(2, 7), rng.randint(2, 7),
                                  rng.randint(1, 6), rng.randint(1, 4), 12, rng)
    if g.edge_count == 0:
        return
    d = decompose_eulerian_bipartite(g)
    assert _certified(d)
    assert d.part_count <= -(-g.max_degree // 4)


# -- biregular -----------------------------------------------------------------------------

@pytest.mark.parametrize("a,b,bound", [(3, 6, 2), (3, 9, 2), (4, 8, 2), (5, 10, 3)])
def test_biregular_bounds(a, b, bound):
    g = random_biregular(a, b, 2, random.Random(17))
    d = decompose_biregular(g)
    assert _certified(d) and d.part_count <= bound


def test_biregular_k63():
    d = decompose_biregular(complete_bipartite_graph(6, 3))
    assert _certified(d) and d.part_count == 2


def test_biregular_rejects_wrong_shape():
    with pytest.raises(GraphError):
        decompose_biregular(complete_bipartite_graph(4, 4))


# -- star peel ------------------------------------------------------------------------------

def test_star_peel_k29():
    d = decompose_star_peel(complete_bipartite_graph(2, 9))
    assert _certified(d) and d.part_count == 2


def test_star_peel_single_star():
    d = decompose_star_peel(complete_bipartite_graph(1, 6))
    assert _certified(d) and d.part_count == 1


@given(st.integers(0, 100_000))
@settings(max_examples=25, deadline=None)
def test_star_peel_two_b_biregular(seed):
    rng = random.Random(seed)
    g = random_biregular(2, 2 * rng.randint(2, 4), 2, rng)
    d = decompose_star_peel(g)
    assert _certified(d) and d.part_count <= 2


# -- complete multipartite --------------------------------------------------------------------

def test_multipartite_recurrence_values():
    assert multipartite_part_count(2) == 1
    assert multipartite_part_count(4) == 2
    assert multipartite_part_count(8) == 3
    assert multipartite_part_count(5) == 3


@pytest.mark.parametrize("sizes,parts", [
    ([2, 3], 1), ([1, 2, 3, 1], 2), ([2] * 8, 3), ([1] * 5, 3),
])
def test_multipartite_exact_part_counts(sizes, parts):
    d = decompose_complete_multipartite(sizes)
    assert _certified(d) and d.part_count == parts == multipartite_part_count(len(sizes))


def test_detect_complete_multipartite():
    g = complete_bipartite_graph(6, 3)
    parts = detect_complete_multipartite(g)
    assert parts is not None and sorted(map(len, parts)) == [3, 6]
    assert detect_complete_multipartite(cycle_graph(5)) is None


# -- balanced families ------------------------------------------------------------------------

def test_balanced_k33_two_parts():
    d = decompose_balanced_family(3, 3)
    assert _certified(d) and d.part_count == 2


def test_balanced_even_single_part():
    d = decompose_balanced_family(2, 4)
    assert _certified(d) and d.part_count == 1


def test_odd_complete_k5_is_k4_plus_star():
    d = decompose_balanced_family(2, 0, "odd_complete")
    assert _certified(d) and d.part_count == 2
    sizes = sorted(len(d.part_edges(p)) for p in range(2))
    assert sizes == [4, 6]  # the star at the removed vertex and K_4


def test_semiregular_even_full_palettes():
    d = decompose_balanced_family(2, 2, "semiregular")
    assert _certified(d) and d.part_count == 1
    cert = d.certificates[0]
    for v in range(4):
        assert sorted(cert.palette(v)) == [1, 2, 3, 4, 5, 6]


def test_semiregular_odd_three_parts():
    d = decompose_balanced_family(1, 3, "semiregular")
    assert _certified(d) and d.part_count <= 3


# -- forest peel -------------------------------------------------------------------------------

def test_forest_peel_tree():
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert decompose_forest_peel(g).part_count == 1


def test_forest_peel_k5_reaches_arboricity():
    d = decompose_forest_peel(complete_graph(5))
    assert _certified(d) and d.part_count == 3


def test_forest_peel_c4_plus_chord():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    d = decompose_forest_peel(g)
    assert _certified(d) and d.part_count == 2


# -- cyclic split ------------------------------------------------------------------------------

def test_split_cyclic_c5():
    g = cycle_graph(5)
    d = split_cyclic(g, EdgeColoring(g, (1, 2, 3, 4, 5)), 5)
    assert _certified(d) and d.part_count == 2
    assert sorted(len(d.part_edges(p)) for p in range(2)) == [1, 4]


def test_split_cyclic_interval_input_single_part():
    g = cycle_graph(6)
    d = split_cyclic(g, EdgeColoring(g, (1, 2, 1, 2, 1, 2)), 2)
    assert _certified(d) and d.part_count == 1


def test_split_cyclic_search_found_circular_complete():
    g = circular_complete_graph(7, 2)
    t = 2 * g.max_degree - 2
    col = exact_cyclic_interval_coloring(g, t)
    assert col is not None
    d = split_cyclic(g, col, t)
    assert _certified(d) and d.part_count <= 2


def test_split_cyclic_rejects_small_t():
    g = complete_bipartite_graph(3, 3)
    col = exact_cyclic_interval_coloring(g, 3)
    assert col is not None
    with pytest.raises(GraphError):
        split_cyclic(g, col, 3)


# -- dispatcher --------------------------------------------------------------------------------

def test_dispatch_k33():
    d, trace = dispatch_theta_upper(complete_bipartite_graph(3, 3))
    assert d.part_count == 1 and trace.certified


def test_dispatch_k5_cites_odd_complete():
    d, trace = dispatch_theta_upper(complete_graph(5))
    assert d.part_count == 2
    assert "odd complete" in trace.bound_formula


def test_dispatch_empty_graph():
    d, trace = dispatch_theta_upper(build_graph(3, []))
    assert d.part_count == 0 and trace.method == "empty"


@given(st.integers(0, 100_000))
@settings(max_examples=20, deadline=None)
def test_dispatch_random_delta7(seed):
    rng = random.Random(seed)
    n = rng.randint(5, 12)
    seen = set()
    deg = [0] * n
    for _ in range(40):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v and deg[u] < 7 and deg[v] < 7 and (min(u, v), max(u, v)) not in seen:
            seen.add((min(u, v), max(u, v)))
            deg[u] += 1
            deg[v] += 1
    g = build_graph(n, sorted(seen))
    if g.edge_count == 0:
        return
    d, trace = dispatch_theta_upper(g)
    assert _certified(d)
    assert d.part_count <= 2 * -(-8 // 5)  # Vizing instantiation at Delta <= 7
    assert d.part_count <= trace.bound_value


def test_dispatch_requirement_graph():
    from intcolor.timetable import RequirementMatrix
    B = RequirementMatrix.from_rows([[2, 1], [1, 2]])
    g, _ = build_requirement_graph(B)
    d, trace = dispatch_theta_upper(g)
    assert _certified(d) and d.part_count == 1  # Delta = 3


# -- oracle dominance ---------------------------------------------------------------------------

@given(st.integers(0, 100_000))
@settings(max_examples=15, deadline=None)
def test_dispatch_never_beats_exact_theta(seed):
    rng = random.Random(seed)
    n = rng.randint(3, 7)
    edges = []
    for _ in range(rng.randint(1, 9)):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.append((u, v))
    g = build_graph(n, edges[:9])
    if g.edge_count == 0:
        return
    d, _ = dispatch_theta_upper(g)
    assert d.part_count >= exact_theta(g)


def test_bipartite_with_parallel_edges():
    # lecture multigraphs have parallel edges whenever b_ij > 1
    g = build_graph(4, [(0, 2), (0, 2), (0, 3), (1, 2), (1, 3), (1, 3), (0, 3), (1, 2)])
    d = decompose_bipartite(g)
    assert _certified(d)
    assert d.part_count <= max(1, -(-g.max_degree // 3))


def test_decomposers_are_deterministic():
    g = complete_bipartite_graph(5, 7)
    assert decompose_bipartite(g) == decompose_bipartite(g)
    assert decompose_star_peel(g) == decompose_star_peel(g)
    d1, t1 = dispatch_theta_upper(g)
    d2, t2 = dispatch_theta_upper(g)
    assert d1 == d2 and t1 == t2


def test_dispatch_disconnected_is_componentwise():
    # K_{7,7} needs 3 parts, K_3 needs 2: the merge needs 3, not the 4 a global
    # proper-coloring route would give
    k77 = complete_bipartite_graph(7, 7)
    edges = list(k77.edges) + [(14, 15), (15, 16), (16, 14)]
    g = build_graph(17, edges)
    d, trace = dispatch_theta_upper(g)
    assert _certified(d)
    assert d.part_count == 3
    assert trace.method == "componentwise"
