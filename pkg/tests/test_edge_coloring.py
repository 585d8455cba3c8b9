import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from intcolor.edge_coloring import (BudgetExceeded, equalized_bipartite_color,
                                    euler_split, exact_chromatic_index, konig_color,
                                    petersen_two_factorization, shannon_color,
                                    vizing_color)
from intcolor.generators import (complete_bipartite_graph, complete_graph,
                                 cycle_graph, random_bipartite)
from intcolor.multigraph import EdgeColoring, GraphError, bipartition, build_graph, verify


def petersen_graph():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return build_graph(10, outer + inner + spokes)


def shannon_triangle():
    # three pairwise double edges; every pair of edges is adjacent
    return build_graph(3, [(0, 1), (0, 1), (1, 2), (1, 2), (2, 0), (2, 0)])


# -- konig ------------------------------------------------------------------

def test_konig_c4_uses_two_colors():
    g = cycle_graph(4)
    col = konig_color(g)
    assert col.colors_used() == 2 and verify(g, col, "proper").proper


def test_konig_k33_three_perfect_matchings():
    g = complete_bipartite_graph(3, 3)
    col = konig_color(g)
    assert col.colors_used() == 3
    assert verify(g, col, "proper").proper
    by_color = Counter(col.colors)
    assert set(by_color.values()) == {3}


def test_konig_star_needs_degree_colors():
    g = complete_bipartite_graph(1, 5)
    assert konig_color(g).colors_used() == 5


def test_konig_rejects_non_bipartite():
    with pytest.raises(GraphError):
        konig_color(complete_graph(3))


@given(st.integers(0, 10_000))
@settings(max_examples=60, deadline=None)
def test_konig_exactly_delta_on_random_bipartite(seed):
    rng = random.Random(seed)
    g = random_bipartite(rng.randint(1, 7), rng.randint(1, 7), rng.randint(1, 20),
                         rng.randint(1, 8), rng, simple=False)
    if g.edge_count == 0:
        return
    col = konig_color(g)
    assert verify(g, col, "proper").proper
    assert col.colors_used() == g.max_degree


# -- vizing / shannon --------------------------------------------------------

def test_vizing_k3_uses_three():
    g = complete_graph(3)
    col = vizing_color(g)
    assert verify(g, col, "proper").proper and col.colors_used() == 3


def test_vizing_k4_within_bound():
    g = complete_graph(4)
    col = vizing_color(g)
    assert verify(g, col, "proper").proper and col.colors_used() <= 4


def test_vizing_petersen_within_bound():
    g = petersen_graph()
    col = vizing_color(g)
    assert verify(g, col, "proper").proper and col.colors_used() <= 4


def test_vizing_rejects_multigraph():
    with pytest.raises(GraphError):
        vizing_color(build_graph(2, [(0, 1), (0, 1)]))


def test_shannon_triple_edge():
    g = build_graph(2, [(0, 1)] * 3)
    col = shannon_color(g)
    assert verify(g, col, "proper").proper and col.colors_used() == 3


def test_shannon_triangle_needs_six():
    g = shannon_triangle()
    assert exact_chromatic_index(g)[0] == 6  # brute force: all six edges pairwise adjacent
    col = shannon_color(g)
    assert verify(g, col, "proper").proper
    assert col.colors_used() <= 3 * g.max_degree // 2 == 6


@given(st.integers(0, 10_000))
@settings(max_examples=60, deadline=None)
def test_shannon_bound_on_random_multigraphs(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 8)
    edges = [(rng.randrange(n), rng.randrange(n)) for _ in range(rng.randint(1, 18))]
    edges = [(u, v) for u, v in edges if u != v]
    if not edges:
        return
    g = build_graph(n, edges)
    col = shannon_color(g)
    assert verify(g, col, "proper").proper
    assert col.max_color() <= 3 * g.max_degree // 2


# -- equalized ----------------------------------------------------------------

def test_equalized_star_center_counts():
    g = complete_bipartite_graph(1, 5)
    col = equalized_bipartite_color(g, bipartition(g), 2)
    assert sorted(Counter(col.palette(0)).values()) == [2, 3]


def test_equalized_k33_each_class_one_regular():
    g = complete_bipartite_graph(3, 3)
    col = equalized_bipartite_color(g, bipartition(g), 3)
    for v in range(6):
        assert sorted(Counter(col.palette(v)).values()) == [1, 1, 1]


def test_equalized_k1_single_class():
    g = complete_bipartite_graph(2, 3)
    col = equalized_bipartite_color(g, bipartition(g), 1)
    assert set(col.colors) == {1}


@given(st.integers(0, 10_000), st.integers(1, 5))
@settings(max_examples=60, deadline=None)
def test_equalized_counts_within_one(seed, k):
    rng = random.Random(seed)
    g = random_bipartite(rng.randint(1, 6), rng.randint(1, 6), rng.randint(1, 18),
                         rng.randint(1, 9), rng, simple=False)
    col = equalized_bipartite_color(g, bipartition(g), k)
    assert all(1 <= c <= k for c in col.colors)
    for v in range(g.vertex_count):
        counts = Counter(col.palette(v))
        if counts:
            assert max(counts.values()) - min(counts.values()) <= 1


# -- euler split ---------------------------------------------------------------

def test_euler_split_c4_two_matchings():
    g = cycle_graph(4)
    es = euler_split(g)
    assert not es.imbalanced_vertices
    for half in (es.left, es.right):
        sub, _ = g.subgraph(half)
        assert all(sub.degree(v) == 1 for v in range(4))


def test_euler_split_k44_halves_degrees():
    g = complete_bipartite_graph(4, 4)
    es = euler_split(g)
    assert not es.imbalanced_vertices
    for half in (es.left, es.right):
        sub, _ = g.subgraph(half)
        assert all(sub.degree(v) == 2 for v in range(8))


def test_euler_split_c3_flags_imbalance():
    g = cycle_graph(3)
    es = euler_split(g)
    assert sorted(map(len, (es.left, es.right))) == [1, 2]
    assert len(es.imbalanced_vertices) == 1


def test_euler_split_rejects_odd_degree():
    with pytest.raises(GraphError):
        euler_split(build_graph(2, [(0, 1)]))


# -- petersen two-factorization -------------------------------------------------

def _assert_two_factorization(g, tf, r):
    assert len(tf.factors) == r
    all_edges = [e for f in tf.factors for e in f]
    assert sorted(all_edges) == list(range(g.edge_count))
    for f in tf.factors:
        sub, _ = g.subgraph(f)
        for v in range(g.vertex_count):
            assert sub.degree(v) == 2


def test_petersen_identity_on_c6():
    g = cycle_graph(6)
    tf = petersen_two_factorization(g)
    _assert_two_factorization(g, tf, 1)


def test_petersen_k5_two_factors():
    g = complete_graph(5)
    _assert_two_factorization(g, petersen_two_factorization(g), 2)


def test_petersen_two_loops():
    g = build_graph(1, [(0, 0), (0, 0)], allows_loops=True)
    tf = petersen_two_factorization(g)
    assert sorted(map(len, tf.factors)) == [1, 1]


def test_petersen_rejects_irregular():
    with pytest.raises(GraphError):
        petersen_two_factorization(build_graph(3, [(0, 1), (1, 2)]))


@given(st.integers(0, 10_000), st.integers(1, 3))
@settings(max_examples=40, deadline=None)
def test_petersen_on_random_regular_multigraphs(seed, r):
    rng = random.Random(seed)
    n = rng.randint(2, 6)
    # union of 2r random closed walks covering all vertices keeps degrees even;
    # build a 2r-regular multigraph as a union of r Hamiltonian-style cycles
    edges = []
    for _ in range(r):
        perm = list(range(n))
        rng.shuffle(perm)
        edges.extend((perm[i], perm[(i + 1) % n]) for i in range(n))
    g = build_graph(n, edges, allows_loops=(n == 1))
    _assert_two_factorization(g, petersen_two_factorization(g), r)


# -- exact chromatic index -------------------------------------------------------

@pytest.mark.parametrize("graph,expected", [
    (complete_graph(3), 3),
    (complete_graph(4), 3),
    (complete_bipartite_graph(3, 3), 3),
])
def test_exact_chi_small(graph, expected):
    chi, witness = exact_chromatic_index(graph)
    assert chi == expected
    assert verify(graph, witness, "proper").proper
    assert witness.colors_used() == chi


def test_exact_chi_budget():
    with pytest.raises(BudgetExceeded):
        exact_chromatic_index(complete_bipartite_graph(5, 5))


@given(st.integers(0, 10_000))
@settings(max_examples=30, deadline=None)
def test_exact_chi_matches_konig_on_bipartite(seed):
    rng = random.Random(seed)
    g = random_bipartite(rng.randint(1, 5), rng.randint(1, 5), rng.randint(1, 12),
                         rng.randint(1, 6), rng, simple=False)
    if not 0 < g.edge_count <= 14:
        return
    assert exact_chromatic_index(g)[0] == max(konig_color(g).colors_used(), 1)
