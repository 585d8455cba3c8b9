import random

import pytest
from hypothesis import given, settings, strategies as st

from intcolor.edge_coloring import exact_chromatic_index, konig_color
from intcolor.generators import (complete_bipartite_graph, complete_graph,
                                 cycle_graph, random_cubic_class1)
from intcolor.multigraph import EdgeColoring, GraphError, build_graph, verify
from intcolor.subcubic import color_subcubic


def test_k33_with_konig_coloring():
    g = complete_bipartite_graph(3, 3)
    col = color_subcubic(g, konig_color(g))
    assert verify(g, col).interval
    assert len(set(col.colors)) <= 6


def test_cube_graph():
    g = build_graph(8, [(0, 1), (1, 2), (2, 3), (3, 0),
                        (4, 5), (5, 6), (6, 7), (7, 4),
                        (0, 4), (1, 5), (2, 6), (3, 7)])
    col = color_subcubic(g, exact_chromatic_index(g)[1])
    assert verify(g, col).interval


def test_even_cycle_two_colors():
    g = cycle_graph(6)
    col = color_subcubic(g, konig_color(g))
    assert verify(g, col).interval
    assert col.colors_used() == 2


def test_k4_class1():
    g = complete_graph(4)
    col = color_subcubic(g, exact_chromatic_index(g)[1])
    assert verify(g, col).interval


def test_forced_unequal_label_repair():
    # triangle 0,1,2 with a pendant at 2; the chosen matching {01, 23} makes the
    # auxiliary graph a red/blue digon whose matching edge needs the local repair
    g = build_graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    c3 = EdgeColoring(g, (1, 2, 3, 1))
    col = color_subcubic(g, c3)
    assert verify(g, col).interval


def test_multigraph_with_digon():
    # digon plus pendants on both sides keeps it subcubic and 3-chromatic
    g = build_graph(4, [(0, 1), (0, 1), (0, 2), (1, 3)])
    chi, w = exact_chromatic_index(g)
    assert chi == 3
    col = color_subcubic(g, w)
    assert verify(g, col).interval


def test_rejects_odd_cycle_component():
    g = cycle_graph(5)
    with pytest.raises(GraphError):
        color_subcubic(g, EdgeColoring(g, (1, 2, 1, 2, 3)))


def test_rejects_high_degree():
    g = complete_bipartite_graph(1, 4)
    with pytest.raises(GraphError):
        color_subcubic(g, EdgeColoring(g, (1, 2, 3, 4)))


def test_rejects_improper_input():
    g = cycle_graph(4)
    with pytest.raises(GraphError):
        color_subcubic(g, EdgeColoring(g, (1, 1, 2, 2)))


@given(st.integers(0, 100_000))
@settings(max_examples=80, deadline=None)
def test_random_cubic_class1(seed):
    g, c3 = random_cubic_class1(20, random.Random(seed))
    col = color_subcubic(g, c3)
    assert verify(g, col).interval
    assert len(set(col.colors)) <= 6


@given(st.integers(0, 100_000))
@settings(max_examples=120, deadline=None)
def test_random_subcubic_class1(seed):
    rng = random.Random(seed)
    n = rng.randint(4, 9)
    deg = [0] * n
    edges = []
    for _ in range(rng.randint(3, 13)):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v and deg[u] < 3 and deg[v] < 3:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    g = build_graph(n, edges)
    if not 0 < g.edge_count <= 14 or g.max_degree < 3:
        return
    for comp in g.components():
        eids = {e for v in comp for e in g.incidence[v]}
        if eids and all(g.degree(v) == 2 for v in comp) and len(eids) % 2:
            return
    chi, w = exact_chromatic_index(g)
    if chi > 3:
        return
    col = color_subcubic(g, w)
    assert verify(g, col).interval
    assert len(set(col.colors)) <= 6


def test_mixed_components():
    # a cubic component, an even cycle, a path, and a lone matching edge together
    base = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]          # K4
    cyc = [(4, 5), (5, 6), (6, 7), (7, 4)]                           # C4
    path = [(8, 9), (9, 10)]
    lone = [(11, 12)]
    g = build_graph(13, base + cyc + path + lone)
    chi, w = exact_chromatic_index(g)
    col = color_subcubic(g, w)
    assert verify(g, col).interval
