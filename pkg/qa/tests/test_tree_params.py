"""
Phase 1 tests for src/tree_params.py.
Fineness (fast scan vs naive), yuppies, ch(w), the adjoining relation, cycle-size subwords and
degree-2 runs.
"""
import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import tree_params as tp
from bop import Dissection, build_graph
from conftest import complete_graph, cycle_graph, path_graph, star_graph
from dissections import enumerate_dissections
from graph_core import Graph, from_networkx, is_connected, remove_vertices


@st.composite
def small_trees(draw, max_order=10):
    n = draw(st.integers(min_value=3, max_value=max_order))
    code = draw(st.lists(st.integers(min_value=0, max_value=n - 1), min_size=n - 2, max_size=n - 2))
    return from_networkx(nx.from_prufer_sequence(code))


def _trees(order):
    return [from_networkx(t) for t in nx.nonisomorphic_trees(order)]


# ---------- TC-01: fineness examples (unit, functional) ----------
@pytest.mark.unit
@pytest.mark.parametrize("n, expected", [(2, 2), (3, 2), (4, 3), (5, 3), (6, 4), (7, 4)])
def test_path_fineness(n, expected):
    assert tp.fineness(path_graph(n)) == expected


@pytest.mark.unit
def test_star_and_single_vertex_fineness():
    assert tp.fineness(star_graph(3)) == 2
    assert tp.fineness(star_graph(6)) == 2
    assert tp.fineness(Graph(1)) == 1


@pytest.mark.unit
def test_fineness_cap_exceeded_returns_none():
    assert not tp.is_r_fine(path_graph(6), 3)
    assert tp.fineness(path_graph(6), cap=3) is None
    assert tp.fineness(path_graph(6), cap=4) == 4


@pytest.mark.unit
def test_fineness_rejects_non_trees_and_bad_r():
    with pytest.raises(ValueError, match="tree"):
        tp.fineness(cycle_graph(4))
    with pytest.raises(ValueError, match="at least 1"):
        tp.is_r_fine(path_graph(3), 0)


@pytest.mark.unit
def test_fold_reversal_picks_lesser_direction():
    assert tp.fold_reversal([3, 1, 2]) == (2, 1, 3)
    assert tp.fold_reversal((1, 2, 3)) == (1, 2, 3)


# ---------- TC-02: fineness vs naive oracle (unit, property-based, integration) ----------
@pytest.mark.unit
@settings(max_examples=60, deadline=None)
@given(small_trees(max_order=9))
def test_fineness_matches_naive_on_random_trees(t):
    assert tp.fineness(t) == tp.fineness_naive(t)


@pytest.mark.integration
@pytest.mark.parametrize("order", range(2, 9))
def test_fineness_matches_naive_on_all_trees(order):
    for t in _trees(order):
        assert tp.fineness(t) == tp.fineness_naive(t), sorted(t.edges)


@pytest.mark.slow
@pytest.mark.parametrize("order", [9, 10])
def test_fineness_matches_naive_on_larger_trees(order):
    for t in _trees(order):
        assert tp.fineness(t) == tp.fineness_naive(t), sorted(t.edges)


# ---------- TC-03: yuppies and ch(w) (unit, functional) ----------
@pytest.mark.unit
def test_yuppie_set_on_path():
    p5 = path_graph(5)
    assert tp.yuppie_set(p5, 1) == frozenset({1, 2, 3})
    assert tp.yuppie_set(p5, 2) == frozenset({2})
    assert tp.yuppie_set(p5, 3) == frozenset()


@pytest.mark.unit
def test_yuppie_set_on_star():
    assert tp.yuppie_set(star_graph(4), 1) == frozenset({0})


@pytest.mark.integration
@pytest.mark.parametrize("order", range(2, 9))
def test_yuppies_span_a_subtree(order):
    for t in _trees(order):
        for r in range(1, 5):
            ys = tp.yuppie_set(t, r)
            if not ys:
                continue
            sub, _ = remove_vertices(t, [v for v in range(t.vertex_count) if v not in ys])
            assert is_connected(sub), (sorted(t.edges), r, sorted(ys))


@pytest.mark.unit
def test_ch_set_examples():
    p5 = path_graph(5)
    assert tp.ch_set(p5, 0, 2) == frozenset({(2, 2)})
    assert tp.ch_set(p5, 2, 2) == frozenset({(2, 1)})
    assert tp.ch_set(star_graph(3), 1, 2) == frozenset({(3, 1)})
    assert tp.ch_set(p5, 0, 5) == frozenset()


@pytest.mark.unit
def test_ch_set_requires_tree():
    with pytest.raises(ValueError, match="tree"):
        tp.ch_set(cycle_graph(5), 0, 1)


# ---------- TC-04: adjoining relation and subwords (unit, functional) ----------
@pytest.mark.unit
def test_adjoining_pairs_around_split_square(c4_chord):
    assert tp.adjoining_pairs(c4_chord, 0, 3) == frozenset({(1, 2), (2, 3)})
    assert tp.adjoining_pairs(c4_chord, 0, 2) == frozenset()
    assert tp.adjoining_pairs(c4_chord, 1, 3) == frozenset({(0, 2)})


@pytest.mark.integration
@pytest.mark.parametrize("n", range(3, 9))
def test_adjoining_pairs_form_a_path_between_outer_neighbours(n):
    for d in enumerate_dissections(n):
        g = build_graph(d)
        for v in range(n):
            nbrs = g.adjacency[v]
            pairs = tp.adjoining_pairs(g, v, n)
            assert len(pairs) == len(nbrs) - 1, (d, v)
            walk = nx.Graph()
            walk.add_nodes_from(nbrs)
            walk.add_edges_from(pairs)
            assert set(walk.nodes) == set(nbrs), (d, v)
            assert nx.is_tree(walk) and max(deg for _, deg in walk.degree) <= 2, (d, v)
            ends = {x for x, deg in walk.degree if deg == 1}
            assert ends == {(v - 1) % n, (v + 1) % n}, (d, v)


@pytest.mark.unit
def test_vertex_subword_set_examples():
    square = build_graph(Dissection(4, frozenset({(0, 2)})))
    assert tp.vertex_subword_set(square, 0, 3, 2) == frozenset({(3, 3)})
    assert tp.vertex_subword_set(square, 0, 3, 1) == frozenset({(3,)})
    assert tp.vertex_subword_set(cycle_graph(6), 0, 6, 1) == frozenset({(6,)})
    assert tp.vertex_subword_set(complete_graph(4), 0, 3, 1) is None


@pytest.mark.unit
def test_vertex_subword_set_reads_both_directions():
    # fan at 0: triangle, pentagon, triangle
    d = Dissection(7, frozenset({(0, 2), (0, 5)}))
    g = build_graph(d)
    assert tp.vertex_subword_set(g, 0, 7, 2) == frozenset({(3, 5), (5, 3)})
    assert tp.vertex_subword_set(g, 0, 7, 3) == frozenset({(3, 5, 3)})
    assert tp.vertex_subword_set(g, 0, 3, 1) is None


# ---------- TC-05: degree-2 runs (unit) ----------
@pytest.mark.unit
def test_longest_degree_two_induced_path():
    assert tp.longest_degree_two_induced_path(cycle_graph(7)) == 6
    assert tp.longest_degree_two_induced_path(build_graph(Dissection(6, frozenset({(0, 3)})))) == 2
    assert tp.longest_degree_two_induced_path(path_graph(5)) == 3
    assert tp.longest_degree_two_induced_path(complete_graph(4)) == 0
