"""
Phase 1 tests for src/pseudo_facial.py.
Oracle functions, shortest biconnections, the sweep, pseudo-BOP recognition and coordinates.
"""
import math

import networkx as nx
import pytest

import pseudo_facial as pf
from bop import build_graph, recognize_bop
from conftest import complete_graph, cycle_graph, path_graph
from dissections import enumerate_dissections
from facing import facing
from graph_core import Cycle, Graph, from_networkx, is_tree


def _atlas(max_order):
    return [
        from_networkx(h)
        for h in nx.graph_atlas_g()
        if 1 <= h.number_of_nodes() <= max_order and nx.is_connected(h)
    ]


# ---------- TC-01: simple cycles and girth (unit, functional) ----------
@pytest.mark.unit
def test_simple_cycles_lists_each_cycle_once(c4_chord):
    assert pf.simple_cycles(c4_chord) == (Cycle((0, 1, 2)), Cycle((0, 1, 2, 3)), Cycle((0, 2, 3)))
    assert len(pf.simple_cycles(complete_graph(4))) == 7


@pytest.mark.unit
def test_girth_via_examples():
    assert pf.girth_via(complete_graph(4), 0, 3) == 3
    assert pf.girth_via(cycle_graph(5), 1, 3) == 5
    assert pf.girth_via(path_graph(4), 0, 3) == math.inf


@pytest.mark.unit
def test_girth_via_same_vertex_raises():
    with pytest.raises(ValueError, match="distinct"):
        pf.girth_via(cycle_graph(4), 2, 2)


@pytest.mark.unit
def test_shortest_cycle_via_examples(c4_chord):
    assert pf.shortest_cycle_via(cycle_graph(5), 0, 2) == Cycle((0, 1, 2, 3, 4))
    assert pf.shortest_cycle_via(complete_graph(4), 0, 1) is None
    assert pf.shortest_cycle_via(c4_chord, 1, 3) == Cycle((0, 1, 2, 3))
    assert pf.shortest_cycle_via(path_graph(3), 0, 2) is None


# ---------- TC-02: shortest biconnections (unit, functional) ----------
@pytest.mark.unit
def test_biconnection_split_orders_arcs():
    split = pf.biconnection_split(Cycle((0, 1, 2, 3, 4)), 0, 2)
    assert split.p1 == (0, 1, 2)
    assert split.p2 == (0, 4, 3, 2)
    assert not split.antipodal
    assert pf.biconnection_split(Cycle(tuple(range(6))), 0, 3).antipodal


@pytest.mark.unit
def test_biconnection_split_adjacent_raises():
    with pytest.raises(ValueError, match="adjacent"):
        pf.biconnection_split(Cycle((0, 1, 2, 3)), 0, 1)


@pytest.mark.unit
def test_is_shortest_biconnection_examples():
    c6 = Cycle(tuple(range(6)))
    assert pf.is_shortest_biconnection(cycle_graph(6), c6, 0, 3)
    with_chord = Graph(6, cycle_graph(6).edges | {(0, 3)})
    assert not pf.is_shortest_biconnection(with_chord, c6, 0, 2)
    assert pf.is_shortest_biconnection(cycle_graph(5), Cycle((0, 1, 2, 3, 4)), 0, 2)


# ---------- TC-03: boundary-like vs oracle (unit, functional) ----------
@pytest.mark.unit
def test_boundary_like_examples():
    k4 = complete_graph(4)
    for tri in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]:
        assert pf.is_boundary_like(k4, Cycle(tri))
        assert pf.is_pseudo_facial_oracle(k4, Cycle(tri))
    assert not pf.is_boundary_like(k4, Cycle((0, 1, 2, 3)))
    assert not pf.is_pseudo_facial_oracle(k4, Cycle((0, 1, 2, 3)))
    c7 = Cycle(tuple(range(7)))
    assert pf.is_boundary_like(cycle_graph(7), c7)
    assert pf.is_pseudo_facial_oracle(cycle_graph(7), c7)


@pytest.mark.unit
def test_boundary_like_requires_cycle_of_graph():
    with pytest.raises(ValueError, match="not a cycle"):
        pf.is_boundary_like(path_graph(4), Cycle((0, 1, 2, 3)))
    assert pf.is_pseudo_facial_oracle(path_graph(4), Cycle((0, 1, 2, 3))) is False


@pytest.mark.integration
def test_boundary_like_matches_oracle_up_to_order_five():
    for g in _atlas(5):
        for c in pf.simple_cycles(g):
            assert pf.is_boundary_like(g, c) == pf.is_pseudo_facial_oracle(g, c), (sorted(g.edges), c)


@pytest.mark.slow
def test_boundary_like_matches_oracle_order_six():
    for g in _atlas(6):
        oracle = {c for c in pf.simple_cycles(g) if pf.is_pseudo_facial_oracle(g, c)}
        assert {c for c in pf.simple_cycles(g) if pf.is_boundary_like(g, c)} == oracle
        assert set(pf.pseudo_facial_cycles(g)) == oracle


# ---------- TC-04: pseudo-facial sweep (unit, functional) ----------
@pytest.mark.unit
def test_pseudo_facial_cycles_examples(c4_chord):
    k4 = pf.pseudo_facial_cycles(complete_graph(4))
    assert k4 == frozenset(Cycle(t) for t in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
    assert pf.pseudo_facial_cycles(c4_chord) == frozenset({Cycle((0, 1, 2)), Cycle((0, 2, 3))})
    assert pf.pseudo_facial_cycles(cycle_graph(6)) == frozenset({Cycle(tuple(range(6)))})
    assert pf.pseudo_facial_cycles(path_graph(5)) == frozenset()


@pytest.mark.integration
def test_sweep_matches_oracle_up_to_order_five():
    for g in _atlas(5):
        oracle = {c for c in pf.simple_cycles(g) if pf.is_pseudo_facial_oracle(g, c)}
        assert set(pf.pseudo_facial_cycles(g)) == oracle, sorted(g.edges)


@pytest.mark.integration
def test_pseudo_facial_cycles_meet_in_at_most_an_edge():
    for g in _atlas(5):
        cycles = sorted(pf.pseudo_facial_cycles(g))
        for i, c1 in enumerate(cycles):
            for c2 in cycles[i + 1:]:
                common = sorted(set(c1) & set(c2))
                assert len(common) <= 2
                if len(common) == 2:
                    assert g.has_edge(*common)


@pytest.mark.unit
def test_edge_membership_covers_every_edge(c4_chord):
    m = pf.edge_membership(c4_chord)
    assert set(m) == c4_chord.edges
    assert len(m[(0, 2)]) == 2
    assert all(len(m[e]) == 1 for e in [(0, 1), (1, 2), (2, 3), (0, 3)])


# ---------- TC-05: pseudo-BOP recognition (unit, integration) ----------
@pytest.mark.unit
def test_k4_is_pseudo_bop_without_outer_edges():
    report = pf.is_pseudo_bop(complete_graph(4))
    assert report.ok
    assert report.outer_edges == frozenset()
    assert report.violations == []


@pytest.mark.unit
def test_isolated_vertex_violates_condition_one():
    g = Graph.from_edges(7, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    report = pf.is_pseudo_bop(g)
    assert not report.ok
    assert any("condition 1" in v and "vertex 6" in v for v in report.violations)


@pytest.mark.unit
def test_tree_edges_violate_condition_two():
    report = pf.is_pseudo_bop(path_graph(3))
    assert not report.ok
    assert any("condition 2" in v for v in report.violations)


@pytest.mark.unit
def test_bowtie_violates_condition_three():
    # two triangles sharing vertex 2: both edges at 2 on each triangle are outer
    bowtie = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    report = pf.is_pseudo_bop(bowtie)
    assert not report.ok
    assert any("condition 3" in v and "vertex 2" in v for v in report.violations)


@pytest.mark.integration
@pytest.mark.parametrize("n", range(3, 8))
def test_every_bop_graph_is_pseudo_bop(n):
    for d in enumerate_dissections(n):
        report = pf.is_pseudo_bop(build_graph(d))
        assert report.ok, d
        assert report.outer_edges == d.sides()


@pytest.mark.integration
def test_pseudo_bop_with_tree_dual_is_bop():
    for g in _atlas(6):
        if g.vertex_count < 3 or not pf.is_pseudo_bop(g).ok:
            continue
        if is_tree(facing(g).gwl.h):
            assert recognize_bop(g) is not None, sorted(g.edges)


@pytest.mark.unit
def test_facial_circumference_of_examples(hexagon_split):
    assert pf.facial_circumference_of(build_graph(hexagon_split)) == 4
    assert pf.facial_circumference_of(complete_graph(4)) == 3
    assert pf.facial_circumference_of(path_graph(4)) == 0


# ---------- TC-06: cycle coordinates (unit, functional) ----------
@pytest.mark.unit
def test_cycle_coordinates_examples():
    c6 = Cycle(tuple(range(6)))
    assert pf.cycle_coordinates(c6, 0, 3, 1) == pf.CycleCoordinates(None, 1)
    c5 = Cycle((0, 1, 2, 3, 4))
    assert pf.cycle_coordinates(c5, 0, 2, 1) == pf.CycleCoordinates(1, 1)
    assert pf.cycle_coordinates(c5, 0, 2, 3) == pf.CycleCoordinates(2, 2)


@pytest.mark.unit
def test_cycle_coordinates_endpoints_convention():
    c5 = Cycle((0, 1, 2, 3, 4))
    assert pf.cycle_coordinates(c5, 0, 2, 0) == pf.CycleCoordinates(1, 0)
    assert pf.cycle_coordinates(c5, 0, 2, 2) == pf.CycleCoordinates(1, 2)


@pytest.mark.unit
def test_cycle_coordinates_vertex_off_cycle_raises():
    with pytest.raises(ValueError, match="not on cycle"):
        pf.cycle_coordinates(Cycle((0, 1, 2, 3)), 0, 2, 9)
