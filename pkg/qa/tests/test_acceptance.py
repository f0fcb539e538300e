"""
Integration tests for src/acceptance.py: corpora sizes and the quick sweeps.
The full sweeps are marked slow (run with: pytest -m slow).
"""
import pytest

import acceptance as acc
from conftest import cycle_graph


# ---------- TC-01: corpora (unit) ----------
@pytest.mark.unit
def test_corpus_sizes():
    # connected graphs on 1..5 vertices: 1, 1, 2, 6, 21
    assert [len(acc.connected_graphs(k)) for k in range(1, 6)] == [1, 1, 2, 6, 21]
    assert len(acc.connected_graphs_upto(4)) == 10
    assert len(acc.all_graphs_upto(3)) == 7
    # trees on 1..7 vertices: 1, 1, 1, 2, 3, 6, 11
    assert len(acc.trees_upto(7)) == 25
    assert len(acc.dissections_upto(5)) == 1 + 3 + 11


@pytest.mark.unit
def test_iso_classes_merges_relabelled_graphs():
    from bop import Dissection, build_graph

    graphs = [build_graph(Dissection(5, frozenset({(0, 2)}))), build_graph(Dissection(5, frozenset({(1, 3)})))]
    assert len(acc.iso_classes(graphs)) == 1


@pytest.mark.unit
def test_unknown_check_name():
    with pytest.raises(ValueError, match="unknown checks"):
        acc.run_acceptance(quick=True, only=["nope"])


# ---------- TC-02: quick sweeps (integration) ----------
@pytest.mark.integration
@pytest.mark.parametrize(
    "name",
    [
        "facing-round-trip",
        "crossing-bijection",
        "facing-isomorphism",
        "boundary-like-oracle",
        "cycle-intersections",
        "game-values",
        "halving-strategy",
        "params",
    ],
)
def test_quick_check_passes(name):
    [result] = acc.run_acceptance(quick=True, only=[name])
    assert result.passed, result.failures
    assert result.cases > 0


@pytest.mark.slow
@pytest.mark.parametrize("name", ["bound-consistency", "counting-sampling"])
def test_quick_heavy_check_passes(name):
    [result] = acc.run_acceptance(quick=True, only=[name])
    assert result.passed, result.failures


@pytest.mark.slow
def test_full_suite_passes():
    results = acc.run_acceptance(quick=False)
    assert [r.name for r in results] == list(acc.CHECKS)
    failed = {r.name: r.failures for r in results if not r.passed}
    assert not failed


# ---------- TC-03: facing-depth bound per side (unit) ----------
@pytest.mark.unit
def test_facing_bound_uses_each_side():
    c3, c4 = cycle_graph(3), cycle_graph(4)
    depth, sides = acc.facing_bound_sides(c3, c4)
    assert depth == 2
    # both duals are stars, fineness 2; the face sizes differ
    assert [(s.f, s.r) for s in sides] == [(3, 2), (4, 2)]
    assert all(s.bound.holds(depth) for s in sides)

    depth_swapped, swapped = acc.facing_bound_sides(c4, c3)
    assert depth_swapped == depth
    assert [(s.f, s.r) for s in swapped] == [(4, 2), (3, 2)]
    assert [s.bound.value for s in swapped] == [s.bound.value for s in reversed(sides)]


@pytest.mark.unit
def test_facing_bound_has_no_sides_past_max_k():
    depth, sides = acc.facing_bound_sides(cycle_graph(3), cycle_graph(4), max_k=1)
    assert depth is None
    assert sides == []
