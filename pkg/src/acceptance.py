"""
Property sweeps behind `bopdepth verify`. Each check runs over an exhaustive corpus (all
dissections, all small connected graphs from the networkx atlas, all small trees) and reports
the number of cases and the first few failures.

Quick mode shrinks every corpus so the whole suite runs in well under a minute.

Usage:
  from acceptance import run_acceptance
  for result in run_acceptance(quick=True):
      print(result.name, result.passed, result.cases)
"""
from __future__ import annotations

import math
import tempfile
import time
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from bop import Dissection, build_graph, facial_circumference
from depth_bounds import BoundFormula, BoundValue, evaluate_bound
from dissections import count_dissections, enumerate_dissections, generator_for, sample_dissection
from ef_game import (
    ef_depth,
    halving_strategy,
    max_depth_over_family,
    verify_strategy,
)
from env_manager import VERIFY_SEED, get_logger
from facing import canonical_form, facing, facing_of_dissection, layout_line_graph, reconstruct, validate_layout
from graph_core import Graph, all_pairs_distances, from_networkx, is_connected, isomorphic, line_graph, remove_vertices
from pseudo_facial import is_boundary_like, is_pseudo_facial_oracle, pseudo_facial_cycles, simple_cycles
from run_experiment import ExperimentConfig, run_experiment
from tree_params import fineness, fineness_naive, yuppie_set

log = get_logger("acceptance")

MAX_FAILURES_KEPT = 10


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    failures: List[str] = field(default_factory=list)
    seconds: float = 0.0


class _Tally:
    def __init__(self) -> None:
        self.cases = 0
        self.failures: List[str] = []
        self.failed = 0

    def expect(self, ok: bool, message: Callable[[], str]) -> None:
        self.cases += 1
        if not ok:
            self.failed += 1
            if len(self.failures) < MAX_FAILURES_KEPT:
                self.failures.append(message())


# ── Corpora ─────────────────────────────────────────────────────────────


@lru_cache(maxsize=None)
def dissections_upto(n: int) -> Tuple[Dissection, ...]:
    return tuple(d for k in range(3, n + 1) for d in enumerate_dissections(k))


@lru_cache(maxsize=None)
def connected_graphs(order: int) -> Tuple[Graph, ...]:
    """Every connected graph of exactly `order` vertices, one per isomorphism class."""
    return tuple(
        from_networkx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() == order and nx.is_connected(h)
    )


def connected_graphs_upto(order: int) -> List[Graph]:
    return [g for k in range(1, order + 1) for g in connected_graphs(k)]


def all_graphs_upto(order: int) -> List[Graph]:
    """One graph per isomorphism class with 1..order vertices, connected or not."""
    return [from_networkx(h) for h in nx.graph_atlas_g() if 1 <= h.number_of_nodes() <= order]


def trees_upto(order: int) -> List[Graph]:
    out = [Graph(1, frozenset())]
    for k in range(2, order + 1):
        out.extend(from_networkx(t) for t in nx.nonisomorphic_trees(k))
    return out


def iso_classes(graphs: Iterable[Graph]) -> List[Graph]:
    reps: List[Graph] = []
    for g in graphs:
        if not any(isomorphic(g, r) is not None for r in reps):
            reps.append(g)
    return reps


def _ceil_log2(x: int) -> int:
    return (x - 1).bit_length()


# ── Checks ──────────────────────────────────────────────────────────────


def check_facing_round_trip(quick: bool) -> _Tally:
    tally = _Tally()
    for d in dissections_upto(6 if quick else 8):
        g = build_graph(d)
        fs = facing_of_dissection(d)
        h = fs.gwl.h
        tally.expect(not validate_layout(fs.gwl), lambda: f"{d}: layout invalid")
        tally.expect(len(h.edges) == len(g.edges), lambda: f"{d}: |E(H)| != |E(G)|")
        tally.expect(h.max_degree() == facial_circumference(d), lambda: f"{d}: dual max degree != f")
        tally.expect(isomorphic(reconstruct(fs.gwl), g) is not None, lambda: f"{d}: reconstruction differs")
    return tally


def check_crossing_bijection(quick: bool) -> _Tally:
    tally = _Tally()
    for d in dissections_upto(6 if quick else 8):
        fs = facing_of_dissection(d)
        chains = layout_line_graph(fs.gwl)
        lg, g_order = line_graph(fs.source)
        g_index = {e: i for i, e in enumerate(g_order)}
        h_order = fs.gwl.h.sorted_edges()
        image = [g_index[fs.cross[e]] for e in h_order]
        ok = sorted(image) == list(range(len(g_order))) and all(
            chains.has_edge(i, j) == lg.has_edge(image[i], image[j])
            for i in range(len(h_order))
            for j in range(i + 1, len(h_order))
        )
        tally.expect(ok, lambda: f"{d}: crossing map is not a line-graph isomorphism")
    return tally


def check_facing_isomorphism(quick: bool) -> _Tally:
    """Graph isomorphism agrees with canonical-form equality of the facing structures."""
    tally = _Tally()
    for n in range(3, (6 if quick else 7) + 1):
        buckets: Dict[bytes, List[Dissection]] = {}
        for d in enumerate_dissections(n):
            buckets.setdefault(canonical_form(facing_of_dissection(d).gwl), []).append(d)
        reps = []
        for members in buckets.values():
            first = build_graph(members[0])
            reps.append((members[0], first))
            for d in members[1:]:
                tally.expect(
                    isomorphic(first, build_graph(d)) is not None,
                    lambda: f"{members[0]} and {d} share a facing form but are not isomorphic",
                )
        for i, (d1, g1) in enumerate(reps):
            for d2, g2 in reps[i + 1:]:
                tally.expect(
                    isomorphic(g1, g2) is None,
                    lambda: f"{d1} and {d2} are isomorphic but their facing forms differ",
                )
    return tally


def _oracle_corpus(quick: bool) -> List[Graph]:
    graphs = connected_graphs_upto(5 if quick else 6)
    sample = connected_graphs(7)
    rng = generator_for(VERIFY_SEED, 7, 0)
    take = 20 if quick else 500
    picks = sorted(rng.choice(len(sample), size=min(take, len(sample)), replace=False))
    return graphs + [sample[int(i)] for i in picks]


def check_boundary_like_oracle(quick: bool) -> _Tally:
    tally = _Tally()
    for g in _oracle_corpus(quick):
        expected = set()
        for c in simple_cycles(g):
            oracle = is_pseudo_facial_oracle(g, c)
            if oracle:
                expected.add(c)
            tally.expect(is_boundary_like(g, c) == oracle, lambda: f"{sorted(g.edges)} cycle {c.vertices}")
        tally.expect(set(pseudo_facial_cycles(g)) == expected, lambda: f"{sorted(g.edges)}: sweep disagrees")
    return tally


def check_cycle_intersections(quick: bool) -> _Tally:
    tally = _Tally()
    for g in connected_graphs_upto(5 if quick else 6):
        cycles = sorted(pseudo_facial_cycles(g))
        for i, c1 in enumerate(cycles):
            for c2 in cycles[i + 1:]:
                common = set(c1.vertices) & set(c2.vertices)
                ok = len(common) <= 2 and (len(common) < 2 or g.has_edge(*sorted(common)))
                tally.expect(ok, lambda: f"{c1.vertices} and {c2.vertices} share {sorted(common)}")
    return tally


def _cycle(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def check_game_values(quick: bool) -> _Tally:
    tally = _Tally()
    k1, k2 = Graph(1, frozenset()), Graph.from_edges(2, [(0, 1)])
    tally.expect(ef_depth(_cycle(3), _cycle(4), 5) == 2, lambda: "depth(C3, C4) != 2")
    tally.expect(ef_depth(k1, k2, 4) == 2, lambda: "depth(K1, K2) != 2")
    top = 6 if quick else 8
    for n in range(3, top + 1):
        for m in range(n + 1, top + 1):
            limit = _ceil_log2(n) + 1
            tally.expect(
                ef_depth(_cycle(n), _cycle(m), limit) is not None,
                lambda: f"depth(C{n}, C{m}) exceeds {limit}",
            )
    family = all_graphs_upto(4 if quick else 6)
    for n in range(3, (4 if quick else 6) + 1):
        bound = evaluate_bound(BoundFormula.DEF_CN, n=n)
        max_k = math.ceil(bound.value) - 1
        result = max_depth_over_family(_cycle(n), family, max_k)
        tally.expect(
            result.complete and bound.holds(result.lower_bound),
            lambda: f"C{n}: family depth {result.lower_bound} (complete={result.complete}) vs {bound.relation} {bound.value:.3f}",
        )
    return tally


def check_halving(quick: bool) -> _Tally:
    tally = _Tally()
    graphs = [g for g in connected_graphs_upto(5 if quick else 6) if g.vertex_count >= 2]
    dists = {id(g): all_pairs_distances(g) for g in graphs}
    rng = generator_for(VERIFY_SEED, 0, 7)
    wanted = 300 if quick else 10_000
    tried = 0
    while tally.cases < wanted and tried < 20 * wanted:
        tried += 1
        g1 = graphs[int(rng.integers(len(graphs)))]
        g2 = graphs[int(rng.integers(len(graphs)))]
        u, v = (int(x) for x in rng.integers(g1.vertex_count, size=2))
        u2, v2 = (int(x) for x in rng.integers(g2.vertex_count, size=2))
        d, d2 = dists[id(g1)][u][v], dists[id(g2)][u2][v2]
        if u == v or d == d2:
            continue
        budget = _ceil_log2(d)
        verdict = verify_strategy(g1, g2, [(u, u2), (v, v2)], halving_strategy(g1, g2, (u, v, u2, v2)), budget)
        tally.expect(
            verdict.success,
            lambda: f"{sorted(g1.edges)} vs {sorted(g2.edges)} anchors {(u, v, u2, v2)}: {verdict.counterexample}",
        )
    return tally


@dataclass(frozen=True)
class FacingBoundSide:
    f: int
    r: int
    bound: BoundValue


def facing_bound_sides(g: Graph, g2: Graph, max_k: int = 12) -> Tuple[Optional[int], List[FacingBoundSide]]:
    """
    Depth of (g, g2) and the facing-depth bound evaluated with the face size and dual fineness of
    each graph in turn. No sides are returned when either depth exceeds max_k.
    """
    fs, fs2 = facing(g), facing(g2)
    depth = ef_depth(g, g2, max_k)
    facing_depth = ef_depth(fs, fs2, max_k)
    if depth is None or facing_depth is None:
        return depth, []
    sides = []
    for s in (fs, fs2):
        f = max(len(c) for c in s.faces())
        r = fineness(s.gwl.h)
        sides.append(FacingBoundSide(f, r, evaluate_bound(BoundFormula.MAIN_LEMMA2B, depth=facing_depth, f=f, r=r)))
    return depth, sides


def check_bound_consistency(quick: bool) -> _Tally:
    tally = _Tally()
    small = iso_classes(build_graph(d) for d in dissections_upto(4 if quick else 5))
    for i, g in enumerate(small):
        for g2 in small[i + 1:]:
            depth, sides = facing_bound_sides(g, g2)
            if not sides:
                tally.expect(False, lambda: f"{sorted(g.edges)} vs {sorted(g2.edges)}: depth not found")
                continue
            for side in sides:
                tally.expect(
                    side.bound.holds(depth),
                    lambda: f"{sorted(g.edges)} vs {sorted(g2.edges)} at f={side.f}, r={side.r}: "
                    f"{depth} vs {side.bound.value:.3f}",
                )

    top = 5 if quick else 7
    family = iso_classes(build_graph(d) for d in dissections_upto(top))
    for g in family:
        dual = facing(g).gwl.h
        bound = evaluate_bound(BoundFormula.THEOREM1, r=fineness(dual), delta=dual.max_degree())
        result = max_depth_over_family(g, family, math.floor(bound.value))
        tally.expect(
            result.complete and bound.holds(result.lower_bound),
            lambda: f"{sorted(g.edges)}: family depth {result.lower_bound} vs {bound.value:.3f}",
        )
    return tally


def _total_variation(counts: Counter, outcomes: int, total: int) -> float:
    seen = sum(abs(c / total - 1 / outcomes) for c in counts.values())
    return 0.5 * (seen + (outcomes - len(counts)) / outcomes)


def check_counting_sampling(quick: bool) -> _Tally:
    tally = _Tally()
    for n in range(3, (7 if quick else 8) + 1):
        counted, listed = count_dissections(n), len(enumerate_dissections(n))
        tally.expect(counted == listed, lambda: f"n={n}: counted {counted}, enumerated {listed}")
    for n in (5,) if quick else (5, 6):
        outcomes = count_dissections(n)
        total = 1000 * outcomes
        counts = Counter(sample_dissection(n, generator_for(VERIFY_SEED, n, i)).chords for i in range(total))
        tv = _total_variation(counts, outcomes, total)
        tally.expect(tv <= 0.05, lambda: f"n={n}: total variation {tv:.4f}")
    with tempfile.TemporaryDirectory() as tmp:
        blobs = []
        for name in ("a.csv", "b.csv"):
            cfg = ExperimentConfig(sizes=[8, 10], samples_per_size=3, seed=VERIFY_SEED, output_path=Path(tmp) / name)
            blobs.append(run_experiment(cfg, workers=2).read_bytes())
        tally.expect(blobs[0] == blobs[1], lambda: "experiment output differs between identical runs")
    return tally


def check_params(quick: bool) -> _Tally:
    tally = _Tally()
    for t in trees_upto(7 if quick else 10):
        fast, slow = fineness(t), fineness_naive(t)
        tally.expect(fast == slow, lambda: f"{sorted(t.edges)}: fineness {fast} vs naive {slow}")
        for r in range(1, 5):
            ys = yuppie_set(t, r)
            if not ys:
                continue
            sub, _ = remove_vertices(t, [v for v in range(t.vertex_count) if v not in ys])
            tally.expect(is_connected(sub), lambda: f"{sorted(t.edges)}: {r}-yuppies {sorted(ys)} not a subtree")
    return tally


CHECKS: Dict[str, Callable[[bool], _Tally]] = {
    "facing-round-trip": check_facing_round_trip,
    "crossing-bijection": check_crossing_bijection,
    "facing-isomorphism": check_facing_isomorphism,
    "boundary-like-oracle": check_boundary_like_oracle,
    "cycle-intersections": check_cycle_intersections,
    "game-values": check_game_values,
    "halving-strategy": check_halving,
    "bound-consistency": check_bound_consistency,
    "counting-sampling": check_counting_sampling,
    "params": check_params,
}


def run_acceptance(quick: bool = False, only: Optional[Sequence[str]] = None) -> List[CheckResult]:
    names = list(only) if only else list(CHECKS)
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks {unknown}; choose from {list(CHECKS)}")
    results = []
    for name in names:
        t0 = time.perf_counter()
        tally = CHECKS[name](quick)
        res = CheckResult(name, tally.failed == 0, tally.cases, tally.failures, time.perf_counter() - t0)
        if res.passed:
            log.info("%s: %d cases ok in %.1fs", name, res.cases, res.seconds)
        else:
            log.error("%s: %d of %d cases failed", name, tally.failed, res.cases)
        results.append(res)
    return results
