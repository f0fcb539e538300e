"""
Combinatorial parameters used by the depth bounds: fineness r(T) of a tree, r-yuppies, the
directed path signatures ch(w), the adjoining relation around a vertex, the cycle-size subword
signature, and the longest induced path of degree-2 vertices.

Degree sequences of undirected paths are compared up to reversal (fold_reversal); ch(w)
sequences stay directed because they are anchored at w.
"""
from __future__ import annotations

from collections import defaultdict
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from graph_core import (
    Cycle,
    Edge,
    Graph,
    all_pairs_distances,
    bfs_distances,
    check_vertex,
    components,
    is_tree,
    norm_edge,
    remove_vertices,
)
from pseudo_facial import pseudo_facial_cycles

DegreeSequence = Tuple[int, ...]


def fold_reversal(seq) -> DegreeSequence:
    t = tuple(seq)
    return min(t, t[::-1])


def _require_tree(t: Graph) -> None:
    if not is_tree(t):
        raise ValueError("expects a tree")


def _require_r(r: int) -> None:
    if r < 1:
        raise ValueError(f"r must be at least 1, got {r}")


# ── Fineness ────────────────────────────────────────────────────────────


def _paths_of_order(t: Graph, r: int) -> List[Tuple[int, ...]]:
    """Every r-vertex path of a tree once, found from its endpoint pair at distance r-1."""
    if r == 1:
        return [(v,) for v in range(t.vertex_count)]
    out = []
    adj = t.adjacency
    for x in range(t.vertex_count):
        parent = {x: x}
        depth = {x: 0}
        frontier = [x]
        while frontier and depth[frontier[0]] < r - 1:
            nxt = []
            for a in frontier:
                for b in adj[a]:
                    if b not in parent:
                        parent[b] = a
                        depth[b] = depth[a] + 1
                        nxt.append(b)
            frontier = nxt
        for y in frontier:
            if y > x and depth[y] == r - 1:
                path = [y]
                while path[-1] != x:
                    path.append(parent[path[-1]])
                out.append(tuple(reversed(path)))
    return out


def is_r_fine(t: Graph, r: int) -> bool:
    """No two vertex-disjoint r-vertex paths share a degree sequence (up to reversal)."""
    _require_tree(t)
    _require_r(r)
    degrees = t.degrees()
    buckets: Dict[DegreeSequence, List[FrozenSet[int]]] = defaultdict(list)
    for path in _paths_of_order(t, r):
        key = fold_reversal(degrees[v] for v in path)
        vs = frozenset(path)
        if any(not (vs & other) for other in buckets[key]):
            return False
        buckets[key].append(vs)
    return True


def fineness(t: Graph, cap: Optional[int] = None) -> Optional[int]:
    """Least r <= cap with is_r_fine, or None when the cap is exceeded; cap defaults to |T|."""
    _require_tree(t)
    cap = cap or t.vertex_count
    if cap < 1:
        raise ValueError(f"cap must be at least 1, got {cap}")
    for r in range(1, cap + 1):
        if is_r_fine(t, r):
            return r
    return None


def _all_paths_naive(g: Graph, r: int) -> List[Tuple[int, ...]]:
    out: List[Tuple[int, ...]] = []

    def grow(path: List[int]) -> None:
        if len(path) == r:
            out.append(tuple(path))
            return
        for y in sorted(g.adjacency[path[-1]]):
            if y not in path:
                path.append(y)
                grow(path)
                path.pop()

    for v in range(g.vertex_count):
        grow([v])
    return out


def is_r_fine_naive(t: Graph, r: int) -> bool:
    """Same predicate as is_r_fine, comparing every pair of explicitly listed paths."""
    _require_r(r)
    degrees = t.degrees()
    paths = _all_paths_naive(t, r)
    for i, p in enumerate(paths):
        for q in paths[i + 1:]:
            if set(p) & set(q):
                continue
            if fold_reversal(degrees[v] for v in p) == fold_reversal(degrees[v] for v in q):
                return False
    return True


def fineness_naive(t: Graph, cap: Optional[int] = None) -> Optional[int]:
    cap = cap or t.vertex_count
    return next((r for r in range(1, cap + 1) if is_r_fine_naive(t, r)), None)


# ── Yuppies and path signatures ─────────────────────────────────────────


def yuppie_set(g: Graph, r: int) -> FrozenSet[int]:
    """Vertices that are exact midpoints of some pair at distance 2r."""
    _require_r(r)
    dist = all_pairs_distances(g)
    n = g.vertex_count
    out: Set[int] = set()
    for u in range(n):
        for w in range(u + 1, n):
            if dist[u][w] == 2 * r:
                out.update(v for v in range(n) if dist[u][v] == r and dist[v][w] == r)
    return frozenset(out)


def ch_set(t: Graph, w: int, r: int) -> FrozenSet[DegreeSequence]:
    """Degree sequences along the paths from w (excluded) to each vertex at distance r."""
    _require_tree(t)
    check_vertex(t, w)
    _require_r(r)
    dist = bfs_distances(t, w)
    adj = t.adjacency
    out = set()
    for target in range(t.vertex_count):
        if dist[target] != r:
            continue
        seq = [target]
        while dist[seq[-1]] > 1:
            seq.append(next(x for x in adj[seq[-1]] if dist[x] == dist[seq[-1]] - 1))
        out.add(tuple(len(adj[x]) for x in reversed(seq)))
    return frozenset(out)


# ── Adjoining relation and cycle-size subwords ──────────────────────────


def _cycles_at(g: Graph, v: int, fmax: int) -> List[Cycle]:
    check_vertex(g, v)
    return [c for c in sorted(pseudo_facial_cycles(g)) if len(c) <= fmax and v in c]


def adjoining_pairs(g: Graph, v: int, fmax: int) -> FrozenSet[Edge]:
    """Pairs {a, b} of neighbours of v whose edges to v lie on one pseudo-facial cycle of length <= fmax."""
    return frozenset(norm_edge(*c.neighbors_on(v)) for c in _cycles_at(g, v, fmax))


def vertex_subword_set(g: Graph, v: int, fmax: int, r: int) -> Optional[FrozenSet[Tuple[int, ...]]]:
    """
    Length-r windows of the cycle sizes met walking the adjoining path around v, in both
    directions. None when the adjoining relation is not a single path through all of Gamma(v).
    """
    _require_r(r)
    by_pair: Dict[Edge, List[Cycle]] = defaultdict(list)
    for c in _cycles_at(g, v, fmax):
        by_pair[norm_edge(*c.neighbors_on(v))].append(c)
    nb = g.adjacency[v]
    if len(nb) < 2 or any(len(cs) > 1 for cs in by_pair.values()):
        return None
    if len(by_pair) != len(nb) - 1:
        return None
    link: Dict[int, List[int]] = defaultdict(list)
    for a, b in by_pair:
        link[a].append(b)
        link[b].append(a)
    if set(link) != set(nb) or any(len(x) > 2 for x in link.values()):
        return None
    ends = sorted(x for x in nb if len(link[x]) == 1)
    if len(ends) != 2:
        return None
    walk = [ends[0]]
    while len(walk) < len(nb):
        step = [y for y in link[walk[-1]] if y not in walk]
        if not step:
            return None
        walk.append(step[0])
    s1 = tuple(len(by_pair[norm_edge(walk[i], walk[i + 1])][0]) for i in range(len(walk) - 1))
    s2 = s1[::-1]
    return frozenset(s[i:i + r] for s in (s1, s2) for i in range(len(s) - r + 1))


# ── Degree-2 runs ───────────────────────────────────────────────────────


def longest_degree_two_induced_path(g: Graph) -> int:
    """
    Most vertices on an induced path made of degree-2 vertices. The degree-2 vertices induce
    paths and cycles; a cycle of length k contributes k - 1.
    """
    degrees = g.degrees()
    sub, _ = remove_vertices(g, [v for v, d in enumerate(degrees) if d != 2])
    best = 0
    for comp in components(sub):
        inside = set(comp)
        edge_count = sum(1 for a, b in sub.edges if a in inside)
        best = max(best, len(comp) - 1 if edge_count == len(comp) else len(comp))
    return best
