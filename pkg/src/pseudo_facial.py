"""
Pseudo-facial cycles of arbitrary graphs: girth through two vertices, shortest cycle via a pair,
shortest biconnections, the boundary-like test, the pseudo-facial sweep, pseudo-BOP recognition
and cycle coordinates.

Two paths lead to the same answer:
  - oracle:   is_pseudo_facial_oracle / girth_via / shortest_cycle_via enumerate every simple cycle
              (exponential; small graphs only)
  - sweep:    pseudo_facial_cycles builds one candidate per non-adjacent pair from shortest-path
              counts and keeps it when is_boundary_like holds

"Unique path of length at most |P2|" is decided by shortest-path counting: once the distance in the
reduced graph equals |P2|, every path of length <= |P2| there is a shortest one.

Usage:
  import pseudo_facial as pf
  pf.pseudo_facial_cycles(g)       # frozenset of Cycle
  report = pf.is_pseudo_bop(g)     # report.ok, report.outer_edges, report.violations
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Tuple

from graph_core import (
    INF,
    Cycle,
    Distance,
    Edge,
    Graph,
    all_pairs_distances,
    check_vertex,
    enumerate_shortest_paths,
    is_cycle_of,
    norm_edge,
    remove_vertices,
    shortest_path_stats,
)


class NotPseudoBOPError(ValueError):
    def __init__(self, violations: List[str]):
        self.violations = list(violations)
        super().__init__("graph is not pseudo-BOP: " + "; ".join(self.violations))


# ── Oracle: exhaustive cycle enumeration ───────────────────────────────


@lru_cache(maxsize=256)
def simple_cycles(g: Graph) -> Tuple[Cycle, ...]:
    """Every simple cycle of g exactly once, sorted by canonical form."""
    adj = g.adjacency
    found: List[Cycle] = []

    def dfs(start: int, path: List[int], on_path: set) -> None:
        for y in sorted(adj[path[-1]]):
            if y == start:
                # each cycle is reached twice from its least vertex; keep one direction
                if len(path) >= 3 and path[1] < path[-1]:
                    found.append(Cycle(tuple(path)))
            elif y > start and y not in on_path:
                path.append(y)
                on_path.add(y)
                dfs(start, path, on_path)
                path.pop()
                on_path.discard(y)

    for s in range(g.vertex_count):
        dfs(s, [s], {s})
    return tuple(sorted(found))


def _check_pair(g: Graph, u: int, v: int) -> None:
    check_vertex(g, u)
    check_vertex(g, v)
    if u == v:
        raise ValueError("needs two distinct vertices")


@lru_cache(maxsize=256)
def _cycles_by_pair(g: Graph) -> Dict[Tuple[int, int], Tuple[int, Tuple[Cycle, ...]]]:
    """(u, v) with u < v -> (girth through both, the cycles of that length through both)."""
    table: Dict[Tuple[int, int], Tuple[int, Tuple[Cycle, ...]]] = {}
    for c in simple_cycles(g):
        vs = sorted(c.vertices)
        for i, u in enumerate(vs):
            for v in vs[i + 1:]:
                best = table.get((u, v))
                if best is None or len(c) < best[0]:
                    table[(u, v)] = (len(c), (c,))
                elif len(c) == best[0]:
                    table[(u, v)] = (best[0], best[1] + (c,))
    return table


def girth_via(g: Graph, u: int, v: int) -> Distance:
    _check_pair(g, u, v)
    hit = _cycles_by_pair(g).get(norm_edge(u, v))
    return INF if hit is None else hit[0]


def shortest_cycle_via(g: Graph, u: int, v: int) -> Optional[Cycle]:
    """The cycle through u and v when it is the only one of minimum length, else None."""
    _check_pair(g, u, v)
    hit = _cycles_by_pair(g).get(norm_edge(u, v))
    if hit is None or len(hit[1]) != 1:
        return None
    return hit[1][0]


def _non_adjacent_pairs(c: Cycle) -> List[Tuple[int, int]]:
    vs = c.vertices
    k = len(vs)
    return [(vs[i], vs[j]) for i in range(k) for j in range(i + 2, k) if not (i == 0 and j == k - 1)]


def is_pseudo_facial_oracle(g: Graph, c: Cycle) -> bool:
    if not is_cycle_of(g, c):
        return False
    return all(shortest_cycle_via(g, u, v) == c for u, v in _non_adjacent_pairs(c))


# ── Shortest biconnections ─────────────────────────────────────────────


@dataclass(frozen=True)
class BiconnectionSplit:
    """The two arcs of a cycle between u and v, both listed from u to v; |p1| <= |p2|."""

    p1: Tuple[int, ...]
    p2: Tuple[int, ...]

    @property
    def len1(self) -> int:
        return len(self.p1) - 1

    @property
    def len2(self) -> int:
        return len(self.p2) - 1

    @property
    def antipodal(self) -> bool:
        return self.len1 == self.len2


def biconnection_split(c: Cycle, u: int, v: int) -> BiconnectionSplit:
    if u == v:
        raise ValueError("needs two distinct vertices")
    forward = tuple(c.arc(u, v))
    backward = tuple(reversed(c.arc(v, u)))
    if min(len(forward), len(backward)) < 3:
        raise ValueError(f"{u} and {v} are adjacent on cycle {c.vertices}")
    if len(backward) < len(forward):
        forward, backward = backward, forward
    return BiconnectionSplit(forward, backward)


def is_shortest_biconnection(g: Graph, c: Cycle, u: int, v: int) -> bool:
    split = biconnection_split(c, u, v)
    if split.antipodal:
        return shortest_path_stats(g, u, v) == (split.len1, 2)
    if shortest_path_stats(g, u, v) != (split.len1, 1):
        return False
    reduced, index = remove_vertices(g, split.p1[1:-1])
    return shortest_path_stats(reduced, index[u], index[v]) == (split.len2, 1)


def is_boundary_like(g: Graph, c: Cycle) -> bool:
    if not is_cycle_of(g, c):
        raise ValueError(f"{c.vertices} is not a cycle of the graph")
    return all(is_shortest_biconnection(g, c, u, v) for u, v in _non_adjacent_pairs(c))


# ── Sweep ───────────────────────────────────────────────────────────────


def _candidate(g: Graph, u: int, v: int) -> Optional[Cycle]:
    _, count = shortest_path_stats(g, u, v)
    if count == 2:
        p, q = enumerate_shortest_paths(g, u, v, limit=2)
        if set(p[1:-1]) & set(q[1:-1]):
            return None
    elif count == 1:
        p = enumerate_shortest_paths(g, u, v, limit=1)[0]
        reduced, index = remove_vertices(g, p[1:-1])
        _, count2 = shortest_path_stats(reduced, index[u], index[v])
        if count2 != 1:
            return None
        back = {new: old for old, new in index.items()}
        q = [back[x] for x in enumerate_shortest_paths(reduced, index[u], index[v], limit=1)[0]]
    else:
        return None
    return Cycle(tuple(p + q[-2:0:-1]))


@lru_cache(maxsize=256)
def pseudo_facial_cycles(g: Graph) -> FrozenSet[Cycle]:
    """All triangles plus every boundary-like cycle generated from a non-adjacent pair."""
    adj = g.adjacency
    found = set()
    for a in range(g.vertex_count):
        for b in adj[a]:
            if b <= a:
                continue
            for c in adj[a] & adj[b]:
                if c > b:
                    found.add(Cycle((a, b, c)))
    dist = all_pairs_distances(g)
    rejected = set()
    for u in range(g.vertex_count):
        for v in range(u + 1, g.vertex_count):
            if dist[u][v] == INF or dist[u][v] < 2:
                continue
            cand = _candidate(g, u, v)
            if cand is None or cand in found or cand in rejected:
                continue
            if is_boundary_like(g, cand):
                found.add(cand)
            else:
                rejected.add(cand)
    return frozenset(found)


def edge_membership(g: Graph, cycles: Optional[FrozenSet[Cycle]] = None) -> Dict[Edge, List[Cycle]]:
    """Edge -> sorted pseudo-facial cycles containing it (every edge of g is a key)."""
    if cycles is None:
        cycles = pseudo_facial_cycles(g)
    out: Dict[Edge, List[Cycle]] = {e: [] for e in g.sorted_edges()}
    for c in sorted(cycles):
        for e in c.edges():
            out[e].append(c)
    return out


@dataclass
class PseudoBOPReport:
    ok: bool
    outer_edges: FrozenSet[Edge]
    violations: List[str] = field(default_factory=list)
    cycles: FrozenSet[Cycle] = frozenset()


def is_pseudo_bop(g: Graph) -> PseudoBOPReport:
    """
    Checks: (1) no isolated vertex; (2) every edge on one or two pseudo-facial cycles;
    (3) a vertex whose two edges on a pseudo-facial cycle C are both outer lies on no other
    pseudo-facial cycle. Outer edges are those on exactly one cycle.
    """
    cycles = pseudo_facial_cycles(g)
    membership = edge_membership(g, cycles)
    violations: List[str] = []
    for v, deg in enumerate(g.degrees()):
        if deg == 0:
            violations.append(f"condition 1: vertex {v} is isolated")
    for e, on in membership.items():
        if not 1 <= len(on) <= 2:
            violations.append(f"condition 2: edge {e} lies on {len(on)} pseudo-facial cycles")
    outer = frozenset(e for e, on in membership.items() if len(on) == 1)
    for c in sorted(cycles):
        for v in c:
            a, b = c.neighbors_on(v)
            if norm_edge(v, a) in outer and norm_edge(v, b) in outer:
                others = [d for d in sorted(cycles) if d != c and v in d]
                if others:
                    violations.append(
                        f"condition 3: vertex {v} has two outer edges on {c.vertices} "
                        f"but also lies on {others[0].vertices}"
                    )
    return PseudoBOPReport(ok=not violations, outer_edges=outer, violations=violations, cycles=cycles)


def facial_circumference_of(g: Graph) -> int:
    """f(G): longest pseudo-facial cycle (0 when there is none)."""
    return max((len(c) for c in pseudo_facial_cycles(g)), default=0)


# ── Coordinates on a split cycle ───────────────────────────────────────


@dataclass(frozen=True)
class CycleCoordinates:
    """branch is None on an antipodal split, else 1 or 2 for the arc holding the vertex."""

    branch: Optional[int]
    distance: int


def cycle_coordinates(c: Cycle, u: int, v: int, w: int) -> CycleCoordinates:
    if w not in c:
        raise ValueError(f"Vertex {w} is not on cycle {c.vertices}")
    split = biconnection_split(c, u, v)
    if split.antipodal:
        arc = split.p1 if w in split.p1 else split.p2
        return CycleCoordinates(None, arc.index(w))
    if w in split.p1:
        return CycleCoordinates(1, split.p1.index(w))
    return CycleCoordinates(2, split.p2.index(w))
