"""
Graph substrate shared by every other module: an immutable simple undirected graph on 0..n-1,
cycles in canonical form, BFS metrics, line graph, vertex deletion, brute-force isomorphism,
and the `graph <n>` / `e <u> <v>` text format.

Everything here is a pure function over immutable values, so results can be shared freely
between worker threads.

Usage:
  import graph_core as gc
  g = gc.Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
  gc.diameter(g)              # 2
  gc.shortest_path_stats(g, 0, 2)   # (2, 2)
  print(gc.format_graph(g))
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple, Union

import networkx as nx

INF = math.inf
Edge = Tuple[int, int]
# A distance is a natural number or INF.
Distance = Union[int, float]


class GraphFormatError(ValueError):
    """Malformed graph text; message carries the line number."""


def norm_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"Loop {{{u},{v}}} is not allowed in a simple graph")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph; vertices are 0..vertex_count-1, edges stored as sorted pairs."""

    vertex_count: int
    edges: FrozenSet[Edge] = frozenset()

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError(f"Negative vertex count {self.vertex_count}")
        normalized = set()
        for e in self.edges:
            u, v = e
            for x in (u, v):
                if not 0 <= x < self.vertex_count:
                    raise IndexError(f"Edge {e} has endpoint outside [0, {self.vertex_count})")
            normalized.add(norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(n, frozenset(norm_edge(int(e[0]), int(e[1])) for e in edges))

    @cached_property
    def adjacency(self) -> Tuple[FrozenSet[int], ...]:
        adj: List[Set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def neighbors(self, v: int) -> FrozenSet[int]:
        check_vertex(self, v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and norm_edge(u, v) in self.edges

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)


def check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.vertex_count:
        raise IndexError(f"Vertex {v} out of range [0, {g.vertex_count})")


# ── Cycles ──────────────────────────────────────────────────────────────


def _canonical_cycle(seq: Tuple[int, ...]) -> Tuple[int, ...]:
    i = seq.index(min(seq))
    forward = seq[i:] + seq[:i]
    backward = (forward[0],) + tuple(reversed(forward[1:]))
    return min(forward, backward)


@dataclass(frozen=True, order=True)
class Cycle:
    """Cyclic vertex sequence, stored as the least sequence over all rotations and both directions."""

    vertices: Tuple[int, ...]

    def __post_init__(self) -> None:
        seq = tuple(int(v) for v in self.vertices)
        if len(seq) < 3:
            raise ValueError(f"A cycle needs at least 3 vertices, got {seq}")
        if len(set(seq)) != len(seq):
            raise ValueError(f"Cycle vertices must be distinct, got {seq}")
        object.__setattr__(self, "vertices", _canonical_cycle(seq))

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self.vertices

    def __iter__(self):
        return iter(self.vertices)

    def edges(self) -> FrozenSet[Edge]:
        vs = self.vertices
        return frozenset(norm_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    def position(self, v: int) -> int:
        try:
            return self.vertices.index(v)
        except ValueError:
            raise ValueError(f"Vertex {v} is not on cycle {self.vertices}") from None

    def neighbors_on(self, v: int) -> Tuple[int, int]:
        i = self.position(v)
        k = len(self.vertices)
        return self.vertices[(i - 1) % k], self.vertices[(i + 1) % k]

    def arc(self, u: int, v: int) -> List[int]:
        """Vertices from u to v walking in stored (forward) direction, both ends included."""
        i, j = self.position(u), self.position(v)
        k = len(self.vertices)
        return [self.vertices[(i + s) % k] for s in range((j - i) % k + 1)]


def is_cycle_of(g: Graph, c: Cycle) -> bool:
    return all(0 <= v < g.vertex_count for v in c) and c.edges() <= g.edges


# ── Metrics ─────────────────────────────────────────────────────────────


def bfs_distances(g: Graph, source: int) -> List[Distance]:
    check_vertex(g, source)
    dist: List[Distance] = [INF] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if dist[y] == INF:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def distance(g: Graph, u: int, v: int) -> Distance:
    check_vertex(g, v)
    return bfs_distances(g, u)[v]


def all_pairs_distances(g: Graph) -> List[List[Distance]]:
    return [bfs_distances(g, s) for s in range(g.vertex_count)]


def diameter(g: Graph) -> Distance:
    if g.vertex_count == 0:
        raise ValueError("Diameter of the empty graph is undefined")
    return max(max(row) for row in all_pairs_distances(g))


def components(g: Graph) -> List[List[int]]:
    seen = [False] * g.vertex_count
    out: List[List[int]] = []
    for s in range(g.vertex_count):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.vertex_count > 0 and len(components(g)) == 1


def is_tree(g: Graph) -> bool:
    return is_connected(g) and len(g.edges) == g.vertex_count - 1


def tree_path(t: Graph, x: int, y: int) -> List[int]:
    """Vertex sequence of the path x..y; in a tree this is the unique path."""
    check_vertex(t, x)
    check_vertex(t, y)
    parent: Dict[int, int] = {x: x}
    queue = deque([x])
    while queue and y not in parent:
        a = queue.popleft()
        for b in sorted(t.adjacency[a]):
            if b not in parent:
                parent[b] = a
                queue.append(b)
    if y not in parent:
        raise ValueError(f"No path between {x} and {y}")
    path = [y]
    while path[-1] != x:
        path.append(parent[path[-1]])
    return path[::-1]


def shortest_path_stats(g: Graph, u: int, v: int) -> Tuple[Distance, int]:
    """(distance, number of distinct shortest u-v paths); count is 0 when disconnected."""
    check_vertex(g, u)
    check_vertex(g, v)
    if u == v:
        raise ValueError("shortest_path_stats needs two distinct vertices")
    dist: List[Distance] = [INF] * g.vertex_count
    count = [0] * g.vertex_count
    dist[u] = 0
    count[u] = 1
    queue = deque([u])
    adj = g.adjacency
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for y in adj[x]:
            if dist[y] == INF:
                dist[y] = dist[x] + 1
                queue.append(y)
            if dist[y] == dist[x] + 1:
                count[y] += count[x]
    return dist[v], count[v]


def enumerate_shortest_paths(g: Graph, u: int, v: int, limit: Optional[int] = None) -> List[List[int]]:
    """Shortest u-v paths as vertex lists (at most `limit` of them), in lexicographic order."""
    to_v = bfs_distances(g, v)
    check_vertex(g, u)
    if to_v[u] == INF:
        return []
    out: List[List[int]] = []
    path = [u]

    def walk(x: int) -> bool:
        if x == v:
            out.append(list(path))
            return limit is not None and len(out) >= limit
        for y in sorted(g.adjacency[x]):
            if to_v[y] == to_v[x] - 1:
                path.append(y)
                stop = walk(y)
                path.pop()
                if stop:
                    return True
        return False

    walk(u)
    return out


# ── Constructions ───────────────────────────────────────────────────────


def line_graph(g: Graph) -> Tuple[Graph, List[Edge]]:
    """Line graph; vertex i of the result is the i-th edge of g in sorted order."""
    order = g.sorted_edges()
    index = {e: i for i, e in enumerate(order)}
    incident: List[List[int]] = [[] for _ in range(g.vertex_count)]
    for e, i in index.items():
        incident[e[0]].append(i)
        incident[e[1]].append(i)
    pairs = set()
    for ids in incident:
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                pairs.add(norm_edge(ids[a], ids[b]))
    return Graph(len(order), frozenset(pairs)), order


def remove_vertices(g: Graph, xs: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    """Induced subgraph on V minus xs, with the order-preserving old->new index map."""
    drop = set(xs)
    for x in drop:
        check_vertex(g, x)
    keep = [v for v in range(g.vertex_count) if v not in drop]
    index = {v: i for i, v in enumerate(keep)}
    edges = frozenset(
        norm_edge(index[a], index[b]) for a, b in g.edges if a in index and b in index
    )
    return Graph(len(keep), edges), index


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex v renamed perm[v]; perm must be a permutation of 0..n-1."""
    if sorted(perm) != list(range(g.vertex_count)):
        raise ValueError("relabel needs a permutation of the vertex set")
    return Graph.from_edges(g.vertex_count, ((perm[a], perm[b]) for a, b in g.edges))


def to_networkx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.vertex_count))
    out.add_edges_from(g.edges)
    return out


def from_networkx(h: nx.Graph) -> Graph:
    try:
        nodes = sorted(h.nodes())
    except TypeError:
        nodes = list(h.nodes())
    index = {x: i for i, x in enumerate(nodes)}
    return Graph.from_edges(len(nodes), ((index[a], index[b]) for a, b in h.edges() if a != b))


# ── Isomorphism ─────────────────────────────────────────────────────────


def find_bijection(
    size_a: int,
    relations_a: Sequence[FrozenSet[Edge]],
    colors_a: Sequence[int],
    size_b: int,
    relations_b: Sequence[FrozenSet[Edge]],
    colors_b: Sequence[int],
) -> Optional[Dict[int, int]]:
    """
    Backtracking search for a bijection preserving every relation and every color.
    Candidates are pruned by a degree/neighbour-degree signature. Exponential in the worst
    case; meant for structures of a dozen or so vertices.
    """
    if size_a != size_b or len(relations_a) != len(relations_b):
        return None
    if any(len(ra) != len(rb) for ra, rb in zip(relations_a, relations_b)):
        return None

    def adjacency(size: int, rels: Sequence[FrozenSet[Edge]]) -> List[List[Set[int]]]:
        out = []
        for rel in rels:
            adj: List[Set[int]] = [set() for _ in range(size)]
            for x, y in rel:
                adj[x].add(y)
                adj[y].add(x)
            out.append(adj)
        return out

    adj_a = adjacency(size_a, relations_a)
    adj_b = adjacency(size_b, relations_b)

    def signature(adj: List[List[Set[int]]], colors: Sequence[int], v: int) -> tuple:
        return (colors[v],) + tuple(
            (len(a[v]), tuple(sorted(len(a[w]) for w in a[v]))) for a in adj
        )

    sig_a = [signature(adj_a, colors_a, v) for v in range(size_a)]
    sig_b = [signature(adj_b, colors_b, v) for v in range(size_b)]
    if sorted(sig_a) != sorted(sig_b):
        return None

    # Visit vertices with many already-placed neighbours first so inconsistencies surface early.
    order: List[int] = []
    placed: Set[int] = set()
    while len(order) < size_a:
        best = max(
            (v for v in range(size_a) if v not in placed),
            key=lambda v: (sum(len(a[v] & placed) for a in adj_a), sum(len(a[v]) for a in adj_a), -v),
        )
        order.append(best)
        placed.add(best)

    candidates = {v: [w for w in range(size_b) if sig_b[w] == sig_a[v]] for v in order}
    mapping: Dict[int, int] = {}
    used: Set[int] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in candidates[v]:
            if w in used:
                continue
            if all(
                (x in a[v]) == (mapping[x] in b[w])
                for x in mapping
                for a, b in zip(adj_a, adj_b)
            ):
                mapping[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    return dict(mapping) if extend(0) else None


def isomorphic(g: Graph, h: Graph) -> Optional[Dict[int, int]]:
    """Some isomorphism g -> h, or None."""
    return find_bijection(
        g.vertex_count, [g.edges], [0] * g.vertex_count,
        h.vertex_count, [h.edges], [0] * h.vertex_count,
    )


# ── Text format ─────────────────────────────────────────────────────────


def format_graph(g: Graph) -> str:
    lines = [f"graph {g.vertex_count}"]
    lines.extend(f"e {u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_ints(parts: List[str], lineno: int) -> List[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphFormatError(f"line {lineno}: expected integers, got {' '.join(parts)!r}") from None


def parse_graph_lines(lines: Sequence[str]) -> Tuple[Graph, List[Tuple[int, List[str]]]]:
    """
    Parse a `graph <n>` block. Returns the graph plus the remaining records
    (line number, tokens) that are not `e` lines, for formats layered on top of this one.
    """
    n: Optional[int] = None
    edges: List[Edge] = []
    rest: List[Tuple[int, List[str]]] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "graph" or len(parts) != 2:
                raise GraphFormatError(f"line {lineno}: expected 'graph <n>', got {line!r}")
            n = parse_ints(parts[1:], lineno)[0]
            if n < 0:
                raise GraphFormatError(f"line {lineno}: negative vertex count")
            continue
        if parts[0] == "e":
            if len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: expected 'e <u> <v>', got {line!r}")
            u, v = parse_ints(parts[1:], lineno)
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"line {lineno}: invalid edge {u} {v} for graph {n}")
            edges.append(norm_edge(u, v))
        else:
            rest.append((lineno, parts))
    if n is None:
        raise GraphFormatError("missing 'graph <n>' header")
    return Graph.from_edges(n, edges), rest


def parse_graph(text: str) -> Graph:
    g, rest = parse_graph_lines(text.splitlines())
    if rest:
        lineno, parts = rest[0]
        raise GraphFormatError(f"line {lineno}: unexpected record {parts[0]!r}")
    return g
