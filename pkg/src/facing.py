"""
Facing structures <H, L>: the dual graph of a (pseudo-)BOP graph with its layout relation and
the crossing bijection E(H) <-> E(G).

Covers construction (from the pseudo-facial sweep or straight from a dissection), layout
validation, chains and the layout line graph, tree + layout -> BOP reconstruction, the plane
orientation propagated from a seed (a, p, q), global coordinates, and a canonical form for trees
with layout.

Layout conventions:
  - a non-leaf is a vertex of degree >= 2; its neighbourhood ring is the cyclic order that L
    induces on Gamma(v)
  - left[u][x] is the counter-clockwise successor of x around u; right is its inverse
  - loc_u(v) = (d_L(v, p_u), d_L(v, q_u)) with p_u the parent of u (p at the root) and
    q_u = left[u][p_u] (q at the root)

Usage:
  import facing
  fs = facing.facing(g)                      # FacingStructure
  facing.validate_layout(fs.gwl)             # [] for BOP graphs
  facing.reconstruct(fs.gwl)                 # graph isomorphic to g
  facing.canonical_form(fs.gwl)              # bytes, equal iff layout-isomorphic
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple, Union

from bop import Dissection, build_graph, facial_data
from graph_core import (
    Cycle,
    Edge,
    Graph,
    GraphFormatError,
    format_graph,
    is_tree,
    norm_edge,
    parse_graph_lines,
    parse_ints,
)
from pseudo_facial import NotPseudoBOPError, is_pseudo_bop

FACE = "face"
OUTER_EDGE = "outer_edge"


class LayoutError(ValueError):
    """Invalid layout, non-tree host where a tree is required, or a bad orientation seed."""


@dataclass(frozen=True)
class GraphWithLayout:
    """Host graph h, layout pairs over V(h), and one color per vertex (all 0 by default)."""

    h: Graph
    layout: FrozenSet[Edge] = frozenset()
    colors: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        n = self.h.vertex_count
        pairs = set()
        for p in self.layout:
            x, y = int(p[0]), int(p[1])
            if x == y:
                raise LayoutError(f"layout pair {{{x},{y}}} is reflexive")
            if not (0 <= x < n and 0 <= y < n):
                raise LayoutError(f"layout pair {{{x},{y}}} is outside the host vertex set")
            pairs.add(norm_edge(x, y))
        object.__setattr__(self, "layout", frozenset(pairs))
        colors = tuple(int(c) for c in self.colors) if self.colors else (0,) * n
        if len(colors) != n:
            raise LayoutError(f"expected {n} colors, got {len(colors)}")
        object.__setattr__(self, "colors", colors)

    @cached_property
    def layout_adjacency(self) -> Tuple[FrozenSet[int], ...]:
        return Graph(self.h.vertex_count, self.layout).adjacency

    def non_leaves(self) -> List[int]:
        return [v for v in range(self.h.vertex_count) if self.h.degree(v) >= 2]


@dataclass
class FacingStructure:
    gwl: GraphWithLayout
    kinds: Tuple[str, ...]
    # H vertex -> the facial cycle or outer edge of G it stands for
    nodes: Tuple[Union[Cycle, Edge], ...]
    # H edge -> G edge it crosses
    cross: Dict[Edge, Edge]
    source: Graph

    def crossed_by(self) -> Dict[Edge, Edge]:
        return {g_edge: h_edge for h_edge, g_edge in self.cross.items()}

    def faces(self) -> List[Cycle]:
        return [c for c, kind in zip(self.nodes, self.kinds) if kind == FACE]


# ── Construction ────────────────────────────────────────────────────────


def _share_endpoint(e: Edge, f: Edge) -> bool:
    return bool(set(e) & set(f))


def _assemble_facing(source: Graph, faces: Sequence[Cycle], outer: Sequence[Edge]) -> FacingStructure:
    nodes: List[Union[Cycle, Edge]] = list(faces) + list(outer)
    kinds = (FACE,) * len(faces) + (OUTER_EDGE,) * len(outer)
    outer_index = {e: len(faces) + i for i, e in enumerate(outer)}
    members: Dict[Edge, List[int]] = {}
    for i, c in enumerate(faces):
        for e in c.edges():
            members.setdefault(e, []).append(i)

    cross: Dict[Edge, Edge] = {}
    for e in source.sorted_edges():
        on = members.get(e, [])
        if len(on) == 2:
            h_edge = norm_edge(on[0], on[1])
        elif len(on) == 1 and e in outer_index:
            h_edge = norm_edge(on[0], outer_index[e])
        else:
            raise NotPseudoBOPError([f"edge {e} lies on {len(on)} cycles of the given face set"])
        if h_edge in cross:
            raise NotPseudoBOPError([f"edges {cross[h_edge]} and {e} cross the same dual edge"])
        cross[h_edge] = e
    h = Graph(len(nodes), frozenset(cross))
    adj = h.adjacency

    # Rule 1: two neighbours of x are L-related iff their crossed G-edges meet.
    rule1 = set()
    for x in range(len(nodes)):
        nbrs = sorted(adj[x])
        for i, y1 in enumerate(nbrs):
            for y2 in nbrs[i + 1:]:
                if _share_endpoint(cross[norm_edge(x, y1)], cross[norm_edge(x, y2)]):
                    rule1.add(norm_edge(y1, y2))

    # Rule 2: cross pairs across an edge {u, v} joining two non-leaves.
    layout = set(rule1)
    for u, v in h.sorted_edges():
        if len(adj[u]) < 2 or len(adj[v]) < 2:
            continue
        v_side = [y for y in sorted(adj[u]) if y != v and norm_edge(y, v) in rule1]
        u_side = [z for z in sorted(adj[v]) if z != u and norm_edge(z, u) in rule1]
        for y in v_side:
            for z in u_side:
                if y != z and _share_endpoint(cross[norm_edge(u, y)], cross[norm_edge(v, z)]):
                    layout.add(norm_edge(y, z))

    gwl = GraphWithLayout(h, frozenset(layout))
    return FacingStructure(gwl=gwl, kinds=kinds, nodes=tuple(nodes), cross=cross, source=source)


def facing(g: Graph) -> FacingStructure:
    """Facing structure of a pseudo-BOP graph; raises NotPseudoBOPError with the violations."""
    report = is_pseudo_bop(g)
    if not report.ok:
        raise NotPseudoBOPError(report.violations)
    return _assemble_facing(g, sorted(report.cycles), sorted(report.outer_edges))


def facing_of_dissection(d: Dissection) -> FacingStructure:
    """Same structure as facing(build_graph(d)), built from the polygon faces directly."""
    fd = facial_data(d)
    return _assemble_facing(build_graph(d), sorted(fd.facial_cycles), sorted(fd.outer_edges))


def is_dual_tree(fs: FacingStructure) -> bool:
    return is_tree(fs.gwl.h)


# ── Validation ──────────────────────────────────────────────────────────


@dataclass(frozen=True)
class LayoutViolation:
    condition: str
    message: str
    witnesses: Tuple[int, ...] = ()


def _neighbourhood_ring(t: GraphWithLayout, v: int) -> Optional[List[int]]:
    """Cyclic order of Gamma(v) when L restricted to Gamma(v) is a single cycle, else None."""
    nb = t.h.adjacency[v]
    if len(nb) < 3:
        return None
    inner = {x: t.layout_adjacency[x] & nb for x in nb}
    if any(len(s) != 2 for s in inner.values()):
        return None
    start = min(nb)
    ring = [start]
    prev, cur = start, min(inner[start])
    while cur != start:
        ring.append(cur)
        a, b = sorted(inner[cur])
        prev, cur = cur, (b if a == prev else a)
    return ring if len(ring) == len(nb) else None


def _ring_neighbours(ring: List[int], x: int) -> Tuple[int, int]:
    i = ring.index(x)
    return ring[i - 1], ring[(i + 1) % len(ring)]


def _check(t: GraphWithLayout) -> Tuple[List[LayoutViolation], Dict[int, List[int]]]:
    h, layout = t.h, t.layout
    adj = h.adjacency
    out: List[LayoutViolation] = []
    for v in range(h.vertex_count):
        if len(adj[v]) == 2:
            out.append(LayoutViolation("host", f"vertex {v} has degree 2", (v,)))
    for a, b in h.sorted_edges():
        for c in sorted(adj[a] & adj[b]):
            if c > b:
                out.append(LayoutViolation("host", f"host graph contains the triangle {a},{b},{c}", (a, b, c)))

    rings: Dict[int, List[int]] = {}
    for v in t.non_leaves():
        ring = _neighbourhood_ring(t, v)
        if ring is None:
            out.append(LayoutViolation("3", f"layout does not induce a cycle on the neighbourhood of {v}", (v,)))
        else:
            rings[v] = ring

    allowed = set()
    for ring in rings.values():
        for i, x in enumerate(ring):
            allowed.add(norm_edge(x, ring[(i + 1) % len(ring)]))
    for u, v in h.sorted_edges():
        if u not in rings or v not in rings:
            continue
        v1, v2 = _ring_neighbours(rings[u], v)
        u1, u2 = _ring_neighbours(rings[v], u)
        if {v1, v2} & {u1, u2}:
            out.append(LayoutViolation("4", f"neighbours of {v} around {u} meet those of {u} around {v}", (u, v)))
            continue
        straight = norm_edge(v1, u1) in layout and norm_edge(v2, u2) in layout
        crossed = norm_edge(v1, u2) in layout and norm_edge(v2, u1) in layout
        if straight == crossed:
            out.append(LayoutViolation("4", f"cross pairs across edge {{{u},{v}}} are missing or ambiguous", (u, v)))
            continue
        if straight:
            allowed.update((norm_edge(v1, u1), norm_edge(v2, u2)))
        else:
            allowed.update((norm_edge(v1, u2), norm_edge(v2, u1)))

    for pair in sorted(layout - allowed):
        out.append(LayoutViolation("5", f"layout pair {pair} is not required by any neighbourhood", pair))
    return out, rings


def validate_layout(t: GraphWithLayout) -> List[LayoutViolation]:
    """Empty iff the host has no degree-2 vertex and no triangle and L satisfies conditions 3-5."""
    return _check(t)[0]


def _valid_rings(t: GraphWithLayout, need_tree: bool = False) -> Dict[int, List[int]]:
    violations, rings = _check(t)
    if violations:
        raise LayoutError("invalid layout: " + "; ".join(v.message for v in violations[:5]))
    if need_tree and not is_tree(t.h):
        raise LayoutError("host graph is not a tree")
    return rings


# ── Chains ──────────────────────────────────────────────────────────────


def layout_line_graph(t: GraphWithLayout) -> Graph:
    """Graph over E(h) (sorted order) joining two edges iff some chain joins them."""
    _valid_rings(t)
    h, layout = t.h, t.layout
    order = h.sorted_edges()
    index = {e: i for i, e in enumerate(order)}
    pairs = set()

    def extend(path: List[int]) -> None:
        last = path[-1]
        for x in sorted(h.adjacency[last]):
            if x in path or norm_edge(path[-2], x) not in layout:
                continue
            if len(path) >= 3 and norm_edge(path[-3], x) not in layout:
                continue
            pairs.add(norm_edge(index[norm_edge(path[0], path[1])], index[norm_edge(last, x)]))
            path.append(x)
            extend(path)
            path.pop()

    for a, b in order:
        extend([a, b])
        extend([b, a])
    return Graph(len(order), frozenset(pairs))


# ── Orientation and coordinates ─────────────────────────────────────────


@dataclass
class Orientation:
    seed: Tuple[int, int, int]
    left: Dict[int, Dict[int, int]] = field(default_factory=dict)
    right: Dict[int, Dict[int, int]] = field(default_factory=dict)

    def ring(self, u: int, start: int) -> List[int]:
        """Neighbours of u in counter-clockwise order beginning at start."""
        out = [start]
        nxt = self.left[u][start]
        while nxt != start:
            out.append(nxt)
            nxt = self.left[u][nxt]
        return out


def _directed(ring: List[int], x: int, y: int) -> List[int]:
    i = ring.index(x)
    k = len(ring)
    if ring[(i + 1) % k] == y:
        return [ring[(i + s) % k] for s in range(k)]
    if ring[(i - 1) % k] == y:
        return [ring[(i - s) % k] for s in range(k)]
    raise LayoutError(f"{x} and {y} are not consecutive in the neighbourhood ring")


def _successors(seq: List[int]) -> Dict[int, int]:
    return {x: seq[(i + 1) % len(seq)] for i, x in enumerate(seq)}


def _orient(t: GraphWithLayout, rings: Dict[int, List[int]], a: int, p: int, q: int) -> Orientation:
    if a not in rings:
        raise LayoutError(f"seed vertex {a} is not a non-leaf")
    if p not in t.h.adjacency[a] or q not in t.h.adjacency[a] or norm_edge(p, q) not in t.layout:
        raise LayoutError(f"({p}, {q}) is not a layout pair around {a}")
    adj = t.h.adjacency
    left = {a: _successors(_directed(rings[a], p, q))}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        for v in sorted(adj[u]):
            if v in left or v not in rings:
                continue
            v1 = left[u][v]
            partners = [w for w in _ring_neighbours(rings[v], u) if norm_edge(v1, w) in t.layout]
            if len(partners) != 1:
                raise LayoutError(f"no unique cross partner for {v1} across edge {{{u},{v}}}")
            # the partner precedes u around v
            left[v] = _successors(_directed(rings[v], partners[0], u))
            queue.append(v)
    right = {u: {y: x for x, y in succ.items()} for u, succ in left.items()}
    return Orientation(seed=(a, p, q), left=left, right=right)


def orientation(t: GraphWithLayout, a: int, p: int, q: int) -> Orientation:
    """Rotation system of every non-leaf, with q the counter-clockwise successor of p around a."""
    return _orient(t, _valid_rings(t, need_tree=True), a, p, q)


def _coordinates(t: GraphWithLayout, orient: Orientation) -> Dict[int, Tuple[Tuple[int, int], ...]]:
    a, p, q = orient.seed
    adj = t.h.adjacency
    glo: Dict[int, Tuple[Tuple[int, int], ...]] = {a: ()}
    parent: Dict[int, Optional[int]] = {a: None}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        if u not in orient.left:
            continue
        if u == a:
            pu, qu = p, q
        else:
            pu = parent[u]
            qu = orient.left[u][pu]
        ring = orient.ring(u, pu)
        pos = {x: i for i, x in enumerate(ring)}
        k = len(ring)

        def d_l(x: int, y: int) -> int:
            d = abs(pos[x] - pos[y])
            return min(d, k - d)

        for v in sorted(adj[u]):
            if v == parent[u]:
                continue
            parent[v] = u
            glo[v] = glo[u] + ((d_l(v, pu), d_l(v, qu)),)
            queue.append(v)
    return glo


def global_coordinates(t: GraphWithLayout, a: int, p: int, q: int) -> Dict[int, Tuple[Tuple[int, int], ...]]:
    return _coordinates(t, orientation(t, a, p, q))


def _seeds(t: GraphWithLayout, rings: Dict[int, List[int]]) -> List[Tuple[int, int, int]]:
    out = []
    for a in sorted(rings):
        for p in sorted(rings[a]):
            for q in sorted(_ring_neighbours(rings[a], p)):
                out.append((a, p, q))
    return out


def canonical_form(t: GraphWithLayout) -> bytes:
    """Least serialization of sorted (glo(v), deg v, color v) rows over every seed."""
    rings = _valid_rings(t, need_tree=True)
    if not rings:
        raise LayoutError("a tree with layout needs at least one non-leaf")
    best: Optional[bytes] = None
    for a, p, q in _seeds(t, rings):
        glo = _coordinates(t, _orient(t, rings, a, p, q))
        rows = sorted(
            ([list(c) for c in glo[v]], t.h.degree(v), t.colors[v]) for v in range(t.h.vertex_count)
        )
        blob = json.dumps(rows, separators=(",", ":")).encode("utf-8")
        if best is None or blob < best:
            best = blob
    return best


def layout_isomorphic(t1: GraphWithLayout, t2: GraphWithLayout) -> bool:
    return canonical_form(t1) == canonical_form(t2)


# ── Reconstruction ──────────────────────────────────────────────────────


def reconstruct_dissection(t: GraphWithLayout) -> Dissection:
    """
    Walk the contour of the plane tree: leaves in contour order are the polygon sides
    {i, i+1}, and the leaves beyond a tree edge form an interval a..b whose edge is {a, b+1}.
    """
    rings = _valid_rings(t, need_tree=True)
    if not rings:
        raise LayoutError("a tree with layout needs at least one non-leaf")
    a = min(rings)
    p = min(rings[a])
    q = min(_ring_neighbours(rings[a], p))
    left = _orient(t, rings, a, p, q).left
    adj = t.h.adjacency

    leaves: List[int] = []
    entered: Dict[Tuple[int, int], int] = {}
    start = dart = (a, p)
    while True:
        x, y = dart
        entered[dart] = len(leaves)
        if len(adj[y]) == 1:
            leaves.append(y)
            dart = (y, x)
        else:
            dart = (y, left[y][x])
        if dart == start:
            break

    n = len(leaves)
    parent = {a: a}
    queue = deque([a])
    chords = set()
    while queue:
        x = queue.popleft()
        for y in sorted(adj[x]):
            if y in parent:
                continue
            parent[y] = x
            queue.append(y)
            lo, hi = entered[(x, y)], entered[(y, x)]
            if hi - lo >= 2:
                chords.add(norm_edge(lo, hi % n))
    return Dissection(n, frozenset(chords))


def reconstruct(t: GraphWithLayout) -> Graph:
    """The BOP graph whose facing structure is t."""
    return build_graph(reconstruct_dissection(t))


# ── Text format ─────────────────────────────────────────────────────────


def format_graph_with_layout(t: GraphWithLayout) -> str:
    lines = [format_graph(t.h).rstrip("\n")]
    lines.extend(f"l {x} {y}" for x, y in sorted(t.layout))
    if any(t.colors):
        lines.extend(f"c {v} {c}" for v, c in enumerate(t.colors))
    return "\n".join(lines) + "\n"


def parse_graph_with_layout(text: str) -> GraphWithLayout:
    h, rest = parse_graph_lines(text.splitlines())
    layout: List[Edge] = []
    colors = [0] * h.vertex_count
    for lineno, parts in rest:
        if parts[0] == "l" and len(parts) == 3:
            x, y = parse_ints(parts[1:], lineno)
            if x == y or not (0 <= x < h.vertex_count and 0 <= y < h.vertex_count):
                raise GraphFormatError(f"line {lineno}: invalid layout pair {x} {y}")
            layout.append(norm_edge(x, y))
        elif parts[0] == "c" and len(parts) == 3:
            v, c = parse_ints(parts[1:], lineno)
            if not 0 <= v < h.vertex_count:
                raise GraphFormatError(f"line {lineno}: color for unknown vertex {v}")
            colors[v] = c
        else:
            raise GraphFormatError(f"line {lineno}: unexpected record {' '.join(parts)!r}")
    return GraphWithLayout(h, frozenset(layout), tuple(colors))
