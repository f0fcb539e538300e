"""
Dissections of a convex polygon and the biconnected outerplanar (BOP) graphs they describe:
chord crossing, graph construction, facial cycles by recursive splitting, BOP recognition via a
Hamiltonian-cycle search, facial circumference f(G), and the `polygon <n>` / `chord <i> <j>` format.

Vertex i of a dissection sits at polygon position i; the outer cycle is (0, 1, ..., n-1).

Usage:
  import bop
  d = bop.Dissection(6, frozenset({(0, 3)}))
  bop.facial_circumference(d)          # 4
  found = bop.recognize_bop(some_graph)   # (Dissection, order) or None
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Sequence, Tuple

from graph_core import Cycle, Edge, Graph, GraphFormatError, parse_ints, components, norm_edge


class InvalidDissectionError(ValueError):
    """A chord set that is not a dissection; the message names the offending chord(s)."""


def is_chord(n: int, pair: Sequence[int]) -> bool:
    i, j = sorted((int(pair[0]), int(pair[1])))
    return 0 <= i < j < n and (j - i) not in (1, n - 1)


def chords_cross(n: int, c1: Sequence[int], c2: Sequence[int]) -> bool:
    """True iff exactly one endpoint of c2 lies strictly inside the arc spanned by c1."""
    for c in (c1, c2):
        if not is_chord(n, c):
            raise InvalidDissectionError(f"{tuple(c)} is not a chord of the {n}-gon")
    a, b = sorted(c1)
    c, d = sorted(c2)
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


@dataclass(frozen=True)
class Dissection:
    """Convex n-gon plus pairwise non-crossing chords."""

    n: int
    chords: FrozenSet[Edge] = frozenset()

    def __post_init__(self) -> None:
        if self.n < 3:
            raise InvalidDissectionError(f"Polygon size must be at least 3, got {self.n}")
        normalized = set()
        for c in self.chords:
            if not is_chord(self.n, c):
                raise InvalidDissectionError(f"{tuple(c)} is not a chord of the {self.n}-gon")
            normalized.add(norm_edge(int(c[0]), int(c[1])))
        ordered = sorted(normalized)
        for i, c1 in enumerate(ordered):
            for c2 in ordered[i + 1:]:
                if chords_cross(self.n, c1, c2):
                    raise InvalidDissectionError(f"Chords {c1} and {c2} cross")
        object.__setattr__(self, "chords", frozenset(normalized))

    def sorted_chords(self) -> List[Edge]:
        return sorted(self.chords)

    def sides(self) -> FrozenSet[Edge]:
        return frozenset(norm_edge(i, (i + 1) % self.n) for i in range(self.n))


@dataclass(frozen=True)
class FacialData:
    outer_cycle: Cycle
    facial_cycles: FrozenSet[Cycle]
    outer_edges: FrozenSet[Edge]
    inner_edges: FrozenSet[Edge]


def build_graph(d: Dissection) -> Graph:
    return Graph(d.n, d.sides() | d.chords)


def facial_data(d: Dissection) -> FacialData:
    """Faces by splitting the polygon along one chord at a time until no chord is left inside."""
    faces = set()
    stack: List[List[int]] = [list(range(d.n))]
    while stack:
        poly = stack.pop()
        where = {v: i for i, v in enumerate(poly)}
        split = None
        for a, b in d.sorted_chords():
            if a in where and b in where:
                ia, ib = where[a], where[b]
                if ib - ia not in (1, len(poly) - 1):
                    split = (ia, ib)
                    break
        if split is None:
            faces.add(Cycle(tuple(poly)))
            continue
        ia, ib = split
        stack.append(poly[ia:ib + 1])
        stack.append(poly[:ia + 1] + poly[ib:])
    return FacialData(
        outer_cycle=Cycle(tuple(range(d.n))),
        facial_cycles=frozenset(faces),
        outer_edges=d.sides(),
        inner_edges=d.chords,
    )


def facial_circumference(d: Dissection) -> int:
    return max(len(c) for c in facial_data(d).facial_cycles)


def mirror(d: Dissection) -> Dissection:
    """Reflection i -> -i mod n; its graph is isomorphic to the original."""
    flip = lambda i: (-i) % d.n
    return Dissection(d.n, frozenset(norm_edge(flip(a), flip(b)) for a, b in d.chords))


def recognize_bop(g: Graph) -> Optional[Tuple[Dissection, List[int]]]:
    """
    Return (dissection, order) with order[i] the vertex of g placed at polygon position i,
    or None when g is not biconnected outerplanar.

    A BOP graph has exactly one Hamiltonian cycle, so the first Hamiltonian cycle found decides:
    either its remaining edges are non-crossing chords, or g is not BOP.
    """
    n = g.vertex_count
    if n < 3 or not n <= len(g.edges) <= 2 * n - 3:
        return None
    if min(g.degrees()) < 2 or len(components(g)) != 1:
        return None
    adj = g.adjacency
    path = [0]
    on_path = [False] * n
    on_path[0] = True

    def search() -> Optional[List[int]]:
        if len(path) == n:
            if 0 in adj[path[-1]] and path[1] < path[-1]:
                return list(path)
            return None
        for y in sorted(adj[path[-1]]):
            if on_path[y]:
                continue
            path.append(y)
            on_path[y] = True
            found = search()
            path.pop()
            on_path[y] = False
            if found is not None:
                return found
        return None

    order = search()
    if order is None:
        return None
    pos = {v: i for i, v in enumerate(order)}
    chords = set()
    for a, b in g.edges:
        e = norm_edge(pos[a], pos[b])
        if e[1] - e[0] not in (1, n - 1):
            chords.add(e)
    try:
        return Dissection(n, frozenset(chords)), order
    except InvalidDissectionError:
        return None


# ── Text format ─────────────────────────────────────────────────────────


def format_dissection(d: Dissection) -> str:
    lines = [f"polygon {d.n}"]
    lines.extend(f"chord {i} {j}" for i, j in d.sorted_chords())
    return "\n".join(lines) + "\n"


def parse_dissection(text: str) -> Dissection:
    n: Optional[int] = None
    chords: List[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "polygon" or len(parts) != 2:
                raise GraphFormatError(f"line {lineno}: expected 'polygon <n>', got {line!r}")
            n = parse_ints(parts[1:], lineno)[0]
            if n < 3:
                raise GraphFormatError(f"line {lineno}: polygon size must be at least 3, got {n}")
            continue
        if parts[0] != "chord" or len(parts) != 3:
            raise GraphFormatError(f"line {lineno}: expected 'chord <i> <j>', got {line!r}")
        i, j = parse_ints(parts[1:], lineno)
        if not is_chord(n, (i, j)):
            raise GraphFormatError(f"line {lineno}: {i} {j} is not a chord of the {n}-gon")
        chords.append(norm_edge(i, j))
    if n is None:
        raise GraphFormatError("missing 'polygon <n>' header")
    return Dissection(n, frozenset(chords))

