"""
Exact Ehrenfeucht game solver over colored structures with two symmetric binary relations.

A position is the set of selected pairs (x in the left structure, y in the right one). Spoiler wins
a k-round game from a position iff the position is not a partial isomorphism, or k >= 1 and some
move of his is answered badly by every Duplicator reply. The solver memoizes on
(frozenset of pairs, k); the winning condition depends only on that set.

Also here: the rooted variant, family sweeps (a certified lower bound on D(G)), the halving
strategy for pairs at different distances, and an exhaustive strategy verifier.

Usage:
  import ef_game as ef
  ef.ef_depth(ef.as_structure(g1), ef.as_structure(g2), max_k=5)
  ef.spoiler_wins(s1, s2, 2, [(0, 1)])
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple, Union

from env_manager import EF_MEMO_ENTRY_CAP, get_logger
from facing import FacingStructure, GraphWithLayout, LayoutError, canonical_form, facing
from graph_core import INF, Edge, Graph, all_pairs_distances, find_bijection, is_tree, norm_edge

LEFT = "left"
RIGHT = "right"
Pair = Tuple[int, int]
GameConfig = Sequence[Pair]


class MemoOverflowError(RuntimeError):
    """The per-query memo table reached its entry cap."""


@dataclass(frozen=True)
class RelStructure:
    """Arena of the game: two irreflexive symmetric relations plus one color per vertex."""

    size: int
    rel1: FrozenSet[Edge] = frozenset()
    rel2: FrozenSet[Edge] = frozenset()
    colors: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for name in ("rel1", "rel2"):
            pairs = set()
            for p in getattr(self, name):
                x, y = int(p[0]), int(p[1])
                if not (0 <= x < self.size and 0 <= y < self.size):
                    raise IndexError(f"{name} pair {p} outside [0, {self.size})")
                pairs.add(norm_edge(x, y))
            object.__setattr__(self, name, frozenset(pairs))
        colors = tuple(int(c) for c in self.colors) if self.colors else (0,) * self.size
        if len(colors) != self.size:
            raise ValueError(f"expected {self.size} colors, got {len(colors)}")
        object.__setattr__(self, "colors", colors)

    @cached_property
    def adj1(self) -> Tuple[FrozenSet[int], ...]:
        return Graph(self.size, self.rel1).adjacency

    @cached_property
    def adj2(self) -> Tuple[FrozenSet[int], ...]:
        return Graph(self.size, self.rel2).adjacency

    def signature(self, v: int) -> Tuple[int, int, int]:
        return self.colors[v], len(self.adj1[v]), len(self.adj2[v])


Arena = Union[RelStructure, Graph, GraphWithLayout, FacingStructure]


def as_structure(obj: Arena) -> RelStructure:
    if isinstance(obj, RelStructure):
        return obj
    if isinstance(obj, FacingStructure):
        obj = obj.gwl
    if isinstance(obj, GraphWithLayout):
        return RelStructure(obj.h.vertex_count, obj.h.edges, obj.layout, obj.colors)
    if isinstance(obj, Graph):
        return RelStructure(obj.vertex_count, obj.edges)
    raise TypeError(f"cannot turn {type(obj).__name__} into a game structure")


def _consistent(s: RelStructure, s2: RelStructure, a: Pair, b: Pair) -> bool:
    (x1, y1), (x2, y2) = a, b
    return (
        (x1 == x2) == (y1 == y2)
        and (x2 in s.adj1[x1]) == (y2 in s2.adj1[y1])
        and (x2 in s.adj2[x1]) == (y2 in s2.adj2[y1])
    )


def is_partial_iso(s: Arena, s2: Arena, config: GameConfig) -> bool:
    s, s2 = as_structure(s), as_structure(s2)
    pairs = list(config)
    for x, y in pairs:
        if not (0 <= x < s.size and 0 <= y < s2.size):
            raise IndexError(f"pair ({x}, {y}) outside the structures")
    for i, (x, y) in enumerate(pairs):
        if s.colors[x] != s2.colors[y]:
            return False
        if not all(_consistent(s, s2, pairs[j], (x, y)) for j in range(i)):
            return False
    return True


def structures_isomorphic(s: Arena, s2: Arena) -> Optional[Dict[int, int]]:
    s, s2 = as_structure(s), as_structure(s2)
    return find_bijection(s.size, [s.rel1, s.rel2], s.colors, s2.size, [s2.rel1, s2.rel2], s2.colors)


# ── Solver ──────────────────────────────────────────────────────────────


class EFSolver:
    """One memo table per query; not shared between threads."""

    def __init__(self, left: Arena, right: Arena, memo_cap: int = EF_MEMO_ENTRY_CAP):
        self.s = as_structure(left)
        self.s2 = as_structure(right)
        self.memo_cap = memo_cap
        self.memo: Dict[Tuple[FrozenSet[Pair], int], bool] = {}
        self.nodes = 0
        self.log = get_logger("ef_game")

        sig_l = [self.s.signature(v) for v in range(self.s.size)]
        sig_r = [self.s2.signature(v) for v in range(self.s2.size)]
        # Spoiler tries vertices whose signature is rare on the other side first.
        moves = [(sig_r.count(sig_l[v]), 0, LEFT, v) for v in range(self.s.size)]
        moves += [(sig_l.count(sig_r[v]), 1, RIGHT, v) for v in range(self.s2.size)]
        self._moves = [(side, v) for _, _, side, v in sorted(moves)]
        # Duplicator answers with look-alike vertices first.
        self._replies = {
            LEFT: {v: sorted(range(self.s2.size), key=lambda y, v=v: (sig_r[y] != sig_l[v], y)) for v in range(self.s.size)},
            RIGHT: {v: sorted(range(self.s.size), key=lambda x, v=v: (sig_l[x] != sig_r[v], x)) for v in range(self.s2.size)},
        }

    def extends(self, pairs: FrozenSet[Pair], pair: Pair) -> bool:
        x, y = pair
        if self.s.colors[x] != self.s2.colors[y]:
            return False
        return all(_consistent(self.s, self.s2, p, pair) for p in pairs)

    def wins(self, k: int, pairs: FrozenSet[Pair]) -> bool:
        """Spoiler wins k more rounds from `pairs`, which must already be a partial isomorphism."""
        if k <= 0:
            return False
        key = (pairs, k)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        self.nodes += 1
        result = self._find_move(k, pairs) is not None
        if len(self.memo) >= self.memo_cap:
            self.log.error("memo cap %d reached (sizes %d/%d, k=%d)", self.memo_cap, self.s.size, self.s2.size, k)
            raise MemoOverflowError(f"game memo exceeded {self.memo_cap} entries")
        self.memo[key] = result
        return result

    def _find_move(self, k: int, pairs: FrozenSet[Pair]) -> Optional[Tuple[str, int]]:
        used_left = {x for x, _ in pairs}
        used_right = {y for _, y in pairs}
        for side, v in self._moves:
            # re-selecting a vertex lets Duplicator repeat its partner and gains nothing
            if v in (used_left if side == LEFT else used_right):
                continue
            if self._refutes_all(k, pairs, side, v):
                return side, v
        return None

    def _refutes_all(self, k: int, pairs: FrozenSet[Pair], side: str, v: int) -> bool:
        for w in self._replies[side][v]:
            pair = (v, w) if side == LEFT else (w, v)
            if not self.extends(pairs, pair):
                continue
            if not self.wins(k - 1, pairs | {pair}):
                return False
        return True

    def winning_move(self, k: int, config: GameConfig) -> Optional[Tuple[str, int]]:
        """A Spoiler move that wins the remaining k rounds, or None if there is none."""
        pairs = frozenset(config)
        if k <= 0 or not is_partial_iso(self.s, self.s2, list(pairs)):
            return None
        return self._find_move(k, pairs)


def spoiler_wins(s: Arena, s2: Arena, k: int, config: GameConfig = ()) -> bool:
    if not is_partial_iso(s, s2, config):
        return True
    return EFSolver(s, s2).wins(k, frozenset(config))


def _least_winning_k(solver: EFSolver, config: GameConfig, max_k: int) -> Optional[int]:
    if not is_partial_iso(solver.s, solver.s2, config):
        return 0
    pairs = frozenset(config)
    for k in range(1, max_k + 1):
        if solver.wins(k, pairs):
            solver.log.debug("depth %d after %d nodes, memo %d", k, solver.nodes, len(solver.memo))
            return k
    return None


def ef_depth(s: Arena, s2: Arena, max_k: int) -> Optional[int]:
    """Least k <= max_k for which Spoiler wins the k-round game, or None."""
    return _least_winning_k(EFSolver(s, s2), (), max_k)


def ef_depth_rooted(s: Arena, v: int, s2: Arena, v2: int, max_k: int) -> Optional[int]:
    """Same with (v, v2) selected before the first round."""
    solver = EFSolver(s, s2)
    if not (0 <= v < solver.s.size and 0 <= v2 < solver.s2.size):
        raise IndexError(f"root pair ({v}, {v2}) outside the structures")
    return _least_winning_k(solver, [(v, v2)], max_k)


@dataclass
class FamilyDepth:
    """Max depth over the non-isomorphic opponents; a lower bound on D(G)."""

    lower_bound: int
    # (index in the family, depth or None when max_k was not enough)
    table: List[Tuple[int, Optional[int]]] = field(default_factory=list)
    skipped_isomorphic: List[int] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return all(d is not None for _, d in self.table)


def max_depth_over_family(g: Arena, family: Sequence[Arena], max_k: int, workers: int = 1) -> FamilyDepth:
    s = as_structure(g)
    opponents = [as_structure(x) for x in family]
    skipped = [i for i, o in enumerate(opponents) if structures_isomorphic(s, o) is not None]
    todo = [i for i in range(len(opponents)) if i not in skipped]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            depths = list(ex.map(lambda i: ef_depth(s, opponents[i], max_k), todo))
    else:
        depths = [ef_depth(s, opponents[i], max_k) for i in todo]
    table = list(zip(todo, depths))
    return FamilyDepth(
        lower_bound=max((d for d in depths if d is not None), default=0),
        table=table,
        skipped_isomorphic=skipped,
    )


def facings_isomorphic(g: Graph, g2: Graph) -> bool:
    """Isomorphism of facing structures: canonical forms for tree duals, brute force otherwise."""
    f1, f2 = facing(g), facing(g2)
    if is_tree(f1.gwl.h) and is_tree(f2.gwl.h):
        try:
            return canonical_form(f1.gwl) == canonical_form(f2.gwl)
        except LayoutError:
            pass
    return structures_isomorphic(f1, f2) is not None


# ── Strategies ──────────────────────────────────────────────────────────

# A Spoiler strategy maps the selected pairs so far to (side, vertex).
SpoilerStrategy = Callable[[Sequence[Pair]], Tuple[str, int]]


@dataclass
class ConstantStrategy:
    side: str = LEFT
    vertex: int = 0

    def __call__(self, history: Sequence[Pair]) -> Tuple[str, int]:
        return self.side, self.vertex


class HalvingStrategy:
    """
    Among selected pairs whose distances differ, take the one with the smallest finite
    distance m and select, on that side, the least vertex w with d(a, w) = m // 2 and
    d(w, b) = m - m // 2. Wins within ceil(log2 m) rounds.

    Left anchors u and v that are not selected yet are played first, so the strategy also
    works from a configuration that does not contain the anchor pairs.
    """

    def __init__(self, left: Arena, right: Arena, anchors: Tuple[int, int, int, int]):
        self.s, self.s2 = as_structure(left), as_structure(right)
        self.dist = {
            LEFT: all_pairs_distances(Graph(self.s.size, self.s.rel1)),
            RIGHT: all_pairs_distances(Graph(self.s2.size, self.s2.rel1)),
        }
        u, v, u2, v2 = anchors
        d, d2 = self.dist[LEFT][u][v], self.dist[RIGHT][u2][v2]
        if d == INF or d == d2:
            raise ValueError(f"halving needs d(u,v) finite and different from d(u',v'), got {d} and {d2}")
        self.anchors: List[Pair] = [(u, u2), (v, v2)]

    def __call__(self, history: Sequence[Pair]) -> Tuple[str, int]:
        chosen = {x for x, _ in history}
        for x, _ in self.anchors:
            if x not in chosen:
                return LEFT, x
        best = None
        for i, (x1, y1) in enumerate(history):
            for x2, y2 in history[i + 1:]:
                dl, dr = self.dist[LEFT][x1][x2], self.dist[RIGHT][y1][y2]
                if dl == dr:
                    continue
                cand = (dl, LEFT, x1, x2) if dl < dr else (dr, RIGHT, y1, y2)
                if best is None or cand[0] < best[0]:
                    best = cand
        if best is None:
            return LEFT, 0
        m, side, a, b = best
        if m < 2:
            return side, a
        dist = self.dist[side]
        half = m // 2
        w = min(z for z in range(len(dist)) if dist[a][z] == half and dist[z][b] == m - half)
        return side, w


def halving_strategy(left: Arena, right: Arena, anchors: Tuple[int, int, int, int]) -> HalvingStrategy:
    return HalvingStrategy(left, right, anchors)


@dataclass
class StrategyVerdict:
    success: bool
    rounds_used: int
    counterexample: Optional[List[Pair]] = None


def verify_strategy(
    left: Arena, right: Arena, config: GameConfig, strat: SpoilerStrategy, budget: int
) -> StrategyVerdict:
    """Play strat against every Duplicator reply sequence for at most `budget` rounds."""
    s, s2 = as_structure(left), as_structure(right)

    def explore(history: List[Pair], used: int) -> StrategyVerdict:
        if not is_partial_iso(s, s2, history):
            return StrategyVerdict(True, used)
        if used >= budget:
            return StrategyVerdict(False, used, list(history))
        side, x = strat(history)
        replies = range(s2.size) if side == LEFT else range(s.size)
        worst = used + 1
        for y in replies:
            pair = (x, y) if side == LEFT else (y, x)
            verdict = explore(history + [pair], used + 1)
            if not verdict.success:
                return verdict
            worst = max(worst, verdict.rounds_used)
        return StrategyVerdict(True, worst)

    return explore(list(config), 0)


def depth_row(left_name: str, right_name: str, max_k: int, depth: Optional[int]) -> Dict[str, str]:
    """CSV row `left,right,maxK,depth` with '-' for an absent depth."""
    return {"left": left_name, "right": right_name, "maxK": str(max_k), "depth": "-" if depth is None else str(depth)}
