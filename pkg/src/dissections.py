"""
Counting, enumeration and exactly uniform sampling of polygon dissections.

Counting decomposes a polygon on its base edge: the face containing the base edge visits
boundary positions 0 = a0 < a1 < ... < aj = k-1 (j >= 2), and every gap of width >= 2 spans an
independent sub-polygon whose base is the chord (a_i, a_{i+1}).

  W[k]  dissections of a k-vertex polygon (W[2] = 1 for a bare edge)
  T[s]  ways to split a boundary run of s steps into one or more gaps, each gap filled
        independently (T[0] = 1)

Sampling walks the same decomposition, drawing each gap with probability proportional to the
number of completions. Randomness comes from numpy's PCG64 seeded by SeedSequence([seed, n, index]);
big-integer draws use rejection on raw 64-bit words, so results do not depend on float rounding.

Usage:
  from dissections import count_dissections, enumerate_dissections, sample_dissection, generator_for
  count_dissections(6)                             # 45
  sample_dissection(12, generator_for(1, 12, 0))
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator, List, Tuple

import numpy as np

from bop import Dissection, chords_cross


@lru_cache(maxsize=None)
def _tables(n: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    w = [0] * (n + 1)
    t = [0] * (n + 1)
    w[2] = 1
    t[0] = 1
    t[1] = 1
    for k in range(3, n + 1):
        w[k] = sum(w[g + 1] * t[k - 1 - g] for g in range(1, k - 1))
        t[k - 1] = sum(w[h + 1] * t[k - 1 - h] for h in range(1, k))
    return tuple(w), tuple(t)


def count_dissections(n: int) -> int:
    """Number of non-crossing chord sets of the labeled n-gon (1, 3, 11, 45, 197, 903, ...)."""
    if n < 3:
        raise ValueError(f"Polygon size must be at least 3, got {n}")
    return _tables(n)[0][n]


def enumerate_dissections(n: int) -> List[Dissection]:
    """
    Every dissection of the n-gon, by backtracking over chords in lexicographic order. The list
    grows like the little Schroeder numbers; n <= 9 is practical.
    """
    if n < 3:
        raise ValueError(f"Polygon size must be at least 3, got {n}")
    candidates = [(i, j) for i in range(n) for j in range(i + 2, n) if not (i == 0 and j == n - 1)]
    out: List[Dissection] = []

    def grow(start: int, chosen: List[Tuple[int, int]]) -> None:
        out.append(Dissection(n, frozenset(chosen)))
        for idx in range(start, len(candidates)):
            c = candidates[idx]
            if any(chords_cross(n, c, other) for other in chosen):
                continue
            chosen.append(c)
            grow(idx + 1, chosen)
            chosen.pop()

    grow(0, [])
    return out


# ── Sampling ────────────────────────────────────────────────────────────


def generator_for(seed: int, n: int, index: int) -> np.random.Generator:
    """Independent stream for sample `index` of size n under `seed`."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, n, index])))


def randbelow(rng: np.random.Generator, bound: int) -> int:
    """Uniform integer in [0, bound) for arbitrarily large bound."""
    if bound < 1:
        raise ValueError(f"bound must be positive, got {bound}")
    bits = (bound - 1).bit_length()
    if bits == 0:
        return 0
    words = (bits + 63) // 64
    mask = (1 << bits) - 1
    while True:
        raw = rng.bit_generator.random_raw(words)
        x = 0
        for word in np.atleast_1d(raw):
            x = (x << 64) | int(word)
        x &= mask
        if x < bound:
            return x


def _pick(rng: np.random.Generator, weights: List[int]) -> int:
    r = randbelow(rng, sum(weights))
    for i, wt in enumerate(weights):
        if r < wt:
            return i
        r -= wt
    raise RuntimeError("weights exhausted")


def sample_dissection(n: int, rng: np.random.Generator) -> Dissection:
    """Uniformly random dissection of the n-gon."""
    if n < 3:
        raise ValueError(f"Polygon size must be at least 3, got {n}")
    w, t = _tables(n)
    chords = set()
    stack = [(0, n - 1)]
    while stack:
        lo, hi = stack.pop()
        remaining = hi - lo
        corners = [lo]
        # the face on the base edge has at least two gaps; the first gap cannot close it
        first = True
        while remaining > 0:
            top = remaining - 1 if first else remaining
            weights = [w[g + 1] * t[remaining - g] for g in range(1, top + 1)]
            g = _pick(rng, weights) + 1
            corners.append(corners[-1] + g)
            remaining -= g
            first = False
        for a, b in zip(corners, corners[1:]):
            if b - a >= 2:
                chords.add((a, b))
                stack.append((a, b))
    return Dissection(n, frozenset(chords))


def sample_stream(n: int, seed: int, count: int) -> Iterator[Dissection]:
    for index in range(count):
        yield sample_dissection(n, generator_for(seed, n, index))
