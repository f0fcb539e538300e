"""
Closed-form upper bounds on logical depth, evaluated with real log base 2.

Each formula carries its parameter names and whether the bound is strict ("<") or not ("<=").
Arguments passed to a logarithm must be at least 1; `depth` arguments must be non-negative.

Usage:
  from depth_bounds import BoundFormula, evaluate_bound
  b = evaluate_bound(BoundFormula.THEOREM1, r=1, delta=3)
  b.value, b.relation, b.holds(observed_depth)
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Tuple


class BoundFormula(str, Enum):
    MT1 = "MT1"
    CN_CM = "CnCm"
    DEF_CN = "DefCn"
    TREE_LAYOUT = "TreeLayout"
    MAIN_LEMMA1 = "MainLemma1"
    YUPPIE = "Yuppie"
    MAIN_LEMMA2 = "MainLemma2"
    MAIN_LEMMA2A = "MainLemma2A"
    MAIN_LEMMA2B = "MainLemma2B"
    THEOREM1 = "Theorem1"
    YUPPIE_FORMULA = "YuppieFormula"
    CYCLE_FORMULA = "CycleFormula"
    CYCLE_EXTRA_FORMULA = "CycleExtraFormula"
    EMPTY_FACES = "EmptyFaces"
    NON_PSEUDO_BOP = "NonPseudoBOP"
    FACIAL_MISMATCH = "FacialMismatch"


@dataclass(frozen=True)
class BoundValue:
    value: float
    strict: bool

    @property
    def relation(self) -> str:
        return "<" if self.strict else "<="

    def holds(self, observed: float) -> bool:
        return observed < self.value if self.strict else observed <= self.value


def _ceil_log2(x) -> int:
    if isinstance(x, int):
        return (x - 1).bit_length()
    return math.ceil(math.log2(x))


lg = math.log2

# name -> (parameters, formula, strict)
_SCHEMA: Dict[BoundFormula, Tuple[Tuple[str, ...], Callable[..., float], bool]] = {
    BoundFormula.MT1: (("d",), lambda d: _ceil_log2(d), False),
    BoundFormula.CN_CM: (("n",), lambda n: _ceil_log2(n) + 1, False),
    BoundFormula.DEF_CN: (("n",), lambda n: lg(n) + 3, True),
    BoundFormula.TREE_LAYOUT: (("diam", "delta"), lambda diam, delta: lg(diam) + lg(delta) + 12, True),
    BoundFormula.MAIN_LEMMA1: (("r", "delta"), lambda r, delta: 3 * lg(r) + lg(delta) + 18, False),
    BoundFormula.YUPPIE: (("r", "delta"), lambda r, delta: max(lg(r), lg(delta)) + 7, True),
    BoundFormula.MAIN_LEMMA2: (
        ("depth", "f", "r"),
        lambda depth, f, r: 3 * depth + 2 * lg(f) + 2 * lg(r) + 5,
        True,
    ),
    BoundFormula.MAIN_LEMMA2A: (("f", "r"), lambda f, r: 2 * lg(f) + 2 * lg(r) + 9, True),
    BoundFormula.MAIN_LEMMA2B: (
        ("depth", "f", "r"),
        lambda depth, f, r: 3 * depth + 2 * lg(f) + 2 * lg(r) + 5,
        True,
    ),
    BoundFormula.THEOREM1: (("r", "delta"), lambda r, delta: 11 * lg(r) + 5 * lg(delta) + 59, False),
    BoundFormula.YUPPIE_FORMULA: (("r",), lambda r: lg(r) + 4, True),
    BoundFormula.CYCLE_FORMULA: (("cycle",), lambda cycle: 2 * lg(cycle) + 1, True),
    BoundFormula.CYCLE_EXTRA_FORMULA: (("cycle",), lambda cycle: 2 * lg(cycle) + 3, True),
    BoundFormula.EMPTY_FACES: (("f",), lambda f: 2 * lg(f) + 5, True),
    BoundFormula.NON_PSEUDO_BOP: (("f", "f_other"), lambda f, f_other: 2 * lg(max(f, f_other)) + 8, False),
    BoundFormula.FACIAL_MISMATCH: (("f", "r"), lambda f, r: 2 * lg(f) + 2 * lg(r) + 9, True),
}


def parameters_of(formula: BoundFormula) -> Tuple[str, ...]:
    return _SCHEMA[BoundFormula(formula)][0]


def evaluate_bound(formula, **params) -> BoundValue:
    formula = BoundFormula(formula)
    names, fn, strict = _SCHEMA[formula]
    missing = [p for p in names if p not in params]
    extra = [p for p in params if p not in names]
    if missing or extra:
        raise ValueError(
            f"{formula.value} takes ({', '.join(names)}); missing {missing or 'none'}, unexpected {extra or 'none'}"
        )
    for name in names:
        x = params[name]
        if name == "depth":
            if x < 0:
                raise ValueError(f"{formula.value}: depth must be non-negative, got {x}")
        elif x < 1:
            raise ValueError(f"{formula.value}: {name} must be at least 1, got {x}")
    return BoundValue(float(fn(**params)), strict)
