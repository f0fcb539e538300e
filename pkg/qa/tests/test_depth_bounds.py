"""
Phase 1 tests for src/depth_bounds.py.
Formula values, strictness and argument validation.
"""
import math

import pytest

from depth_bounds import BoundFormula, BoundValue, evaluate_bound, parameters_of


# ---------- TC-01: formula values (unit, functional) ----------
@pytest.mark.unit
def test_theorem_bound_for_cubic_fine_trees():
    b = evaluate_bound(BoundFormula.THEOREM1, r=1, delta=3)
    assert b.value == pytest.approx(5 * math.log2(3) + 59)
    assert b.value == pytest.approx(66.92, abs=0.01)
    assert b.relation == "<="


@pytest.mark.unit
def test_cycle_bounds():
    assert evaluate_bound(BoundFormula.CN_CM, n=5).value == 4
    assert evaluate_bound(BoundFormula.CN_CM, n=8).value == 4
    b = evaluate_bound(BoundFormula.DEF_CN, n=8)
    assert b.value == pytest.approx(6.0)
    assert b.strict


@pytest.mark.unit
@pytest.mark.parametrize(
    "formula, params, expected",
    [
        (BoundFormula.MT1, {"d": 1}, 0),
        (BoundFormula.MT1, {"d": 5}, 3),
        (BoundFormula.TREE_LAYOUT, {"diam": 4, "delta": 2}, 15),
        (BoundFormula.MAIN_LEMMA1, {"r": 2, "delta": 4}, 23),
        (BoundFormula.YUPPIE, {"r": 8, "delta": 2}, 10),
        (BoundFormula.MAIN_LEMMA2, {"depth": 3, "f": 4, "r": 2}, 20),
        (BoundFormula.MAIN_LEMMA2A, {"f": 4, "r": 4}, 17),
        (BoundFormula.MAIN_LEMMA2B, {"depth": 0, "f": 1, "r": 1}, 5),
        (BoundFormula.YUPPIE_FORMULA, {"r": 4}, 6),
        (BoundFormula.CYCLE_FORMULA, {"cycle": 8}, 7),
        (BoundFormula.CYCLE_EXTRA_FORMULA, {"cycle": 8}, 9),
        (BoundFormula.EMPTY_FACES, {"f": 4}, 9),
        (BoundFormula.NON_PSEUDO_BOP, {"f": 2, "f_other": 8}, 14),
        (BoundFormula.FACIAL_MISMATCH, {"f": 2, "r": 2}, 13),
    ],
)
def test_formula_values(formula, params, expected):
    assert evaluate_bound(formula, **params).value == pytest.approx(expected)


@pytest.mark.unit
def test_formula_accepts_its_string_name():
    assert evaluate_bound("Theorem1", r=2, delta=2).value == pytest.approx(75.0)
    assert parameters_of("MainLemma2B") == ("depth", "f", "r")


@pytest.mark.unit
def test_every_formula_has_a_schema():
    for formula in BoundFormula:
        params = {name: 4 for name in parameters_of(formula)}
        assert evaluate_bound(formula, **params).value > 0


# ---------- TC-02: strictness (unit) ----------
@pytest.mark.unit
def test_holds_respects_strictness():
    strict = BoundValue(4.0, True)
    loose = BoundValue(4.0, False)
    assert not strict.holds(4)
    assert strict.holds(3)
    assert loose.holds(4)
    assert strict.relation == "<"


# ---------- TC-03: argument validation (unit) ----------
@pytest.mark.unit
def test_missing_and_unexpected_parameters():
    with pytest.raises(ValueError, match="missing \\['delta'\\]"):
        evaluate_bound(BoundFormula.THEOREM1, r=2)
    with pytest.raises(ValueError, match="unexpected \\['x'\\]"):
        evaluate_bound(BoundFormula.CN_CM, n=4, x=1)


@pytest.mark.unit
def test_log_arguments_must_be_positive():
    with pytest.raises(ValueError, match="r must be at least 1"):
        evaluate_bound(BoundFormula.THEOREM1, r=0, delta=3)
    with pytest.raises(ValueError, match="depth must be non-negative"):
        evaluate_bound(BoundFormula.MAIN_LEMMA2B, depth=-1, f=3, r=1)


@pytest.mark.unit
def test_unknown_formula_name():
    with pytest.raises(ValueError):
        evaluate_bound("NoSuchBound", n=3)
