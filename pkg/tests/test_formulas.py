"""Closed-form predictors: pinned values and internal consistency."""

import pytest

from matchpower import formulas as fm
from matchpower.errors import InvalidParameterError


def test_prediction_result_basics():
    e = fm.exact(7, "src")
    assert e.matches(7) and not e.matches(6)
    iv = fm.interval(3, 5, "src")
    assert iv.kind == "interval"
    assert iv.matches(4) and not iv.matches(6)
    assert fm.interval(4, 4, "src").kind == "exact"
    nc = fm.not_covered()
    assert not nc.is_covered()
    with pytest.raises(InvalidParameterError):
        fm.PredictionResult("interval", "proven", "s", lo=5, hi=3)


def test_regularity_predictions():
    assert fm.predict_regularity("path", {"n": 10}, 3).value == 7
    assert fm.predict_regularity("wcycle", {"m": 5}, 2).value == 5
    # odd gap between m and k collapses the bounds
    r = fm.predict_regularity("wcycle", {"m": 7}, 4)
    assert r.kind == "exact" and r.value == 9 and r.status == fm.PROVEN
    r = fm.predict_regularity("wcycle", {"m": 8}, 4)
    assert (r.kind, r.lo, r.hi) == ("interval", 9, 10)
    assert fm.predict_regularity("cycle", {"n": 13}, 2).value == 7
    assert fm.predict_regularity("mwpath", {"m": 4, "rs": [1, 2, 1, 2]}, 2).value == 5
    assert fm.predict_regularity("wcycle", {"m": 6}, 1).value == 4
    assert not fm.predict_regularity("mwcycle", {"m": 6, "r": 2}, 1).is_covered()
    assert fm.predict_regularity("mwcycle", {"m": 3, "r": 2}, 2).value == 4
    assert fm.predict_regularity("wcycle", {"m": 6}, 6).value == 12
    with pytest.raises(InvalidParameterError):
        fm.predict_regularity("path", {"n": 10}, 6)


def test_depth_predictions():
    assert fm.predict_depth("cmforest", {"m": 4}, 3).value == 6
    assert fm.predict_depth("cycle", {"n": 9}, 2).value == 4
    assert fm.predict_depth("cycle", {"n": 10}, 4).value == 7
    assert fm.predict_depth("cycle", {"n": 3}, 1).value == 1
    assert fm.predict_depth("path", {"n": 2}, 1).value == 1
    d = fm.predict_depth("cycle", {"n": 11}, 3)
    assert (d.kind, d.lo, d.hi) == ("interval", 6, 7)
    assert fm.predict_depth("wcycle", {"m": 3}, 2).value == 3
    assert fm.predict_depth("wcycle", {"m": 6}, 2).value == 7
    d = fm.predict_depth("wcycle", {"m": 6}, 4)
    assert (d.kind, d.lo, d.hi) == ("interval", 7, 9)
    assert fm.predict_depth("wcycle", {"m": 6}, 6).value == 11
    assert fm.predict_depth("mwpath", {"m": 3, "rs": [1, 1, 1]}, 2).value == 4
    assert not fm.predict_depth("mwpath", {"m": 3, "rs": [2, 1, 1]}, 2).is_covered()
    assert fm.predict_depth("mwcycle", {"m": 4, "r": 2}, 4).value == 7


def test_cm_predictions():
    assert fm.predict_cm("cmforest", {"m": 3}, 2).value is True
    assert fm.predict_cm("cmforest", {"m": 1}, 1).value is True
    assert not fm.predict_cm("cycle", {"n": 5}, 1).is_covered()


def test_linear_resolution_predictions():
    assert fm.predict_linear_resolution("cycle", {"n": 9}, 4).value is True
    assert fm.predict_linear_resolution("cycle", {"n": 8}, 3).value is True
    assert fm.predict_linear_resolution("cycle", {"n": 9}, 3).value is False
    assert fm.predict_linear_resolution("wcycle", {"m": 6}, 2).value is False
    assert fm.predict_linear_resolution("wcycle", {"m": 4}, 2).value is True
    assert fm.predict_linear_resolution("wcycle", {"m": 3}, 1).value is True
    assert fm.predict_linear_resolution("wcycle", {"m": 6}, 5).value is True
    assert not fm.predict_linear_resolution("wcycle", {"m": 6}, 4).is_covered()
    assert fm.predict_linear_resolution("path", {"n": 6}, 2).value is True
    assert fm.predict_linear_resolution("path", {"n": 7}, 2).value is False


def test_internal_consistency_overlaps():
    # the path and cycle formulas give the classical edge-ideal value at k=1
    for n in range(3, 15):
        assert fm.predict_regularity("path", {"n": n}, 1).value == \
            2 + (n - 2) // 3
        assert fm.predict_regularity("cycle", {"n": n}, 1).value == \
            2 + (n - 2) // 3
    # at the top power the cycle regularity is linear
    for n in range(4, 15):
        nu = n // 2
        assert fm.predict_regularity("cycle", {"n": n}, nu).value == 2 * nu
    # path depth at the top power matches the universal top-power value
    for n in range(2, 15):
        nu = n // 2
        if nu >= 1:
            assert fm.predict_depth("path", {"n": n}, nu).value == 2 * nu - 1
    # whiskered-forest depth at the top power likewise
    for m in range(1, 10):
        assert fm.predict_depth("cmforest", {"m": m}, m).value == 2 * m - 1


def test_interval_predictions_consistent_with_conjectures():
    # conjectured values must sit inside the proven windows
    for m in range(4, 12):
        for k in range(3, m):
            proven = fm.predict_regularity("wcycle", {"m": m}, k)
            conj = fm.conjectured_wcycle_regularity(m, k)
            assert proven.matches(conj.value)
        for k in range(3, m):
            proven = fm.predict_depth("wcycle", {"m": m}, k)
            conj = fm.conjectured_wcycle_depth(m, k)
            if proven.kind == "interval":
                assert proven.matches(conj.value)
    for n in range(6, 16):
        for k in range(3, n // 2 + 1):
            proven = fm.predict_depth("cycle", {"n": n}, k)
            conj = fm.conjectured_cycle_depth(n, k)
            assert proven.matches(conj.value)


def test_conjecture_names():
    assert fm.conjecture_name("6.1") == "cycle-depth"
    assert fm.conjecture_name("wcycle-reg") == "wcycle-reg"
    with pytest.raises(InvalidParameterError):
        fm.conjecture_name("6.4")


def test_conjectured_ranges():
    with pytest.raises(InvalidParameterError):
        fm.conjectured_cycle_depth(9, 1)
    with pytest.raises(InvalidParameterError):
        fm.conjectured_wcycle_regularity(5, 5)
    assert fm.conjectured_wcycle_depth(6, 6).value == 11
