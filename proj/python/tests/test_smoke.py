import math

import pytest

import nltrace

JUMP = {"kind": "step", "x": [0, 2], "y": [1, 4]}
EXPLICIT = {"kind": "explicit", "values": [0, 1, 1], "tail": {"mode": "constant", "value": 3}}


def diag(*d):
    return [[d[i] if i == j else 0 for j in range(len(d))] for i in range(len(d))]


def test_choquet_trace_worked_spectrum():
    assert nltrace.choquet_trace([5, 4, 3, 2], EXPLICIT) == 11.0


def test_jump_weight_is_not_a_norm():
    third = 4 / 3
    p = [(1, third), (0, third)]
    q = [(0, third), (1, third)]
    assert nltrace.choquet_spectral(p, JUMP) == 1.0
    assert nltrace.choquet_stieltjes(q, JUMP) == 1.0
    assert nltrace.choquet_stieltjes(nltrace.add(p, q), JUMP) == 4.0


def test_matrix_functions():
    assert nltrace.eigenvalues([[2, 1j], [-1j, 2]]) == pytest.approx([3, 1], abs=1e-12)
    assert nltrace.singular_values(diag(-2, 1)) == [2, 1]
    ratio = nltrace.triangle_ratio(diag(1, 1, 0, 0), diag(0, 0, 1, 1), EXPLICIT, 1)
    assert ratio == 1.5
    power1 = {"kind": "power", "theta": 1}
    assert nltrace.sugeno_trace(diag(3, 2, 1), power1) == 2.0
    assert nltrace.sugeno_extend(diag(2, -1), power1) == 0j
    assert nltrace.doubling_sup({"kind": "power", "theta": 2}) == (4.0, True)


def test_fuzzy_integrals():
    mu = {"n": 2, "mu": {"0b01": 0.5, "0b10": 0.25, "0b11": 1}}
    assert nltrace.choquet_integral([3, 1], mu) == 2.0
    assert nltrace.sugeno_integral([3, 1], mu) == 1.0
    assert nltrace.is_comonotone([1, 2], [0, 5])


def test_errors_map_to_exceptions():
    with pytest.raises(nltrace.DomainError):
        nltrace.sugeno_trace(diag(1, -1), {"kind": "power", "theta": 1})
    with pytest.raises(nltrace.HypothesisError):
        nltrace.sugeno_trace_step([(1, 1)], JUMP)
    with pytest.raises(nltrace.InputError):
        nltrace.run_suite("no-such-suite")
    assert issubclass(nltrace.InputError, nltrace.Error)


def test_suites_and_falsifier():
    assert "weyl" in nltrace.suite_ids()
    r = nltrace.run_suite("prop-stieltjes", trials=500, seed=42)
    assert r["passed"] and r["seed"] == 42
    assert nltrace.run_suite("prop-stieltjes", trials=500, seed=42, workers=3) == r
    f = nltrace.falsify_triangle(EXPLICIT, p=1, dims=[4], trials=0)
    assert not f["passed"]
    assert 1.5 <= f["worst"] <= 3.0
    assert math.isfinite(f["witness"]["ratio"])
