"""Smoke tests for the gfdcalc extension module."""

import math

import pytest

import gfdcalc


def test_evaluate():
    assert gfdcalc.evaluate("sin(2*t)", {"t": math.pi / 4}) == pytest.approx(1.0)
    assert gfdcalc.evaluate("t1^3*sin(t2)", {"t1": 2.0, "t2": 1.0}) == pytest.approx(
        8.0 * math.sin(1.0)
    )


def test_differentiate_and_simplify():
    assert gfdcalc.differentiate("t^3") == "3*t^2"
    assert gfdcalc.simplify("1*t+0") == "t"
    assert gfdcalc.free_variables("t1*sin(t2)+x") == ["t1", "t2", "x"]


def test_domain_errors_surface_as_gfd_error():
    with pytest.raises(gfdcalc.GfdError):
        gfdcalc.evaluate("ln(t)", {"t": -1.0})
    with pytest.raises(gfdcalc.GfdError):
        gfdcalc.gfd("t", alpha=0.5, t=-1.0)


def test_gfd_values():
    assert gfdcalc.gfd("t", alpha=0.5, weight="one", t=4.0) == pytest.approx(2.0)
    limit = gfdcalc.gfd("t", alpha=0.5, weight="one", t=4.0, method="limit", h=1e-7)
    assert limit == pytest.approx(2.0, abs=1e-6)
    # alpha = 1 recovers the classical derivative
    assert gfdcalc.gfd("sin(t)", alpha=1.0, t=0.5) == pytest.approx(math.cos(0.5))


def test_named_operators():
    assert gfdcalc.named_derivative("khalil", "sin(2*t)", 0.75, 1.0) == pytest.approx(
        2.0 * math.cos(2.0)
    )
    # ratio-form operators fix exponentials
    assert gfdcalc.named_derivative("camrud", "exp(t)", 0.3, 1.5) == pytest.approx(
        math.exp(1.5)
    )
    assert gfdcalc.weight_of("khalil", "sin(t)", 0.4, 0.7) == pytest.approx(1.0)


def test_caputo():
    value = gfdcalc.caputo("t", 0.5, 0.0, 1.0, 2000)
    assert value == pytest.approx(2.0 / math.sqrt(math.pi), rel=1e-6)


def test_partial_operators():
    point = {"t1": 1.3, "t2": 2.0}
    value = gfdcalc.gpfd("t1^3*sin(t2)", "t1", 0.4, "alpha", point)
    expected = 0.4 * 1.3 ** 0.6 * 3.0 * 1.3**2 * math.sin(2.0)
    assert value == pytest.approx(expected)
    mixed = gfdcalc.gpfd_second("t1*t2", "t1", "t2", 1.0, "one", "one", point)
    assert mixed == pytest.approx(1.0)


def test_taylor():
    terms = gfdcalc.taylor_terms("exp(x)", 0.0, 1.0, "one", 5)
    assert terms[0] == (0.0, 1.0)
    assert terms[2] == (2.0, pytest.approx(0.5))
    assert gfdcalc.taylor_eval("exp(x)", 0.0, 1.0, "one", 12, 1.0) == pytest.approx(
        math.e, rel=1e-9
    )
    assert gfdcalc.rising_factorial(0.5, 3) == pytest.approx(1.875)


def test_ode_round_trip():
    y0 = 2.0 - math.exp(-0.4)
    closed = gfdcalc.solve_ode_closed(1.0, 2.0, 4.0, 0.5, 1.0, 0.01, y0)
    assert "exp" in closed
    assert gfdcalc.evaluate(closed, {"t": 1.0}) == pytest.approx(2.0 - math.exp(-4.0))
    traj = gfdcalc.solve_ode_rk4(1.0, 2.0, 4.0, 0.5, 1.0, 0.01, y0, 1.0, 1e-3)
    t_end, y_end = traj[-1]
    assert t_end == pytest.approx(1.0)
    assert y_end == pytest.approx(2.0 - math.exp(-4.0), abs=1e-6)
    residual = gfdcalc.ode_max_residual(
        1.0, 2.0, 4.0, 0.5, 1.0, 0.01, y0, closed, [0.1, 0.5, 1.0, 2.0]
    )
    assert residual <= 1e-9


def test_pde_residuals():
    axis = [0.5 + 0.25 * i for i in range(7)]
    corrected = "(3/7)*x^2*(1-exp(-7*t/3))"
    assert gfdcalc.pde_max_residual("pde1", corrected, axis, axis) <= 1e-8
    printed = "(x^2/7)*(1-exp(-7/3))"
    assert gfdcalc.pde_max_residual("pde1", printed, axis, axis) >= 1e-2


def test_witnesses():
    assert gfdcalc.rolle_witness("(t-1)*(t-3)", 1.0, 3.0, 0.5) == pytest.approx(2.0)
    mvt = gfdcalc.mvt_witness("t^2", 1.0, 2.0, 0.5)
    assert mvt["target"] == pytest.approx(1.5 / (math.sqrt(2.0) - 1.0))
    assert 1.0 < mvt["c"] < 2.0
    assert not mvt["printed_attainable"]
