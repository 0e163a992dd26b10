import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetaline import constants as C
from zetaline.integral_reps import line_integrand, psi_integral, psi_integrand
from zetaline.proof_checks import i_r_integral, kernel_modulus
from zetaline.quadrature import (
    LineIntegrand,
    QuadratureConfig,
    auto_truncation,
    circle_average,
    integrate_arc,
    integrate_finite,
    integrate_line,
    line_refinement_history,
    sech,
    truncation_bound,
)
from zetaline.results import QuadratureError

# fine-grid trapezoid of e^{ix} sech(pi x) over [-30, 30] with 600001 points
SECH_FOURIER_HALF = 0.886818883970


def test_sech_fourier_reference_run():
    x = np.linspace(-30, 30, 600_001)
    y = np.cos(x) / np.cosh(np.pi * x)
    h = 60.0 / 600_000
    ref = h * (math.fsum(y) - 0.5 * (y[0] + y[-1]))
    assert ref == pytest.approx(SECH_FOURIER_HALF, abs=1e-12)
    assert ref == pytest.approx(1 / math.cosh(0.5), abs=1e-12)


@pytest.mark.parametrize(
    "f, expected",
    [
        (lambda x: np.ones_like(x), 1.0),
        (lambda x: x, 0.0),
        (lambda x: np.exp(1j * x), SECH_FOURIER_HALF),
    ],
    ids=["one", "odd", "fourier"],
)
def test_integrate_line_examples(f, expected):
    r = integrate_line(f, QuadratureConfig(tol=1e-10))
    assert abs(r.value - expected) <= 1e-10
    assert r.err_estimate >= 0 and r.nodes > 64


def test_config_validation():
    with pytest.raises(ValueError):
        QuadratureConfig(tol=1e-15)
    with pytest.raises(ValueError):
        QuadratureConfig(max_nodes=10)
    with pytest.raises(ValueError):
        QuadratureConfig(truncation_x=-1.0)


def test_auto_truncation_rule():
    assert auto_truncation(lambda x: np.ones_like(x), 1e-9) == 8.0
    big = auto_truncation(lambda x: 1e6 * np.ones_like(x), 1e-13)
    assert big == pytest.approx((math.log(1e13) + math.log1p(1e6)) / math.pi + 1)


def test_non_convergence_carries_best_estimate():
    wild = LineIntegrand(lambda x: np.exp(40j * x**2))
    with pytest.raises(QuadratureError, match="did not converge") as exc:
        integrate_line(wild, QuadratureConfig(tol=1e-12, max_nodes=256))
    assert exc.value.best is not None


def test_geometric_convergence_past_256_nodes():
    f = line_integrand(0.5, 1.0)
    diffs = line_refinement_history(f, 8.0, 7)  # 64 .. 4096 panels
    past = diffs[2:]  # differences involving >= 256 panels
    for prev, cur in zip(past, past[1:]):
        assert cur <= prev / 4 or max(prev, cur) < 1e-13


def test_truncation_soundness():
    f = line_integrand(0.5, 1.0)
    cfg = QuadratureConfig(tol=1e-11)
    X = auto_truncation(f, cfg.tol)
    a = integrate_line(f, QuadratureConfig(tol=1e-11, truncation_x=X))
    b = integrate_line(f, QuadratureConfig(tol=1e-11, truncation_x=X + 2))
    assert abs(a.value - b.value) <= truncation_bound(f, X) + 2 * cfg.tol


@settings(max_examples=15, deadline=None)
@given(st.floats(-2, 2), st.floats(-2, 2))
def test_linearity(alpha, beta):
    cfg = QuadratureConfig(tol=1e-10)
    f = line_integrand(0.5, 1.0)
    g = LineIntegrand(lambda x: np.exp(1j * x) / (1 + x**2))
    combo = LineIntegrand(lambda x: alpha * f(x) + beta * g(x))
    lhs = integrate_line(combo, cfg).value
    rhs = alpha * integrate_line(f, cfg).value + beta * integrate_line(g, cfg).value
    assert abs(lhs - rhs) <= 2 * cfg.tol


def test_bit_reproducible():
    f = line_integrand(1.5, 0.3 + 0.2j)
    a = integrate_line(f, QuadratureConfig(tol=1e-10))
    b = integrate_line(f, QuadratureConfig(tol=1e-10))
    assert a.value == b.value and a.err_estimate == b.err_estimate


def test_sech_overflow_free():
    z = np.array([800.0, -800.0, 0.0, 3 + 0.2j])
    v = sech(z)
    assert np.all(np.isfinite(v))
    assert v[2] == 1.0
    assert abs(v[3] - 1 / np.cosh(3 + 0.2j)) < 1e-15


@pytest.mark.parametrize(
    "f, expected",
    [(lambda x: np.ones_like(x), 1.0), (lambda x: x**2, 1 / 3)],
    ids=["one", "square"],
)
def test_integrate_finite_examples(f, expected):
    r = integrate_finite(f, 0.0, 1.0, QuadratureConfig(tol=1e-12))
    assert abs(r.value - expected) <= 1e-12
    assert r.err_estimate <= 1e-12


def test_integrate_finite_psi_piece_consistent():
    delta = 1e-3
    rest = integrate_finite(psi_integrand, delta, 1.0, QuadratureConfig(tol=1e-12)).value.real
    full = psi_integral().value.real
    # the [0, delta] piece is about zeta(2) delta
    assert full - rest == pytest.approx(C.PI_SQ_OVER_6 * delta, rel=2e-3)


@pytest.mark.parametrize(
    "g, a, b, expected",
    [
        (lambda p: np.ones_like(p), 0.0, math.pi, math.pi),
        (lambda p: np.exp(1j * p), 0.0, 2 * math.pi, 0.0),
    ],
    ids=["one", "period"],
)
def test_integrate_arc_examples(g, a, b, expected):
    r = integrate_arc(g, a, b, QuadratureConfig(tol=1e-12))
    assert abs(r.value - expected) <= 1e-11


def test_integrate_arc_kernel_matches_i_r():
    r = integrate_arc(lambda p: kernel_modulus(1, p), 0.0, math.pi, QuadratureConfig(tol=1e-12))
    assert abs(r.value - i_r_integral(1)) <= 1e-10


def test_circle_average_residue():
    # (1/2 pi i) contour integral of 1/(z - c) is 1, of a regular function is 0
    assert abs(circle_average(lambda z: 1 / (z - 0.3j), 0.3j, 0.25) - 1) < 1e-14
    assert abs(circle_average(lambda z: np.exp(z), 0.3j, 0.25)) < 1e-14
