import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetaline import constants as C
from zetaline.results import DomainError
from zetaline.special_functions import (
    digamma,
    em_terms,
    eta_oracle,
    zeta_array,
    zeta_complex,
    zeta_integer,
    zeta_minus_one,
)


def direct_zeta(n, N=200_000):
    """Partial sum plus the midpoint of the integral tail bracket."""
    k = np.arange(1, N + 1, dtype=float)
    head = math.fsum(k**-n)
    lo = (N + 1) ** (1 - n) / (n - 1)
    hi = N ** (1 - n) / (n - 1)
    return head + 0.5 * (lo + hi), 0.5 * (hi - lo)


def grid():
    ts = np.linspace(-40, 40, 17)
    pts = [complex(s, t) for s in (0.5, 1.5, 3.0) for t in ts]
    return pts[:50]


@pytest.mark.parametrize(
    "s, expected",
    [(2, math.pi**2 / 6), (4, math.pi**4 / 90)],
)
def test_zeta_trivial(s, expected):
    r = zeta_complex(s)
    assert abs(r.value - expected) <= 1e-12
    assert r.value.imag == 0.0
    assert r.method == "euler_maclaurin"
    assert r.terms > 0


@pytest.mark.parametrize("s, prefix", [(0.5, -1.46035450880), (1.5, 2.61237534868)])
def test_zeta_against_eta_oracle(s, prefix):
    a, b = zeta_complex(s), eta_oracle(s)
    assert abs(a.value - b.value) <= 1e-12
    assert a.value.real == pytest.approx(prefix, abs=1e-11)


def test_eta_oracle_examples():
    assert abs(eta_oracle(2).value - math.pi**2 / 6) <= 1e-12
    z3, tail = direct_zeta(3)
    assert tail < 1e-12
    assert abs(eta_oracle(3).value - z3) <= 1e-11
    s = 0.5 + 10j
    assert abs(eta_oracle(s).value - zeta_complex(s).value) <= 1e-10


def test_err_estimate_within_tol():
    for s in grid():
        r = zeta_complex(s, 1e-12)
        assert 0 <= r.err_estimate <= 1e-12


def test_domain_errors():
    with pytest.raises(DomainError, match="pole proximity"):
        zeta_complex(1 + 1e-7)
    with pytest.raises(DomainError, match="domain"):
        zeta_complex(0.3 + 2j)
    with pytest.raises(DomainError, match="pole proximity"):
        eta_oracle(1 - 1e-8j)
    with pytest.raises(ValueError):
        zeta_complex(2, tol=1e-20)


def test_conjugate_symmetry_grid():
    for s in grid():
        a = zeta_complex(s).value
        b = zeta_complex(s.conjugate()).value
        assert abs(a - b.conjugate()) <= 1e-12


def test_oracle_equivalence_grid():
    worst = max(abs(zeta_complex(s).value - eta_oracle(s).value) for s in grid())
    assert worst <= 1e-10


@pytest.mark.parametrize("s", [0.5 + 3j, 1.5 - 25j, 3 + 40j, 0.5 + 40j])
def test_doubling_cut_within_estimate(s):
    vals, err, N, m = zeta_array(s, 1e-12)
    v2, b2, _ = em_terms(s, 2 * N, m)
    assert abs(vals[0] - v2[0]) <= err[0]


def test_batch_matches_scalar():
    s = np.array([0.5 + 1j, 0.5 + 7j, 1.5 - 3j])
    vals, _, _, _ = zeta_array(s)
    for si, v in zip(s, vals):
        assert abs(zeta_complex(si).value - v) <= 1e-13


@pytest.mark.parametrize("n, expected", [(2, math.pi**2 / 6), (6, math.pi**6 / 945)])
def test_zeta_integer_even(n, expected):
    assert zeta_integer(n) == pytest.approx(expected, abs=1e-15)


def test_zeta_integer_odd_against_direct_sum():
    z5, tail = direct_zeta(5, 20_000)
    assert zeta_integer(5) == pytest.approx(z5, abs=1e-14)
    assert zeta_integer(5) == pytest.approx(1.03692775514, abs=1e-11)


def test_zeta_integer_monotone_and_bounded():
    vals = [zeta_integer(n) for n in range(2, 80)]
    assert all(v >= 1.0 for v in vals)
    assert all(a >= b for a, b in zip(vals, vals[1:]))
    excess = [zeta_minus_one(n) for n in range(2, 80)]
    assert all(a > b for a, b in zip(excess, excess[1:]))
    for n in range(3, 60):
        assert zeta_minus_one(n) <= 2.0 ** (1 - n) * (1 + 1e-12)
    for n in range(2, 60):
        assert zeta_minus_one(n) <= 2.0**-n * (1 + 2 / (n - 1))


def test_zeta_integer_domain():
    with pytest.raises(DomainError):
        zeta_integer(1)


def test_zeta_minus_one_vectorised():
    n = np.arange(2, 40)
    vec = zeta_minus_one(n)
    assert np.allclose(vec, [zeta_integer(int(k)) - 1 for k in n], atol=4e-15, rtol=0)


@pytest.mark.parametrize(
    "x, expected",
    [
        (1.0, -C.EULER_GAMMA),
        (2.0, 1 - C.EULER_GAMMA),
        (0.5, -C.EULER_GAMMA - 2 * math.log(2)),
    ],
)
def test_digamma_values(x, expected):
    assert abs(digamma(x) - expected) <= 1e-12


def test_digamma_recurrence_random():
    rng = np.random.default_rng(7)
    x = rng.uniform(0.1, 20.0, 100)
    assert np.max(np.abs(digamma(x + 1) - digamma(x) - 1 / x)) <= 1e-12


@settings(max_examples=60, deadline=None)
@given(st.floats(min_value=1e-3, max_value=200.0))
def test_digamma_recurrence_property(x):
    assert abs(digamma(x + 1) - digamma(x) - 1 / x) <= 1e-12 * max(1.0, 1 / x)


def test_digamma_series_limit():
    x = 1e-4
    v = (digamma(1 + x) + C.EULER_GAMMA) / x
    assert abs(v - (zeta_integer(2) - zeta_integer(3) * x)) <= 1e-3


def test_digamma_domain():
    with pytest.raises(DomainError):
        digamma(0.0)
    with pytest.raises(DomainError):
        digamma(np.array([1.0, -2.0]))
