"""Line-integral representations of nu(omega) and the closed-form integral evaluations.

Both representations integrate zeta(c + ix)/((c + ix + omega) cosh(pi x)) over
the real line, with c = 1/2 or c = 3/2:

    nu(omega) = -1/(omega+1)^2 + gamma/(omega+1) - J_{1/2}(omega)/2,  Re omega > -1/2
    nu(omega) = J_{3/2}(omega)/2,                                      Re omega > -3/2

The +ix form of the integrand is canonical; the -ix form gives the same value
(substitute x -> -x) and is only used by :func:`sign_convention_check`.
"""

from __future__ import annotations

import math

import numpy as np

from zetaline import constants as C
from zetaline.nu_series import THEOREM_MARGIN
from zetaline.quadrature import LineIntegrand, QuadratureConfig, integrate_finite, integrate_line
from zetaline.results import DomainError, EvalResult, VerificationRecord
from zetaline.special_functions import digamma, zeta_array, zeta_integer

LINES = {"half": 0.5, "three_halves": 1.5}

DEFAULT_CFG = QuadratureConfig(tol=1e-9)


def _zeta_tol(cfg: QuadratureConfig) -> float:
    return max(1e-14, min(1e-3, cfg.tol * 1e-3))


def line_integrand(line: float, omega: complex, sign: int = 1, zeta_tol: float = 1e-12) -> LineIntegrand:
    """x -> zeta(line + sign*i x)/(line + sign*i x + omega), the factor multiplying sech(pi x)."""

    def f(x):
        s = line + sign * 1j * np.asarray(x, dtype=float)
        z, _, _, _ = zeta_array(s, zeta_tol)
        return z / (s + omega)

    return LineIntegrand(f, decay_class="polynomial-growth(1)")


def line_integral(line: float, omega: complex, cfg: QuadratureConfig = DEFAULT_CFG, sign: int = 1) -> EvalResult:
    return integrate_line(line_integrand(line, complex(omega), sign, _zeta_tol(cfg)), cfg)


def _require(omega: complex, bound: float, message: str):
    if not complex(omega).real > bound + THEOREM_MARGIN:
        raise DomainError(message)


def nu_via_critical_line(omega: complex, cfg: QuadratureConfig = DEFAULT_CFG) -> EvalResult:
    omega = complex(omega)
    _require(omega, -0.5, "Theorem 1 requires Re omega > -1/2")
    J = line_integral(0.5, omega, cfg)
    w1 = omega + 1.0
    value = -1.0 / w1**2 + C.EULER_GAMMA / w1 - 0.5 * J.value
    return EvalResult(value, 0.5 * J.err_estimate + 1e-15, "integral_half_line", nodes=J.nodes)


def nu_via_three_halves_line(omega: complex, cfg: QuadratureConfig = DEFAULT_CFG) -> EvalResult:
    omega = complex(omega)
    _require(omega, -1.5, "Theorem 2 requires Re omega > -3/2")
    J = line_integral(1.5, omega, cfg)
    return EvalResult(0.5 * J.value, 0.5 * J.err_estimate, "integral_three_halves_line", nodes=J.nodes)


# case -> (line, shift, closed form, label)
def _corollary_cases():
    g, A, g1, k1 = C.EULER_GAMMA, C.GLAISHER_A, C.STIELTJES_GAMMA1, C.KAPPA1
    L = C.LN_TWO_PI
    return {
        1: (0.5, 0.5, -2.0, "Corollary display 1: = -2"),
        2: (0.5, 1.5, L - 2.5, "Corollary display 2: = ln 2pi - 5/2"),
        3: (0.5, 2.5, L - 4.0 * math.log(A) - 11.0 / 9.0, "Corollary display 3: = ln 2pi - 4 ln A - 11/9"),
        4: (1.5, 1.5, 2.0 * g, "Corollary display 4: = 2 gamma"),
        5: (1.5, 0.5, 2.0 * k1 + math.pi**2 / 6 - g * g - 2.0 * g1, "Corollary display 5: = 2 kappa1 + pi^2/6 - gamma^2 - 2 gamma1"),
    }


CASE_TOL = {1: 1e-8, 2: 1e-8, 3: 1e-8, 4: 1e-8, 5: 1e-7}


def corollary_integral(case: int, cfg: QuadratureConfig = DEFAULT_CFG, tol: float | None = None) -> VerificationRecord:
    """Integral of zeta(line+ix)/((shift+ix) cosh pi x) against its closed form.

    The denominator shift is line + omega with omega = shift - line. Cases 2 and
    3 are real by conjugate symmetry; the real part is recorded and the
    imaginary part must vanish to 1e-9.
    """
    cases = _corollary_cases()
    if case not in cases:
        raise ValueError(f"unknown corollary case {case}")
    line, shift, rhs, ref = cases[case]
    J = line_integral(line, shift - line, cfg)
    if abs(J.value.imag) > 1e-9:
        raise ArithmeticError(f"corollary case {case}: imaginary part {J.value.imag:.3e} exceeds 1e-9")
    return VerificationRecord(
        f"corollary_{case}",
        complex(J.value.real, 0.0),
        rhs,
        CASE_TOL[case] if tol is None else tol,
        ref,
    )


PSI_PATCH = 1e-3
PSI_PATCH_TERMS = 12


def psi_integrand(x):
    x = np.asarray(x, dtype=float)
    return (digamma(x + 1.0) + C.EULER_GAMMA) / x


def psi_integral(cfg: QuadratureConfig = QuadratureConfig(tol=1e-12)) -> EvalResult:
    """int_0^1 (psi(x+1) + gamma)/x dx.

    On [0, delta] the integrand is the power series sum_{k>=2} (-1)^k zeta(k) x^{k-2},
    integrated termwise; adaptive Simpson covers [delta, 1].
    """
    d = PSI_PATCH
    patch = math.fsum((-1) ** k * zeta_integer(k) * d ** (k - 1) / (k - 1) for k in range(2, 2 + PSI_PATCH_TERMS))
    patch_err = zeta_integer(2 + PSI_PATCH_TERMS) * d ** (1 + PSI_PATCH_TERMS) / (1 + PSI_PATCH_TERMS)
    rest = integrate_finite(psi_integrand, d, 1.0, cfg)
    return EvalResult(complex(patch + rest.value.real, 0.0), rest.err_estimate + patch_err, "quadrature", terms=PSI_PATCH_TERMS, nodes=rest.nodes)


def sign_convention_check(line: str, omega: complex, cfg: QuadratureConfig = DEFAULT_CFG) -> VerificationRecord:
    """The +ix and -ix integrands give the same line integral."""
    if line not in LINES:
        raise ValueError(f"line must be one of {sorted(LINES)}")
    omega = complex(omega)
    if line == "half":
        _require(omega, -0.5, "Theorem 1 requires Re omega > -1/2")
    else:
        _require(omega, -1.5, "Theorem 2 requires Re omega > -3/2")
    c = LINES[line]
    plus = line_integral(c, omega, cfg, sign=1)
    minus = line_integral(c, omega, cfg, sign=-1)
    return VerificationRecord(
        f"sign_{line}_{omega.real:g}{omega.imag:+g}i",
        plus.value,
        minus.value,
        2.0 * cfg.tol,
        "zeta(c +/- ix) either-sign equivalence",
    )
