"""Numerical replay of the contour argument behind the critical-line representation.

The contour integrand is

    F(z) = zeta(1/2 - iz) / ((1/2 - iz + omega) cosh(pi z)),

taken over [-R, R] plus the upper semicircle C_R (R a positive integer).
Inside sit a double pole at z = i/2 and simple poles at z_n = i(n - 1/2),
n = 2..R. Empirical O(.) statements are checked as bounded-ratio sweeps with
fixed slack factors, not as limits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from zetaline import constants as C
from zetaline.nu_series import THEOREM_MARGIN
from zetaline.quadrature import QuadratureConfig, adaptive_simpson, circle_average, integrate_arc, sech
from zetaline.results import DomainError, EvalResult, VerificationRecord
from zetaline.special_functions import zeta_array, zeta_integer

SMALL_RADIUS = 0.25
CIRCLE_NODES = 256
ARC_R_MAX = 40
RESIDUE_TOL = 1e-8
ASSEMBLY_TOL = 1e-6
SANDWICH_SLACK = 1e-12

ARC_CFG = QuadratureConfig(tol=1e-10)


@dataclass(frozen=True)
class ArcSpec:
    R: int = 1
    center: complex = 0j
    radius: float = 0.0
    half: bool = True

    def __post_init__(self):
        _require_integer_R(self.R)
        if not self.half and not 0.0 < self.radius < 0.5:
            raise ValueError("small-circle radius must lie in (0, 1/2)")


def _require_integer_R(R):
    if isinstance(R, bool) or not isinstance(R, (int, np.integer)) or R < 1:
        raise ValueError(f"R must be a positive integer, got {R!r}")


def _require_theorem1(omega: complex):
    if not complex(omega).real > -0.5 + THEOREM_MARGIN:
        raise DomainError("Theorem 1 requires Re omega > -1/2")


def contour_integrand(omega: complex, zeta_tol: float = 1e-13):
    omega = complex(omega)

    def F(z):
        z = np.asarray(z, dtype=complex)
        s = 0.5 - 1j * z
        zeta, _, _, _ = zeta_array(s, zeta_tol)
        return zeta * sech(math.pi * z) / (s + omega)

    return F


def kernel_modulus(R: float, phi):
    """1/|cosh(pi R e^{i phi})| evaluated directly."""
    return 1.0 / np.abs(np.cosh(math.pi * R * np.exp(1j * np.asarray(phi))))


def kernel_modulus_closed(R: float, phi):
    """sqrt 2 / sqrt(cosh(2 pi R cos phi) + cos(2 pi R sin phi))."""
    phi = np.asarray(phi, dtype=float)
    return math.sqrt(2.0) / np.sqrt(np.cosh(2 * math.pi * R * np.cos(phi)) + np.cos(2 * math.pi * R * np.sin(phi)))


def i_r_integral(R: int, cfg: QuadratureConfig = QuadratureConfig(tol=1e-12)) -> float:
    """I_R = int_0^pi d phi / |cosh(pi R e^{i phi})|, as twice the integral over [0, pi/2]."""
    _require_integer_R(R)
    value, _, _ = adaptive_simpson(lambda p: kernel_modulus_closed(R, p), 0.0, 0.5 * math.pi, 0.5 * cfg.tol, cfg.max_nodes)
    return 2.0 * value.real


def i_r_reference(R: int, nodes: int = 10**6) -> float:
    """Brute-force composite Simpson on a fixed fine grid over [0, pi]."""
    n = nodes + (nodes % 2)
    phi = np.linspace(0.0, math.pi, n + 1)
    y = kernel_modulus(R, phi)
    w = np.ones(n + 1)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return float(math.pi / n / 3.0 * math.fsum(w * y))


def sin_integral(R: int, tol: float = 1e-14) -> float:
    value, _, _ = adaptive_simpson(lambda t: np.exp(-math.pi * R * np.sin(t)), 0.0, 0.5 * math.pi, tol)
    return value.real


def sin_bounds(R: float) -> tuple[float, float]:
    lower = -math.expm1(-0.5 * math.pi**2 * R) / (math.pi * R)
    upper = -math.expm1(-math.pi * R) / (2.0 * R)
    return lower, upper


def sin_bound_check(R: int) -> VerificationRecord:
    """lower <= int_0^{pi/2} e^{-pi R sin t} dt <= upper.

    The record's rhs is the nearest point of [lower, upper] to the computed
    integral, so abs_diff is the distance outside the bracket.
    """
    _require_integer_R(R)
    middle = sin_integral(R)
    lower, upper = sin_bounds(R)
    return VerificationRecord(
        f"sin_sandwich_R{R}",
        middle,
        min(max(middle, lower), upper),
        SANDWICH_SLACK,
        "sandwich (1-e^{-pi^2 R/2})/(pi R) <= int e^{-pi R sin t} <= (1-e^{-pi R})/(2R)",
    )


def i_r_sweep(R_max: int) -> np.ndarray:
    return np.array([i_r_integral(R) for R in range(1, R_max + 1)])


def i_r_decay_check(R_max: int) -> VerificationRecord:
    """R I_R <= 2 max_{R<=5} R I_R on [1, R_max], and I_R strictly decreasing.

    lhs = max R I_R, rhs = the bound C. abs_diff is the excess over C plus the
    number of non-decreasing steps, so any violation fails the record.
    """
    _require_integer_R(R_max)
    if R_max < 10:
        raise ValueError("R_max must be >= 10")
    I = i_r_sweep(R_max)
    R = np.arange(1, R_max + 1)
    scaled = R * I
    bound = 2.0 * float(np.max(scaled[:5]))
    worst = float(np.max(scaled))
    nonstrict = int(np.sum(np.diff(I) >= 0.0))
    return VerificationRecord(
        f"i_r_decay_R{R_max}",
        worst,
        bound,
        0.0,
        "I_R = O(1/R) as bounded sweep",
        abs_diff=max(0.0, worst - bound) + nonstrict,
    )


def i_r_small_check(R_max: int) -> list[VerificationRecord]:
    """Per-R checks for short sweeps: I_R quadrature vs fine-grid reference."""
    out = []
    for R in range(1, R_max + 1):
        out.append(
            VerificationRecord(f"i_r_reference_R{R}", i_r_integral(R), i_r_reference(R), 1e-9, "I_R definition")
        )
    return out


def arc_points(R: int, phi):
    return R * np.exp(1j * np.asarray(phi, dtype=float))


def zeta_growth_on_arc(R: int, points: int = 181) -> float:
    """max over phi in [0, pi] of |zeta(1/2 - i R e^{i phi})|."""
    _require_integer_R(R)
    if R > ARC_R_MAX:
        raise ValueError(f"R must be <= {ARC_R_MAX}")
    phi = np.linspace(0.0, math.pi, points)
    s = 0.5 - 1j * arc_points(R, phi)
    s = np.maximum(s.real, 0.5) + 1j * s.imag  # sin(pi) rounds slightly negative
    zeta, _, _, _ = zeta_array(s, 1e-12)
    return float(np.max(np.abs(zeta)))


def arc_integral(R: int, omega: complex, cfg: QuadratureConfig = ARC_CFG) -> EvalResult:
    """int over C_R of F(z) dz, with z = R e^{i phi}, dz = i R e^{i phi} d phi."""
    _require_integer_R(R)
    if R > ARC_R_MAX:
        raise ValueError(f"R must be <= {ARC_R_MAX}")
    _require_theorem1(omega)
    F = contour_integrand(omega, max(1e-14, cfg.tol * 1e-3))

    def g(phi):
        z = arc_points(R, phi)
        z = z.real + 1j * np.maximum(z.imag, 0.0)
        return F(z) * 1j * z

    return integrate_arc(g, 0.0, math.pi, cfg)


def arc_integral_decay(R: int, omega: complex, cfg: QuadratureConfig = ARC_CFG) -> float:
    return abs(arc_integral(R, omega, cfg).value)


def segment_integral(R: int, omega: complex, cfg: QuadratureConfig = ARC_CFG) -> EvalResult:
    """int_{-R}^{R} F(x) dx along the real axis."""
    _require_integer_R(R)
    _require_theorem1(omega)
    F = contour_integrand(omega, max(1e-14, cfg.tol * 1e-3))
    value, err, n = adaptive_simpson(lambda x: F(np.asarray(x, dtype=complex)), -float(R), float(R), cfg.tol, cfg.max_nodes)
    return EvalResult(value, err, "quadrature", nodes=n)


def _small_circle(center: complex, omega: complex) -> complex:
    spec = ArcSpec(R=1, center=center, radius=SMALL_RADIUS, half=False)
    return circle_average(contour_integrand(omega), spec.center, spec.radius, CIRCLE_NODES)


def residue_double_pole(omega: complex) -> VerificationRecord:
    """Residue of F at z = i/2 against (1/(pi i)) (gamma (1+omega) - 1)/(1+omega)^2."""
    omega = complex(omega)
    _require_theorem1(omega)
    lhs = _small_circle(0.5j, omega)
    w1 = 1.0 + omega
    rhs = (C.EULER_GAMMA * w1 - 1.0) / w1**2 / (math.pi * 1j)
    return VerificationRecord(
        f"residue_double_{omega.real:g}{omega.imag:+g}i",
        lhs,
        rhs,
        RESIDUE_TOL,
        "double pole at z = i/2: (1/pi i)(gamma(1+omega)-1)/(1+omega)^2",
    )


def simple_pole_closed_form(n: int, omega: complex) -> complex:
    return (-1) ** (n + 1) * zeta_integer(n) / (n + omega) / (math.pi * 1j)


def residue_simple_pole(n: int, omega: complex) -> VerificationRecord:
    """Residue of F at z_n = i(n - 1/2) against (1/(pi i)) (-1)^{n+1} zeta(n)/(n+omega)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    omega = complex(omega)
    _require_theorem1(omega)
    lhs = _small_circle(1j * (n - 0.5), omega)
    return VerificationRecord(
        f"residue_simple_n{n}_{omega.real:g}{omega.imag:+g}i",
        lhs,
        simple_pole_closed_form(n, omega),
        RESIDUE_TOL,
        "simple poles z_n = i(n-1/2): (1/pi i)(-1)^{n+1} zeta(n)/(n+omega)",
    )


def enclosed_residue_sum(omega: complex, N_poles: int) -> complex:
    """Numerical residues of F inside the contour: z = i/2 and z_n, n = 2..N_poles."""
    total = residue_double_pole(omega).lhs
    for n in range(2, N_poles + 1):
        total += residue_simple_pole(n, omega).lhs
    return total


def theorem1_assembly_check(omega: complex, R: int, N_poles: int | None = None, cfg: QuadratureConfig = ARC_CFG) -> VerificationRecord:
    """segment + arc = 2 pi i (sum of enclosed residues), every piece numerical."""
    _require_integer_R(R)
    omega = complex(omega)
    _require_theorem1(omega)
    N_poles = R if N_poles is None else N_poles
    if N_poles != R:
        raise ValueError("N_poles must equal R (poles with |z_n| < R)")
    lhs = segment_integral(R, omega, cfg).value + arc_integral(R, omega, cfg).value
    rhs = 2j * math.pi * enclosed_residue_sum(omega, N_poles)
    return VerificationRecord(
        f"assembly_R{R}_{omega.real:g}{omega.imag:+g}i",
        lhs,
        rhs,
        ASSEMBLY_TOL,
        "segment + arc = 2 pi i * enclosed residues",
    )


RESIDUE_GRID = (
    ("double", None, 0j),
    ("double", None, 1 + 0j),
    ("double", None, 0.3 + 0.7j),
    ("double", None, 2.0 - 1.0j),
    ("double", None, -0.3 + 0j),
    ("simple", 2, 0j),
    ("simple", 3, 0j),
    ("simple", 5, 1 - 0.2j),
    ("simple", 4, 0.5 + 0j),
    ("simple", 7, 2 + 1j),
)


def residue_grid_records() -> list[VerificationRecord]:
    out = []
    for kind, n, omega in RESIDUE_GRID:
        out.append(residue_double_pole(omega) if kind == "double" else residue_simple_pole(n, omega))
    return out


ASSEMBLY_GRID = tuple((w, R) for w in (0j, 1 + 0j, 0.5 + 0.5j) for R in (5, 10))
