"""Direct evaluation of nu(omega) = sum_{j>=2} (-1)^j zeta(j)/(j+omega).

The sum is split as zeta(j) = 1 + (zeta(j) - 1). The second part decays like
2^-j and is summed with the explicit tail bound

    zeta(j) - 1 <= 2^-j (1 + 2/(j-1)),

the first part sum (-1)^j/(j+omega) is done in closed form (digamma
difference) for real omega and by an exact Euler transform for complex omega.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from zetaline.results import DomainError, EvalResult
from zetaline.special_functions import digamma, zeta_integer, zeta_minus_one

THEOREM_MARGIN = 1e-6


@dataclass(frozen=True)
class SeriesConfig:
    max_terms: int = 200
    acceleration_order: int = 56
    tol: float = 1e-14

    def __post_init__(self):
        if self.max_terms < 16:
            raise ValueError("max_terms must be >= 16")
        if not 4 <= self.acceleration_order <= 64:
            raise ValueError("acceleration_order must lie in [4, 64]")
        if not self.tol > 0:
            raise ValueError("tol must be positive")


def domain_tags(omega: complex) -> set[str]:
    """Which evaluation routes are valid at ``omega``; computed, never trusted from the caller."""
    omega = complex(omega)
    tags = set()
    if not (omega.imag == 0.0 and omega.real <= -2 and omega.real == math.floor(omega.real)):
        tags.add("series-ok")
    if omega.real > -0.5 + THEOREM_MARGIN:
        tags.add("theorem1-ok")
    if omega.real > -1.5 + THEOREM_MARGIN:
        tags.add("theorem2-ok")
    return tags


def _require_series(omega: complex):
    if "series-ok" not in domain_tags(omega):
        raise DomainError("series undefined at negative integer shift")


def alternating_reciprocal_tail(a: complex, order: int = 56) -> tuple[complex, float]:
    """sum_{k>=0} (-1)^k / (k + a) via the Euler transform, Re a > 0.

    For a_k = 1/(k+a) the forward differences are exact,
    (-1)^n Delta^n a_0 = n!/(a (a+1) ... (a+n)), so the transformed terms obey
    t_n = t_{n-1} n / (2 (a+n)) with ratio below 1/2; the tail after the last
    included term is bounded by that term.
    """
    a = complex(a)
    if not a.real > 0:
        raise ValueError("Euler transform path needs Re a > 0")
    t = 0.5 / a
    total = t
    for n in range(1, order):
        t = t * n / (2.0 * (a + n))
        total += t
    return total, abs(t)


def alternating_reciprocal_digamma(a: float) -> float:
    """sum_{k>=0} (-1)^k/(k+a) = (psi((a+1)/2) - psi(a/2))/2 for real a > 0."""
    return 0.5 * (digamma(0.5 * (a + 1.0)) - digamma(0.5 * a))


def _reciprocal_part(omega: complex, order: int) -> tuple[complex, float]:
    """sum_{j>=2} (-1)^j/(j+omega) with an error estimate."""
    j0 = 2
    head = 0j
    while (j0 + omega).real <= 1.0:
        head += (-1) ** j0 / (j0 + omega)
        j0 += 1
    a = j0 + omega
    sign = (-1) ** j0
    if omega.imag == 0.0:
        return head + sign * alternating_reciprocal_digamma(a.real), 4e-16 * (1.0 + abs(head))
    tail, err = alternating_reciprocal_tail(a, order)
    return head + sign * tail, err + 4e-16 * (1.0 + abs(head))


def _zeta_excess_part(omega: complex, tol: float, max_terms: int) -> tuple[complex, float, int]:
    """sum_{j>=2} (-1)^j (zeta(j)-1)/(j+omega) with a rigorous tail bound."""
    total = 0j
    j = 2
    while True:
        total += (-1) ** j * zeta_minus_one(j) / (j + omega)
        # tail over j' > j: sum 2^-j' (1 + 2/(j'-1)) / |j'+omega|, and |j'+omega| >= j+1+Re omega
        dist = j + 1 + omega.real
        bound = 2.0**-j * (1.0 + 2.0 / j) / dist if dist > 0.5 else math.inf
        if bound <= tol:
            return total, bound, j - 1
        if j - 1 >= max_terms:
            return total, bound, j - 1
        j += 1


def nu_direct(omega: complex, cfg: SeriesConfig = SeriesConfig()) -> EvalResult:
    omega = complex(omega)
    _require_series(omega)
    recip, err_r = _reciprocal_part(omega, cfg.acceleration_order)
    excess, err_z, terms = _zeta_excess_part(omega, cfg.tol, cfg.max_terms)
    value = recip + excess
    if omega.imag == 0.0:
        value = complex(value.real, 0.0)
    err = err_r + err_z + 1e-16 * terms
    return EvalResult(value, err, "series_accelerated", terms=terms + cfg.acceleration_order)


def nu_partial_sum(omega: complex, J: int) -> complex:
    """Plain truncation sum_{j=2}^{J} (-1)^j zeta(j)/(j+omega)."""
    omega = complex(omega)
    _require_series(omega)
    if J < 2:
        raise ValueError("J must be >= 2")
    j = np.arange(2, J + 1)
    zeta = np.array([zeta_integer(int(k)) for k in j[:60]])
    if J > 61:
        zeta = np.concatenate([zeta, 1.0 + zeta_minus_one(j[60:])])
    signs = np.where(j % 2 == 0, 1.0, -1.0)
    terms = signs * zeta / (j + omega)
    return complex(math.fsum(terms.real), math.fsum(terms.imag))


def partial_sum_tail_bound(omega: float, J: int) -> float:
    """Alternating-series remainder bound |nu - S_J| <= zeta(J+1)/(J+1+omega), real omega >= 0."""
    return zeta_integer(J + 1) / (J + 1 + omega)
