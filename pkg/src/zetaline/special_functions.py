"""Riemann zeta for Re s >= 1/2, an independent eta-series cross-check, and real digamma.

The main engine is Euler-Maclaurin summation

    zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
              + sum_{k=1}^{m} B_2k/(2k)! s(s+1)...(s+2k-2) N^(-s-2k+1) + R_m

with Backlund's remainder bound |R_m| <= |s+2m+1|/(sigma+2m+1) * |T_{m+1}|,
where T_{m+1} is the first omitted correction term. All evaluators accept
numpy arrays so the quadrature layer can evaluate a whole node set at once.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy.special import loggamma

from zetaline.results import DomainError, EvalResult

# B_0 .. B_30 (odd indices > 1 vanish)
BERNOULLI = {
    0: Fraction(1),
    1: Fraction(-1, 2),
    2: Fraction(1, 6),
    4: Fraction(-1, 30),
    6: Fraction(1, 42),
    8: Fraction(-1, 30),
    10: Fraction(5, 66),
    12: Fraction(-691, 2730),
    14: Fraction(7, 6),
    16: Fraction(-3617, 510),
    18: Fraction(43867, 798),
    20: Fraction(-174611, 330),
    22: Fraction(854513, 138),
    24: Fraction(-236364091, 2730),
    26: Fraction(8553103, 6),
    28: Fraction(-23749461029, 870),
    30: Fraction(8615841276005, 14322),
}
# B_2k / (2k)!  for k = 1..15; the last one only feeds the remainder bound
_EM_COEFF = [float(BERNOULLI[2 * k] / math.factorial(2 * k)) for k in range(1, 16)]
MAX_EM_ORDER = 14

POLE_RADIUS = 1e-6
_EPS = np.finfo(float).eps


def _as_complex_array(s):
    return np.atleast_1d(np.asarray(s, dtype=complex))


def em_terms(s, N: int, m: int, start: int = 1):
    """Euler-Maclaurin sum with a fixed cut ``N`` and ``m`` corrections.

    No domain checks: valid wherever Re s > -(2m+1) and s != 1. Returns
    ``(value, remainder_bound, abs_sum)`` arrays, ``abs_sum`` being the sum of
    |n^-s| over the explicit part (used for a roundoff allowance). With
    ``start=2`` the n = 1 term is dropped, giving zeta(s) - 1.
    """
    s = _as_complex_array(s)
    if not 1 <= m <= MAX_EM_ORDER:
        raise ValueError(f"m must be in [1, {MAX_EM_ORDER}]")
    if N <= start:
        raise ValueError("N must exceed start")
    n = np.arange(start, N, dtype=float)
    powers = np.exp(-np.outer(s, np.log(n)))
    head = powers.sum(axis=1)
    abs_sum = np.abs(powers).sum(axis=1)

    logN = math.log(N)
    N_s = np.exp(-s * logN)
    value = head + N * N_s / (s - 1.0) + 0.5 * N_s

    poch = s.copy()  # s(s+1)...(s+2k-2)
    scale = N_s / N  # N^(-s-2k+1) for k = 1
    for k in range(1, m + 1):
        value = value + _EM_COEFF[k - 1] * poch * scale
        poch = poch * (s + 2 * k - 1) * (s + 2 * k)
        scale = scale / (N * N)
    t_next = np.abs(_EM_COEFF[m] * poch * scale)
    sigma = s.real
    bound = np.abs(s + 2 * m + 1) / (sigma + 2 * m + 1) * t_next
    return value, bound, abs_sum


def default_cut(t_max: float) -> int:
    return max(20, math.ceil(1.3 * t_max) + 10)


def _check_zeta_domain(s: np.ndarray):
    if np.any(s.real < 0.5):
        raise DomainError("domain: zeta engine requires Re s >= 1/2")
    if np.any(np.abs(s - 1.0) < POLE_RADIUS):
        raise DomainError("pole proximity: |s - 1| < 1e-6")


def _check_tol(tol: float, lo: float = 1e-14, hi: float = 1e-3):
    if not lo <= tol <= hi:
        raise ValueError(f"tol must lie in [{lo:g}, {hi:g}], got {tol:g}")


def zeta_array(s, tol: float = 1e-12):
    """Vectorised Euler-Maclaurin zeta.

    Returns ``(values, err_bounds, N, m)``. One cut ``N`` and order ``m`` are
    shared by the whole batch, chosen from the largest |Im s| and the worst
    remainder bound, so results do not depend on the batch layout beyond that.
    """
    _check_tol(tol)
    s = _as_complex_array(s)
    _check_zeta_domain(s)
    N = default_cut(float(np.max(np.abs(s.imag))) if s.size else 0.0)
    while True:
        for m in range(1, MAX_EM_ORDER + 1):
            value, bound, abs_sum = em_terms(s, N, m)
            err = bound + 8 * _EPS * (abs_sum + 1.0)
            if np.all(bound <= 1e-3 * tol):
                return value, err, N, m
        N = int(N * 1.5) + 1
        if N > 100_000:
            raise DomainError("Euler-Maclaurin cut grew beyond 1e5; |Im s| too large")


def zeta_complex(s: complex, tol: float = 1e-12) -> EvalResult:
    value, err, N, m = zeta_array(s, tol)
    v = complex(value[0])
    if complex(s).imag == 0.0:
        v = complex(v.real, 0.0)
    return EvalResult(v, float(err[0]), "euler_maclaurin", terms=N - 1 + m, nodes=0)


@lru_cache(maxsize=64)
def _borwein_weights(n: int) -> np.ndarray:
    """(d_k - d_n)/d_n for k = 0..n-1 of Borwein's Chebyshev-type acceleration."""
    d = []
    acc = Fraction(0)
    for i in range(n + 1):
        acc += Fraction(math.factorial(n + i - 1) * 4**i, math.factorial(n - i) * math.factorial(2 * i))
        d.append(n * acc)
    dn = d[n]
    return np.array([float((d[k] - dn) / dn) for k in range(n)])


def _borwein_bound(s: complex, n: int) -> float:
    # Borwein (2000): |gamma_n(s)| <= 3 (1+2|t|) e^{pi|t|/2} / ((3+sqrt 8)^n |Gamma(s)| |1-2^{1-s}|)
    t = abs(s.imag)
    log_b = (
        math.log(3.0 * (1.0 + 2.0 * t))
        + 0.5 * math.pi * t
        - float(np.real(loggamma(s)))
        - math.log(abs(1.0 - 2.0 ** (1.0 - s)))
        - n * math.log(3.0 + math.sqrt(8.0))
    )
    return math.exp(log_b)


def eta_oracle(s: complex, tol: float = 1e-12) -> EvalResult:
    """zeta(s) = eta(s)/(1 - 2^(1-s)) with the alternating eta series accelerated."""
    _check_tol(tol)
    s = complex(s)
    _check_zeta_domain(np.array([s]))
    factor = 1.0 - 2.0 ** (1.0 - s)
    if abs(factor) < 1e-6:
        raise DomainError("domain: 1 - 2^(1-s) vanishes on Re s = 1")
    n = 8
    while _borwein_bound(s, n) > 0.5 * tol:
        n += 4
        if n > 400:
            raise DomainError("eta acceleration needs more than 400 terms")
    k = np.arange(1, n + 1, dtype=float)
    signs = np.where(np.arange(n) % 2 == 0, 1.0, -1.0)
    powers = np.exp(-s * np.log(k))
    total = -np.sum(signs * _borwein_weights(n) * powers)
    value = complex(total / factor)
    if s.imag == 0.0:
        value = complex(value.real, 0.0)
    err = _borwein_bound(s, n) + 8 * _EPS * n / abs(factor)
    return EvalResult(value, err, "eta_oracle", terms=n)


def _even_zeta(n: int) -> float:
    k = n // 2
    b = BERNOULLI[n]
    return float((-1) ** (k + 1) * b * (2 * math.pi) ** n / (2 * math.factorial(n)))


def zeta_minus_one(n):
    """zeta(n) - 1 for integer n >= 2 (scalar or array), without cancellation."""
    arr = np.atleast_1d(np.asarray(n))
    if np.any(arr < 2):
        raise DomainError("domain: zeta_integer requires n >= 2")
    value, _, _ = em_terms(arr.astype(complex), 16, 8, start=2)
    out = value.real
    return float(out[0]) if np.ndim(n) == 0 else out


def zeta_integer(n: int, tol: float = 1e-15) -> float:
    if n < 2:
        raise DomainError("domain: zeta_integer requires n >= 2")
    if n % 2 == 0 and n <= 30:
        return _even_zeta(n)
    return 1.0 + zeta_minus_one(int(n))


# digamma asymptotic: psi(x) ~ ln x - 1/(2x) - sum_k B_2k / (2k x^2k)
_PSI_COEFF = [float(BERNOULLI[2 * k] / (2 * k)) for k in range(1, 11)]
_PSI_SHIFT = 10.0


def digamma(x, tol: float = 1e-15):
    """Real digamma for x > 0; accepts scalars or arrays."""
    arr = np.asarray(x, dtype=float)
    if np.any(arr <= 0):
        raise DomainError("domain: digamma requires x > 0")
    y = arr.copy()
    acc = np.zeros_like(y)
    while True:
        small = y < _PSI_SHIFT
        if not np.any(small):
            break
        acc = acc - np.where(small, 1.0 / np.where(small, y, 1.0), 0.0)
        y = np.where(small, y + 1.0, y)
    inv2 = 1.0 / (y * y)
    series = np.zeros_like(y)
    power = inv2.copy()
    for c in _PSI_COEFF:
        term = c * power
        series = series + term
        if np.all(np.abs(term) < tol * 1e-3):
            break
        power = power * inv2
    out = acc + np.log(y) - 0.5 / y - series
    return float(out) if np.ndim(x) == 0 else out
