"""Result containers and exceptions shared by every module."""

from __future__ import annotations

import math
from dataclasses import dataclass, field


class ZetalineError(Exception):
    pass


class DomainError(ZetalineError, ValueError):
    pass


class QuadratureError(ZetalineError, ArithmeticError):
    """Raised when a quadrature rule fails to converge; keeps the best estimate seen."""

    def __init__(self, message: str, best: complex | float | None = None, err: float = math.inf):
        super().__init__(message)
        self.best = best
        self.err = err


METHODS = (
    "euler_maclaurin",
    "eta_oracle",
    "series_direct",
    "series_accelerated",
    "integral_half_line",
    "integral_three_halves_line",
    "quadrature",
)


@dataclass(frozen=True)
class EvalResult:
    value: complex
    err_estimate: float
    method: str
    terms: int = 0
    nodes: int = 0

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if not (math.isfinite(self.err_estimate) and self.err_estimate >= 0.0):
            raise ValueError(f"err_estimate must be finite and >= 0, got {self.err_estimate}")

    @property
    def real(self) -> float:
        return complex(self.value).real


@dataclass(frozen=True)
class VerificationRecord:
    """One checked identity. ``passed`` is always ``abs_diff <= tol``."""

    id: str
    lhs: complex
    rhs: complex
    tol: float
    paper_ref: str
    abs_diff: float = field(default=math.nan)

    def __post_init__(self):
        object.__setattr__(self, "lhs", complex(self.lhs))
        object.__setattr__(self, "rhs", complex(self.rhs))
        if math.isnan(self.abs_diff):
            object.__setattr__(self, "abs_diff", abs(self.lhs - self.rhs))

    @property
    def passed(self) -> bool:
        return self.abs_diff <= self.tol
