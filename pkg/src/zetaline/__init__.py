"""Numerics for the alternating zeta-value series nu(omega) and its line-integral representations."""

__version__ = "0.1.0"

from zetaline.results import DomainError, EvalResult, QuadratureError, VerificationRecord, ZetalineError

__all__ = [
    "DomainError",
    "EvalResult",
    "QuadratureError",
    "VerificationRecord",
    "ZetalineError",
    "__version__",
]
