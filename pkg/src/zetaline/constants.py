"""Named mathematical constants, stored as decimal literals.

Digits beyond the printed prefixes were frozen with ``tools/freeze_constants.py``
(mpmath at 45 digits); see the README for the procedure. Nothing here is
computed at import time from the toolkit's own numerics.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

Provenance = Literal["paper-digits", "derived-by-oracle"]


@dataclass(frozen=True)
class NamedConstant:
    name: str
    digits: str
    provenance: Provenance
    description: str

    @property
    def value(self) -> float:
        return float(self.digits)


_TABLE = (
    NamedConstant(
        "euler_gamma",
        "0.577215664901532860606512090082402431042",
        "derived-by-oracle",
        "Euler's constant",
    ),
    NamedConstant(
        "glaisher_A",
        "1.28242712910062263687534256886979172776769",
        "paper-digits",
        "Glaisher-Kinkelin constant exp(1/12 - zeta'(-1))",
    ),
    NamedConstant(
        "stieltjes_gamma1",
        "-0.0728158454836767248605863758749013191377",
        "paper-digits",
        "first Stieltjes constant",
    ),
    NamedConstant(
        "kappa1",
        "0.529052969940439024072293939475589728094",
        "paper-digits",
        "Gregory-coefficient constant (OEIS A270859)",
    ),
    NamedConstant(
        "ln_two_pi",
        "1.83787706640934548356065947281123527972",
        "derived-by-oracle",
        "log(2 pi)",
    ),
    NamedConstant(
        "pi_sq_over_6",
        "1.64493406684822643647241516664602518922",
        "derived-by-oracle",
        "pi^2/6 = zeta(2)",
    ),
)

CONSTANTS: dict[str, NamedConstant] = {c.name: c for c in _TABLE}

# leading digits as printed alongside the corollary identities
PRINTED_PREFIXES = {
    "glaisher_A": "1.282427129",
    "stieltjes_gamma1": "-0.07281584548",
    "kappa1": "0.5290529699",
}

EULER_GAMMA = CONSTANTS["euler_gamma"].value
GLAISHER_A = CONSTANTS["glaisher_A"].value
STIELTJES_GAMMA1 = CONSTANTS["stieltjes_gamma1"].value
KAPPA1 = CONSTANTS["kappa1"].value
LN_TWO_PI = CONSTANTS["ln_two_pi"].value
PI_SQ_OVER_6 = CONSTANTS["pi_sq_over_6"].value


def get_constant(name: str) -> float:
    try:
        return CONSTANTS[name].value
    except KeyError:
        raise KeyError(f"unknown constant: {name!r}") from None


def constant_table() -> list[dict]:
    return [
        {"name": c.name, "value": c.value, "digits": c.digits, "provenance": c.provenance}
        for c in _TABLE
    ]
