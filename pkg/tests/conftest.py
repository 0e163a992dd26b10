import math

import pytest

from zetaline import constants as C


@pytest.fixture(scope="session")
def nu_minus_one_closed():
    return C.KAPPA1 + math.pi**2 / 12 - C.EULER_GAMMA**2 / 2 - C.STIELTJES_GAMMA1
