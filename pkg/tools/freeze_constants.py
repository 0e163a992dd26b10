"""Recompute the digit strings stored in zetaline/constants.py.

Independent oracle (mpmath, 45 significant digits). kappa1 is obtained from
the digamma-integral identity

    kappa1 = int_0^1 (psi(x+1) + gamma)/x dx - pi^2/12 + gamma^2/2 + gamma_1

so its digits do not depend on any external table.
"""

import mpmath as mp

mp.mp.dps = 45

gamma = mp.euler
gamma1 = mp.stieltjes(1)
psi_int = mp.quad(lambda x: (mp.digamma(x + 1) + gamma) / x, [0, 0.5, 1])

rows = {
    "euler_gamma": gamma,
    "glaisher_A": mp.exp(mp.mpf(1) / 12 - mp.zeta(-1, derivative=1)),
    "stieltjes_gamma1": gamma1,
    "kappa1": psi_int - mp.pi**2 / 12 + gamma**2 / 2 + gamma1,
    "ln_two_pi": mp.log(2 * mp.pi),
    "pi_sq_over_6": mp.pi**2 / 6,
}

if __name__ == "__main__":
    for name, val in rows.items():
        print(f"{name:18s} {mp.nstr(val, 40)}")
