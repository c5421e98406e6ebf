"""Shared oracles: high-precision Airy series, ODE integrators, FD stencils.

The oracles deliberately avoid the code paths they check: the Airy oracle
sums the Maclaurin series in 40-digit arithmetic from the exact gamma
constants, and the flow oracles integrate the defining ODEs with a
classical fixed-step scheme.
"""

import mpmath as mp
import numpy as np
import pytest


def series_airy(z, dps=40, min_terms=40, max_terms=400):
    """(Ai(z), Ai'(z)) by Maclaurin series at high precision.

    Coefficients follow a_n = a_{n-3} / (n (n-1)) from the ODE w'' = z w,
    seeded with the exact constants Ai(0) = 3^{-2/3}/Gamma(2/3) and
    Ai'(0) = -3^{-1/3}/Gamma(1/3).
    """
    with mp.workdps(dps):
        zm = mp.mpc(z)
        coeffs = [mp.mpf(3)**mp.mpf("-2/3")/mp.gamma(mp.mpf("2/3")),
                  -mp.mpf(3)**mp.mpf("-1/3")/mp.gamma(mp.mpf("1/3")),
                  mp.mpf(0)]
        eps = mp.mpf(10)**(-dps - 8)
        val = mp.mpc(0)
        der = mp.mpc(0)
        zn = mp.mpc(1)       # z^n
        znm1 = mp.mpc(0)     # z^(n-1)
        recent = [mp.inf, mp.inf, mp.inf]
        n = 0
        while n < max_terms:
            if n >= 3:
                coeffs.append(coeffs[n - 3]/(n*(n - 1)))
            term = coeffs[n]*zn
            val += term
            if n >= 1:
                der += n*coeffs[n]*znm1
            recent[n % 3] = abs(term)
            # every third coefficient vanishes, so require a full window
            if n > min_terms and max(recent) < eps*(1 + abs(val)):
                break
            znm1 = zn
            zn = zn*zm
            n += 1
        return complex(val), complex(der)


def rk4(rhs, y0, state0, y1, nsteps):
    """Classical fixed-step RK4 over complex state vectors."""
    state = np.asarray(state0, dtype=complex)
    h = (y1 - y0)/nsteps
    y = y0
    for _ in range(nsteps):
        k1 = rhs(y, state)
        k2 = rhs(y + h/2, state + h/2*k1)
        k3 = rhs(y + h/2, state + h/2*k2)
        k4 = rhs(y + h, state + h*k3)
        state = state + h/6*(k1 + 2*k2 + 2*k3 + k4)
        y += h
    return state


def reduced_flow_rhs(y, s):
    """The reduced bicharacteristic system (eta = 1): state (x, t, xi, tau)."""
    x, t, xi, tau = s
    return np.array([xi, -tau*(1.0 + x), tau*tau/2.0, 0.0], dtype=complex)


@pytest.fixture(scope="session")
def airy_series_oracle():
    return series_airy
