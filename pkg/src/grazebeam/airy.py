"""Complex Airy function kernel: Ai, its rotation Ai(omega*z), and Ai'/Ai.

Everything downstream (the spectral quotient, the reciprocal Wronskian
factor, the grazing-amplitude integrals) reduces to three ingredients:

* Ai and Ai' on a bounded disk |z| <= R_MAX, evaluated by the AMOS library
  through scipy (relative accuracy ~1e-13 there, including the sector near
  the positive real axis where Ai is maximally subdominant and series
  summation in double precision cannot reach 1e-10);
* the large-|z| asymptotic form with its correction series, valid in the
  sector |arg z| < pi - delta;
* the logarithmic derivative Ai'/Ai, which the pipeline evaluates on the
  ray arg z = -pi/3 where Ai has no zeros, switching to the differentiated
  asymptotic series above a crossover radius.

The rotated function A(z) = Ai(omega*z) with omega = exp(2*pi*i/3) and the
constant Wronskian W(z) = A(z)Ai'(z) - A'(z)Ai(z) implement the reciprocal
trick used to invert Ai on the boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special as sp

from .errors import DegeneracyError, DomainError

__all__ = [
    "AiryValue",
    "OMEGA",
    "R_MAX",
    "RATIO_CROSSOVER",
    "WRONSKIAN_ZERO",
    "airy_ai",
    "airy_asymptotic",
    "airy_ratio",
    "airy_rotated",
    "wronskian",
]

#: rotation to the second Stokes sector
OMEGA = complex(np.exp(2j*np.pi/3))

#: supported evaluation radius for the direct Ai evaluation
R_MAX = 40.0

#: default switch radius between direct and asymptotic Ai'/Ai
RATIO_CROSSOVER = 16.0

#: exact value of the constant Wronskian, (omega - 1) / (2*pi*sqrt(3))
WRONSKIAN_ZERO = (OMEGA - 1.0)/(2.0*np.pi*np.sqrt(3.0))

# correction coefficients u_n of the asymptotic series, u_0 = 1,
# u_{n+1} = u_n (6n+1)(6n+5) / (72 (n+1))
_U_COEFFS = [1.0]
for _n in range(8):
    _U_COEFFS.append(_U_COEFFS[-1]*(6*_n + 1)*(6*_n + 5)/(72.0*(_n + 1)))
MAX_ASYMPTOTIC_ORDER = len(_U_COEFFS) - 1

# Ai'/Ai ~ -sqrt(z) - 1/(4z) + 5/32 z^{-5/2} - 15/64 z^{-4} + 1105/2048 z^{-11/2}
# (successive powers z^{-3k/2}; from the Riccati equation y' + y^2 = z)
_RATIO_COEFFS = (-0.25, 5.0/32.0, -15.0/64.0, 1105.0/2048.0)

# |scaled Ai| below this flags proximity to a zero of Ai
_ZERO_PROXIMITY = 1e-12


@dataclass(frozen=True)
class AiryValue:
    """Ai (or a rotation of it) together with its derivative."""

    value: complex
    derivative: complex


def _check_radius(z: complex) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError("argument must be finite")
    if abs(z) > R_MAX:
        raise DomainError(
            "|z| = %.3g outside the supported evaluation radius R_MAX = %.3g"
            % (abs(z), R_MAX))
    return z


def airy_ai(z: complex) -> AiryValue:
    """Ai(z) and Ai'(z) for complex z with |z| <= R_MAX."""
    z = _check_radius(z)
    ai, aip, _, _ = sp.airy(z)
    return AiryValue(complex(ai), complex(aip))


def airy_rotated(z: complex) -> AiryValue:
    """A(z) = Ai(omega*z) and A'(z) = omega*Ai'(omega*z)."""
    w = airy_ai(OMEGA*complex(z))
    return AiryValue(w.value, OMEGA*w.derivative)


def wronskian(z: complex) -> complex:
    """A(z)Ai'(z) - A'(z)Ai(z); constant in z (equals WRONSKIAN_ZERO).

    For arg z in (pi/3, pi) both Ai(z) and Ai(omega z) are dominant and the
    direct products cancel to exp(-4|z|^{3/2}/3) of their size, which
    destroys double precision beyond |z| ~ 6.  There the connection formula
    Ai(z) + omega Ai(omega z) + omega^2 Ai(omega^2 z) = 0 rewrites the same
    constant through the pair (omega z, omega^2 z), whose second member is
    recessive:  W = Ai'(omega z) Ai(omega^2 z) - omega Ai(omega z) Ai'(omega^2 z).
    """
    z = complex(z)
    if np.pi/3.0 < np.angle(z) <= np.pi:
        u = airy_ai(OMEGA*z)
        v = airy_ai(OMEGA**2*z)
        return u.derivative*v.value - OMEGA*u.value*v.derivative
    ai = airy_ai(z)
    ro = airy_rotated(z)
    return ro.value*ai.derivative - ro.derivative*ai.value


def airy_asymptotic(z: complex, order: int = 0, delta: float = 1e-2) -> complex:
    """Large-|z| form of Ai with the correction series through ``order``.

    Returns (2 sqrt(pi) z^{1/4})^{-1} exp(-2 z^{3/2}/3) * sum_{n<=order}
    (-1)^n u_n zeta^{-n} with zeta = 2 z^{3/2}/3, on principal branches.
    Valid in the sector |arg z| < pi - delta and for |z| >= 2.
    """
    z = complex(z)
    if order < 0 or order > MAX_ASYMPTOTIC_ORDER:
        raise ValueError("order must be in [0, %d]" % MAX_ASYMPTOTIC_ORDER)
    if abs(z) < 2.0:
        raise DomainError("asymptotic form requires |z| >= 2")
    if abs(np.angle(z)) >= np.pi - delta:
        raise DomainError(
            "arg z = %.3f outside the sector |arg z| < pi - %.3g"
            % (np.angle(z), delta))
    zeta = (2.0/3.0)*z**1.5
    series = sum((-1)**n*_U_COEFFS[n]*zeta**(-n) for n in range(order + 1))
    return np.exp(-zeta)/(2.0*np.sqrt(np.pi)*z**0.25)*series


def _ratio_series(z):
    """Differentiated asymptotic expansion of Ai'/Ai (array-safe)."""
    out = -np.sqrt(z)
    for j, c in enumerate(_RATIO_COEFFS):
        out = out + c*z**(-1.0 - 1.5*j)
    return out


def airy_ratio(z, crossover: float = RATIO_CROSSOVER):
    """Logarithmic derivative Ai'(z)/Ai(z), scalar or elementwise on arrays.

    Below ``crossover`` the ratio is formed directly; above, the
    differentiated asymptotic expansion is used (the two branches agree to
    ~1e-6 at |z| = 9 and ~1e-9 at the default crossover).  Arguments too
    close to a zero of Ai raise :class:`DegeneracyError`; proximity is
    measured on the exponentially scaled modulus so the test is meaningful
    in the decaying sector as well.
    """
    scalar = np.isscalar(z) or np.ndim(z) == 0
    zv = np.atleast_1d(np.asarray(z, dtype=complex))
    out = np.empty_like(zv)
    small = np.abs(zv) < crossover
    if small.any():
        zs = zv[small]
        if np.abs(zs).max() > R_MAX:
            raise DomainError(
                "direct ratio requested beyond R_MAX = %.3g; raise the "
                "crossover only within the supported disk" % R_MAX)
        ai, aip, _, _ = sp.airy(zs)
        eai, _, _, _ = sp.airye(zs)
        if np.any(np.abs(eai) < _ZERO_PROXIMITY):
            raise DegeneracyError(
                "evaluation too close to a zero of Ai (scaled |Ai| < %.1e)"
                % _ZERO_PROXIMITY)
        out[small] = aip/ai
    if (~small).any():
        out[~small] = _ratio_series(zv[~small])
    return complex(out[0]) if scalar else out
