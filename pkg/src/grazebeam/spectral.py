"""Airy-quotient representation of the wave reflected by the boundary x = 0.

For boundary data f on x = 0 the solution of (1+x) u_tt = u_xx + u_yy with
u = 0 for t << 0 is

    w(x, y, t) = (2 pi)^{-2} int e^{i(y eta + t tau)}
                 Ai(zeta(x, eta, tau)) / Ai(zeta(0, eta, tau))
                 fhat(eta, tau) d eta d tau,

with zeta = beta (1 + x - eta^2/tau^2), beta^3 = -tau^2 and the branch of
beta fixed by boundedness in Im tau < 0.  This module provides zeta and its
branch bookkeeping, the boundary transform fhat of the beam trace (both
with the beam frame frozen at y = 0 and with the full frame), the
four-variable phase and amplitude of the oscillatory-integral form obtained
after stretching (eta, tau) = k (mu, nu) and inverting Ai through the
constant Wronskian, and a direct numerical evaluation of w from the
three-fold (z, mu, nu) representation.  The direct evaluation is the
top-level oracle against which the asymptotic routes are checked.

Convention: fractional powers of the negative variable nu are taken as
powers of |nu| = -nu, analytically continued to complex nu near -1 through
principal powers of (-nu).  :func:`neg_power` owns this rule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special as sp

from . import airy
from .errors import BranchError, DomainError
from .quadrature import (DampingProfile, IntegrandSpec, QuadratureResult,
                         integrate_1d, truncation_radius)

__all__ = [
    "SpectralCoords",
    "ZetaValue",
    "airy_quotient",
    "amplitude_Z",
    "boundary_exponent_frozen",
    "boundary_exponent_full",
    "boundary_hat_frozen",
    "boundary_hat_full",
    "boundary_prefactor_full",
    "exact_solution",
    "neg_power",
    "phase_full",
    "reciprocal_airy_factor",
    "zeta",
    "zeta_power_3_2",
    "zeta_scaled",
]

_OMEGA = airy.OMEGA


def neg_power(nu, alpha: float):
    """|nu|^alpha for real nu < 0, continued as (-nu)^alpha (principal) off axis."""
    return np.asarray(-nu, dtype=complex)**alpha if np.ndim(nu) else (-nu + 0j)**alpha


@dataclass(frozen=True)
class SpectralCoords:
    """Stretched frequency variables (mu, nu), with s = mu + nu and k > 0."""

    mu: float
    nu: float
    k: float
    T: float = 0.0

    def __post_init__(self):
        if self.k <= 0:
            raise ValueError("k must be positive")

    @property
    def s(self) -> float:
        return self.mu + self.nu


@dataclass(frozen=True)
class ZetaValue:
    """zeta together with the branch factor beta that produced it."""

    value: complex
    branch_factor: complex
    regime: str  # "exact-branch" or "scaled-near-nu=-1"


def zeta(x: float, eta: float, tau: float) -> ZetaValue:
    """zeta(x, eta, tau) = beta (1 + x - eta^2/tau^2) on the bounded branch.

    beta = |tau|^{2/3} e^{+i pi/3} for tau > 0 and |tau|^{2/3} e^{-i pi/3}
    for tau < 0, so that Re beta^{3/2} >= 0 and the Airy quotient stays
    bounded for x > 0.
    """
    if tau == 0:
        raise DomainError("tau = 0: zeta undefined")
    beta = abs(tau)**(2.0/3.0)*np.exp(1j*np.pi/3.0*np.sign(tau))
    return ZetaValue(beta*(1.0 + x - eta*eta/(tau*tau)), beta, "exact-branch")


def zeta_scaled(x: float, mu: float, nu: float, k: float) -> ZetaValue:
    """zeta at the stretched arguments (k mu, k nu) for nu < 0.

    Identical in value to ``zeta(x, k*mu, k*nu)``; tagged with the scaled
    regime so the 3/2-power below may use the |nu| convention.
    """
    if nu >= 0:
        raise DomainError("scaled regime requires nu < 0")
    if k <= 0:
        raise ValueError("k must be positive")
    beta = (abs(nu)*k)**(2.0/3.0)*np.exp(-1j*np.pi/3.0)
    return ZetaValue(beta*(1.0 + x - mu*mu/(nu*nu)), beta, "scaled-near-nu=-1")


def zeta_power_3_2(z: ZetaValue) -> complex:
    """zeta^{3/2} with (nu^{2/3})^{3/2} = |nu|, for the scaled regime.

    Concretely |nu| k e^{-i pi/2} (1 + x - mu^2/nu^2)^{3/2} with the
    positive real root of the radicand; raises :class:`BranchError` when
    the radicand is negative.
    """
    if z.regime != "scaled-near-nu=-1":
        raise DomainError("zeta_power_3_2 is defined for the scaled regime")
    rad = (z.value/z.branch_factor).real
    if rad < 0:
        raise BranchError("1 + x - mu^2/nu^2 < 0: 3/2-power on the cut")
    scale = abs(z.branch_factor)**1.5  # = |nu| k
    return scale*np.exp(-0.5j*np.pi)*rad**1.5


def airy_quotient(x, mu, nu, k: float):
    """Ai(zeta(x, k mu, k nu)) / Ai(zeta(0, k mu, k nu)), array-safe and stable.

    Uses exponentially scaled Airy values so the quotient stays
    representable when both numerator and denominator grow beyond double
    range (large |zeta| with mu^2 > nu^2).
    """
    mu = np.asarray(mu, dtype=float)
    nu = np.asarray(nu, dtype=float)
    if np.any(nu >= 0):
        raise DomainError("airy_quotient is implemented for nu < 0")
    beta = (np.abs(nu)*k)**(2.0/3.0)*np.exp(-1j*np.pi/3.0)
    zx = beta*(1.0 + x - (mu/nu)**2)
    z0 = beta*(1.0 - (mu/nu)**2)
    eax = sp.airye(zx)[0]
    ea0 = sp.airye(z0)[0]
    # airye scales by exp((2/3) z^{3/2}) on the principal branch
    expo = (2.0/3.0)*(zx*np.sqrt(zx) - z0*np.sqrt(z0))
    return eax/ea0*np.exp(-expo)


# ---------------------------------------------------------------------------
# boundary data
# ---------------------------------------------------------------------------

def _frame_entries(z):
    """Vectorized closed-form beam-frame entries M11, M12, M22, a along y = z."""
    z = np.asarray(z, dtype=float)
    D = 1.0 + z*z + 0.25j*z**3
    m11 = 1j*(1.0 - 1j*z + z*z + 0.25j*z**3)/D
    m12 = 1j*(-z - 0.5j*z*z)/D
    m22 = 1j*(1.0 + 1j*z)/D
    return m11, m12, m22, D**-0.5


def boundary_hat_frozen(eta: float, tau: float, k: float,
                        tol: float = 1e-8) -> float | complex:
    """Transform of the beam trace with the frame frozen at its vertex value.

    Evaluates (2 pi / k)^{1/2} int e^{-i z eta}
    exp[-i tau (z + z^3/12) - i k z^3/8 - k z^4/32 - (tau + k)^2/(2k)] dz
    by damped adaptive quadrature (relative tolerance ``tol``).
    """
    if k <= 0:
        raise ValueError("k must be positive")
    gauss = math.exp(-(tau + k)**2/(2.0*k))
    radius = truncation_radius(k/32.0, 4, tol/10.0)
    osc = abs(eta) + abs(tau)*(1.0 + radius**2/4.0) + 3.0*k*radius**2/8.0

    def f(z):
        return np.exp(-1j*z*eta - 1j*tau*(z + z**3/12.0)
                      - 1j*k*z**3/8.0 - k*z**4/32.0)

    res = integrate_1d(IntegrandSpec(f, DampingProfile(k/32.0, 4), osc), tol)
    return math.sqrt(2.0*math.pi/k)*gauss*res.value


def boundary_exponent_frozen(z, mu, nu):
    """Frozen-frame boundary exponent rho with (eta, tau) = k (mu, nu).

    rho = nu t(z) + mu z + z^3/8 - i z^4/32 - i (nu + 1)^2 / 2, the
    integrand of the frozen transform being e^{-i k rho}.
    """
    z = np.asarray(z, dtype=float)
    return (nu*(z + z**3/12.0) + mu*z + z**3/8.0 - 1j*z**4/32.0
            - 0.5j*(nu + 1.0)**2)


def boundary_exponent_full(z, mu, nu):
    """Full-frame boundary exponent using the y-dependent beam matrix.

    rho = nu t(z) + mu z + z^3/8 - z^4 M11(z)/32
          + (nu + 1 + z^2 M12(z)/4)^2 / (2 M22(z)).

    At nu = -1 the difference from the frozen exponent is O(z^5); the
    vertex entries M(0) = i I reduce it to the frozen form at z = 0.
    """
    z = np.asarray(z, dtype=float)
    m11, m12, m22, _ = _frame_entries(z)
    return (nu*(z + z**3/12.0) + mu*z + z**3/8.0 - z**4*m11/32.0
            + (nu + 1.0 + z*z*m12/4.0)**2/(2.0*m22))


def boundary_prefactor_full(z, k: float):
    """Amplitude factor (2 pi / (-i k M22(z)))^{1/2} a(z) of the full transform.

    Scaled by k^{1/2} it deviates from (2 pi)^{1/2} by O(z).
    """
    _, _, m22, a = _frame_entries(z)
    return np.sqrt(2.0*np.pi/(-1j*k*m22))*a


def boundary_hat_full(eta: float, tau: float, k: float,
                      tol: float = 1e-8) -> complex:
    """Boundary transform with the full y-dependent frame and amplitude."""
    if k <= 0:
        raise ValueError("k must be positive")
    mu, nu = eta/k, tau/k
    radius = truncation_radius(0.7*k/32.0, 4, tol/10.0)
    osc = (abs(eta) + abs(tau)*(1.0 + radius**2/4.0) + 3.0*k*radius**2/8.0)

    def f(z):
        return (boundary_prefactor_full(z, k)
                * np.exp(-1j*k*boundary_exponent_full(z, mu, nu)))

    res = integrate_1d(IntegrandSpec(f, DampingProfile(0.7*k/32.0, 4), osc),
                       tol)
    return res.value


# ---------------------------------------------------------------------------
# stretched four-variable phase and amplitude
# ---------------------------------------------------------------------------

def phase_full(t: float, x: float, y: float, z: float,
               mu: float, nu: float, T: float) -> complex:
    """The stretched phase Phi(t, x, y, z, mu, nu, T).

    Phi = (y - z) mu + t nu - nu (z + z^3/12) - z^3/8
          + i [z^4/32 + (nu + 1)^2/2]
          + (2|nu|/3)(1 + x - mu^2/nu^2)^{3/2}
          - |nu|^{2/3}(1 - mu^2/nu^2) T + T^3/3,

    for nu < 0 and 1 + x - mu^2/nu^2 >= 0 (so the 3/2-power is real).
    """
    if nu >= 0:
        raise DomainError("phase requires nu < 0")
    rad = 1.0 + x - mu*mu/(nu*nu)
    if rad < 0:
        raise DomainError(
            "radicand 1 + x - mu^2/nu^2 = %.3g is negative" % rad)
    anu = -nu
    return ((y - z)*mu + t*nu - nu*(z + z**3/12.0) - z**3/8.0
            + 1j*(z**4/32.0 + (nu + 1.0)**2/2.0)
            + (2.0*anu/3.0)*rad**1.5
            - anu**(2.0/3.0)*(1.0 - mu*mu/(nu*nu))*T + T**3/3.0)


def reciprocal_airy_factor(T, mu: float, nu: float, k: float):
    """Integrand factor i k^{1/3} T - omega Ai'/Ai(zeta(0, k mu, k nu)).

    Integrated against e^{i k [-|nu|^{2/3}(1 - mu^2/nu^2) T + T^3/3]} k^{1/3}
    dT / (2 pi W(0)) this reproduces 1/Ai(zeta(0, k mu, k nu)); the factor
    itself is what multiplies the amplitude of the reflected-wave integral.
    """
    z0 = zeta_scaled(0.0, mu, nu, k).value
    ratio = airy.airy_ratio(z0)
    return 1j*k**(1.0/3.0)*np.asarray(T) - _OMEGA*ratio if np.ndim(T) \
        else 1j*k**(1.0/3.0)*T - _OMEGA*ratio


def amplitude_Z(k: float, x: float, mu, nu, T):
    """Leading amplitude Z(k, x, mu, nu, T) of the four-fold representation.

    Z = k^{11/6} / (sqrt(2) (2 pi)^3 W(0))
        * (i k^{1/3} T - omega Ai'/Ai(zeta(0, k mu, k nu)))
        * zeta(x, k mu, k nu)^{-1/4},

    without the O(k^{-1}) correction.  ``mu``, ``nu``, ``T`` may be complex
    near the steepest-descent point nu = -1 + iC; the |nu| powers continue
    via :func:`neg_power`.
    """
    if k <= 0:
        raise ValueError("k must be positive")
    beta = k**(2.0/3.0)*neg_power(nu, 2.0/3.0)*np.exp(-1j*np.pi/3.0)
    ratio_sq = np.asarray(mu)**2/np.asarray(nu)**2
    z0 = beta*(1.0 - ratio_sq)
    zx = beta*(1.0 + x - ratio_sq)
    front = k**(11.0/6.0)/(np.sqrt(2.0)*(2.0*np.pi)**3*airy.WRONSKIAN_ZERO)
    return front*(1j*k**(1.0/3.0)*np.asarray(T)
                  - _OMEGA*airy.airy_ratio(z0))*zx**-0.25


# ---------------------------------------------------------------------------
# direct evaluation of the reflected wave (the oracle)
# ---------------------------------------------------------------------------

def _window_rates(x, y, t, k, z_max, s_lo, s_hi, nu_half):
    """Sampled maxima of the phase gradients over the integration box."""
    zg = np.linspace(-z_max, z_max, 9)
    sg = np.linspace(s_lo, s_hi, 9)
    ng = np.linspace(-1.0 - nu_half, -1.0 + nu_half, 9)
    Z, S, N = np.meshgrid(zg, sg, ng, indexing="ij")
    MU = S - N
    m2 = (MU/N)**2
    gx = np.sqrt(np.maximum(1.0 + x - m2, 0.0))
    g0 = np.sqrt(np.maximum(1.0 - m2, 0.0))
    rate_z = np.abs(-S - N*Z*Z/4.0 - 3.0*Z*Z/8.0)
    rate_s = np.abs(y - Z - (2.0*MU/N)*(gx - g0))
    # d/dnu of the quotient phase at fixed s (chain through mu and m)
    h = 1e-5
    def qphase(nn, ss):
        mm = (ss - nn)/nn
        ax = np.maximum(1.0 + x - mm*mm, 0.0)**1.5
        a0 = np.maximum(1.0 - mm*mm, 0.0)**1.5
        return (2.0*(-nn)/3.0)*(ax - a0)
    dq = (qphase(N + h, S) - qphase(N - h, S))/(2.0*h)
    rate_nu = np.abs(t - (Z + Z**3/12.0) - y + dq) + np.abs(N + 1.0)
    return float(rate_z.max()), float(rate_s.max()), float(rate_nu.max())


def _axis_nodes(lo, hi, rate_per_unit, k, max_panels=700):
    """Kronrod nodes/weights (K and G variants) tiling [lo, hi]."""
    from .quadrature import _NODES, _WG_FULL, _WK_FULL
    cycles = (hi - lo)*rate_per_unit*k/(2.0*math.pi)
    n_panels = int(np.clip(math.ceil(cycles/1.5) + 2, 4, max_panels))
    edges = np.linspace(lo, hi, n_panels + 1)
    half = 0.5*np.diff(edges)
    mid = 0.5*(edges[:-1] + edges[1:])
    nodes = (mid[:, None] + half[:, None]*_NODES[None, :]).ravel()
    wk = (half[:, None]*_WK_FULL[None, :]).ravel()
    wg = (half[:, None]*_WG_FULL[None, :]).ravel()
    return nodes, wk, wg, n_panels


def exact_solution(x: float, y: float, t: float, k: float,
                   tol: float = 0.02, data_scale: float = 1.0) -> QuadratureResult:
    """Evaluate the reflected wave from its three-fold representation.

    Integrates (k/2 pi)^{3/2} times the (z, s, nu) integrand
    e^{i k Phi} Ai(zeta(x))/Ai(zeta(0)) with s = mu + nu, using the exact
    Airy quotient (no asymptotic substitutions).  Truncation windows come
    from the explicit Gaussian factors e^{-k z^4/32} and e^{-k (nu+1)^2/2};
    the s window covers the stationary set of the phase with a fixed pad,
    outside of which the phase is uniformly non-stationary.  Tensor-product
    Kronrod panels are used on all three axes with per-axis embedded-Gauss
    error estimates; if the summed estimate exceeds ``tol`` relative the
    result is returned flagged (``converged=False``) rather than raised.

    ``data_scale`` multiplies the boundary data; the representation is
    linear in it, so the result scales exactly.
    """
    if x <= 0:
        raise DomainError("the representation is evaluated in x > 0")
    if k <= 0:
        raise ValueError("k must be positive")
    tail = 1e-8
    z_max = (32.0*math.log(1.0/tail)/k)**0.25
    nu_half = math.sqrt(2.0*math.log(1.0/tail)/k)

    # s-window from the stationary set s* = nu (1 + r(x, y - z)) over the
    # damped part of the z-window (admissible y - z only)
    from .stationary import root_r
    span_lo = max(1e-6, y - 0.85*z_max)
    span_hi = min(y + 0.85*z_max, 2.0*math.sqrt(1.0 + x)*(1.0 - 1e-12))
    spans = np.linspace(span_lo, span_hi, 41)
    rvals = np.array([root_r(x, sp_, 0.0) for sp_ in spans])
    s_star = np.concatenate([(-1.0 - nu_half)*(1.0 + rvals),
                             (-1.0 + nu_half)*(1.0 + rvals)])
    pad = 0.2
    s_lo, s_hi = float(s_star.min() - pad), float(s_star.max() + pad)

    rate_z, rate_s, rate_nu = _window_rates(x, y, t, k, z_max, s_lo, s_hi,
                                            nu_half)
    zn, wzk, wzg, pz = _axis_nodes(-z_max, z_max, rate_z, k)
    sn, wsk, wsg, ps = _axis_nodes(s_lo, s_hi, rate_s, k)
    nn, wnk, wng, pn = _axis_nodes(-1.0 - nu_half, -1.0 + nu_half, rate_nu, k,
                                   max_panels=400)

    # phase split: e^{ik Phi} = Pnu(nu) * FZ(nu,z) * K0(z,s) * FS(nu,s)
    K0 = np.exp(-1j*k*np.outer(zn, sn))
    z3 = zn**3
    FZ = np.exp(1j*k*(-np.outer(nn, z3)/12.0 - z3[None, :]/8.0
                      + 1j*zn[None, :]**4/32.0))
    MU = sn[None, :] - nn[:, None]
    FS = (airy_quotient(x, MU, np.broadcast_to(nn[:, None], MU.shape), k)
          * np.exp(1j*k*y*MU))
    Pnu = np.exp(1j*k*(t*nn + 0.5j*(nn + 1.0)**2))

    EK = (FZ*wzk[None, :]) @ K0
    EG = (FZ*wzg[None, :]) @ K0

    def contract(E, ws, wn):
        return np.einsum("ij,ij,j,i->", E, FS, ws, wn*Pnu)

    v_kkk = contract(EK, wsk, wnk)
    v_gkk = contract(EG, wsk, wnk)
    v_kgk = contract(EK, wsg, wnk)
    v_kkg = contract(EK, wsk, wng)

    pref = data_scale*(k/(2.0*math.pi))**1.5
    value = pref*v_kkk
    err = pref*(abs(v_kkk - v_gkk) + abs(v_kkk - v_kgk) + abs(v_kkk - v_kkg))
    converged = err <= tol*(1.0 + abs(value))
    return QuadratureResult(complex(value), float(err), z_max,
                            pz*ps*pn, bool(converged))
