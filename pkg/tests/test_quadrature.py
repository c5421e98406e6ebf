"""Quadrature engine battery: analytic integrals, tails, contours."""

import math

import numpy as np
import pytest

import grazebeam.quadrature as quad
from grazebeam.errors import ContourError, NonConvergenceError
from grazebeam.quadrature import (DampingProfile, IntegrandSpec, integrate_1d,
                                  integrate_nd, rotated_ray_integral,
                                  truncation_radius)


class TestIntegrate1d:
    def test_gaussian(self):
        res = integrate_1d(IntegrandSpec(lambda u: np.exp(-u*u),
                                         DampingProfile(1.0, 2)), 1e-12)
        assert abs(res.value - math.sqrt(math.pi)) <= 1e-12

    def test_oscillatory_gaussian_closed_form(self):
        # int e^{iku - u^2} du = sqrt(pi) e^{-k^2/4}; k = 5 keeps the result
        # far above the cancellation floor of the O(1) integrand
        k = 5.0
        res = integrate_1d(IntegrandSpec(lambda u: np.exp(1j*k*u - u*u),
                                         DampingProfile(1.0, 2), k), 1e-12)
        exact = math.sqrt(math.pi)*math.exp(-k*k/4.0)
        assert abs(res.value - exact)/exact <= 1e-10

    def test_oscillatory_gaussian_cancellation_floor(self):
        # at k = 20 the true value e^{-100} sits below double-precision
        # cancellation of the O(1) integrand; the absolute floor is what a
        # panel rule can honestly deliver
        k = 20.0
        res = integrate_1d(IntegrandSpec(lambda u: np.exp(1j*k*u - u*u),
                                         DampingProfile(1.0, 2), k), 1e-12)
        assert abs(res.value) <= 1e-13

    def test_quartic_moment_half_line(self):
        res = rotated_ray_integral(
            IntegrandSpec(lambda u: u*np.exp(-u**4), DampingProfile(1.0, 4)),
            0.0, 1e-12, half_line=True)
        from scipy.special import gamma
        assert abs(res.value - gamma(0.5)/4.0) <= 1e-12

    def test_self_consistency_on_halved_tolerance(self):
        spec = IntegrandSpec(lambda u: np.exp(2j*u - u*u)/(1 + u*u),
                             DampingProfile(1.0, 2), 2.0)
        r1 = integrate_1d(spec, 1e-8)
        r2 = integrate_1d(spec, 5e-9)
        assert abs(r1.value - r2.value) <= max(r1.error_estimate, 1e-14)

    def test_determinism(self):
        spec = IntegrandSpec(lambda u: np.exp(1j*7*u - u*u),
                             DampingProfile(1.0, 2), 7.0)
        a = integrate_1d(spec, 1e-10)
        b = integrate_1d(spec, 1e-10)
        assert a.value == b.value and a.error_estimate == b.error_estimate

    def test_nonconvergence_carries_best_estimate(self, monkeypatch):
        monkeypatch.setattr(quad, "_MAX_PANELS", 16)
        spec = IntegrandSpec(lambda u: np.exp(1j*300*u - u*u),
                             DampingProfile(1.0, 2), 1.0)
        with pytest.raises(NonConvergenceError) as err:
            integrate_1d(spec, 1e-12)
        assert err.value.result is not None
        assert err.value.result.converged is False


class TestIntegrateNd:
    def test_product_gaussian(self):
        spec = IntegrandSpec(lambda u, v: np.exp(-u*u - v*v),
                             (DampingProfile(1.0, 2), DampingProfile(1.0, 2)))
        res = integrate_nd(spec, 2, 1e-10)
        assert abs(res.value - math.pi) <= 1e-10

    def test_damped_fresnel_vs_closed_form(self):
        # int int e^{i(u^2+v^2)} e^{-(u^2+v^2)/10} du dv = pi/(1/10 - i)
        spec = IntegrandSpec(
            lambda u, v: np.exp((1j - 0.1)*(u*u + v*v)),
            (DampingProfile(0.1, 2), DampingProfile(0.1, 2)),
            oscillation_scale=14.0)
        res = integrate_nd(spec, 2, 1e-9)
        exact = math.pi/(0.1 - 1j)
        assert abs(res.value - exact)/abs(exact) <= 1e-8


class TestTruncationRadius:
    def test_gaussian_radius_near_six(self):
        r = truncation_radius(1.0, 2, 1e-16)
        assert 5.6 <= r <= 6.6
        # the analytic tail bound the radius is built from must hold
        from scipy.special import erfc
        assert math.sqrt(math.pi)*erfc(r) <= 1e-16

    def test_quartic_radius(self):
        r = truncation_radius(1.0/32.0, 4, 1e-12)
        assert 4.8 <= r <= 6.5
        # numeric tail against the reported radius
        u = np.linspace(r, r + 6.0, 20001)
        tail = 2.0*np.trapezoid(np.exp(-u**4/32.0), u)
        assert tail <= 1e-12

    def test_monotone_in_coefficient(self):
        assert (truncation_radius(2.0, 2, 1e-12)
                < truncation_radius(1.0, 2, 1e-12))

    def test_tail_inequality_random(self):
        rng = np.random.default_rng(11)
        for _ in range(10):
            a = float(rng.uniform(0.05, 3.0))
            p = int(rng.choice([2, 4]))
            tol = float(10.0**rng.uniform(-14, -6))
            r = truncation_radius(a, p, tol)
            u = np.linspace(r, r*3 + 10, 40001)
            tail = 2.0*np.trapezoid(np.exp(-a*u**p), u)
            assert tail <= tol*1.0000001


class TestRotatedRay:
    def test_airy_defining_integral(self):
        # int e^{iu^3/3} du over the line equals 2 pi Ai(0) via the rays
        # arg = pi/6 and 5 pi/6 (cubic decay along both)
        from grazebeam.airy import airy_ai
        spec = IntegrandSpec(lambda w: np.exp(1j*w**3/3.0),
                             DampingProfile(1.0/3.0, 3))
        res = rotated_ray_integral(spec, np.pi/6.0, 1e-10)
        assert abs(res.value - 2.0*np.pi*airy_ai(0.0).value) <= 1e-8

    def test_quartic_moment_rotated_matches_formula(self):
        from grazebeam.grazing import quartic_moment
        b = np.exp(1j*np.pi/4)
        # u = e^{-i pi/16} s makes b u^4 positive real
        th = -np.pi/16.0
        spec = IntegrandSpec(lambda w: w*np.exp(-b*w**4),
                             DampingProfile(1.0, 4))
        res = rotated_ray_integral(spec, th, 1e-10, half_line=True)
        assert abs(res.value - quartic_moment(b)) <= 1e-8

    def test_angle_zero_reduces_to_line(self):
        spec = IntegrandSpec(lambda w: np.exp(-w*w + 0j),
                             DampingProfile(1.0, 2))
        line = integrate_1d(IntegrandSpec(lambda u: np.exp(-u*u + 0j),
                                          DampingProfile(1.0, 2)), 1e-12)
        rot = rotated_ray_integral(spec, 0.0, 1e-12)
        assert abs(rot.value - line.value) <= 1e-12

    def test_growth_raises_contour_error(self):
        spec = IntegrandSpec(lambda w: np.exp(w.real**2 + 0j),
                             DampingProfile(0.5, 2))
        with pytest.raises(ContourError):
            rotated_ray_integral(spec, 0.1, 1e-8)
