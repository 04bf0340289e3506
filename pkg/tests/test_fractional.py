"""Fractional-derivative contract: defining integral, order shifting,
closed forms, and the built-in test-function models."""

import math

import numpy as np
import pytest

from summa._quad import integrate_00_inf
from summa.fractional import (builtin_test_functions, frac_deriv,
                              gaussian_frac_closed)

SQRT_PI_OVER_2 = math.sqrt(math.pi / 2.0)


def test_value_at_zero_is_function_value(gaussian):
    r = frac_deriv(gaussian, 0.0)
    assert r.value == pytest.approx(1.0, abs=1e-15)


def test_first_antiderivative(gaussian):
    r = frac_deriv(gaussian, -1.0)
    assert r.value.real == pytest.approx(SQRT_PI_OVER_2, abs=1e-12)
    assert r.quadrature_error_estimate < 1e-11


def test_complex_order_matches_closed_form(gaussian):
    s = -(0.5 + 1.0j)
    got = frac_deriv(gaussian, s).value
    want = gaussian_frac_closed(0.5 + 1.0j)
    assert abs(got - want) <= 1e-11


def test_integer_orders_route_to_derivatives(gaussian):
    for k in range(7):
        r = frac_deriv(gaussian, float(k))
        assert abs(r.value - gaussian.deriv_at_0(k)) <= 1e-9
        assert r.quadrature_error_estimate == 0.0
    # just off the integer lattice the quadrature path must agree too
    r = frac_deriv(gaussian, 2.0 + 1e-9)
    assert abs(r.value - gaussian.deriv_at_0(2)) <= 1e-7


def test_shift_identity_consistency(gaussian):
    rng = np.random.default_rng(2024)
    for _ in range(50):
        s = complex(rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0))
        if abs(s.imag) < 1e-6 and abs(s.real - round(s.real)) < 1e-6:
            s += 0.25
        n0 = max(1, int(math.ceil(s.real)) + 2)
        a = frac_deriv(gaussian, s, shift_order=n0).value
        b = frac_deriv(gaussian, s, shift_order=n0 + 1).value
        assert abs(a - b) <= 1e-9


def test_closed_form_agreement_grid(gaussian):
    rng = np.random.default_rng(7)
    for _ in range(30):
        s = complex(rng.uniform(-3.0, 3.0), rng.uniform(-2.0, 2.0))
        got = frac_deriv(gaussian, -s).value
        assert abs(got - gaussian_frac_closed(s)) <= 1e-9


def test_gaussian_frac_closed_values():
    assert gaussian_frac_closed(1.0).real == pytest.approx(SQRT_PI_OVER_2, rel=1e-14)
    assert gaussian_frac_closed(2.0).real == pytest.approx(1.0, rel=1e-14)
    # limits at the Gamma-pole lattice: F(0) and the even derivatives
    assert gaussian_frac_closed(0.0).real == pytest.approx(1.0, abs=1e-12)
    assert gaussian_frac_closed(-2.0).real == pytest.approx(-1.0, abs=1e-12)
    assert abs(gaussian_frac_closed(-1.0)) <= 1e-12


def test_fourier_transform_order_relation(gaussian):
    # Fhat^(-s)(0) = 2 cos(pi s/2) Gamma(1-s) F^(s-1)(0) for the Gaussian
    from summa.special_functions import gamma

    rng = np.random.default_rng(11)
    sq2pi = math.sqrt(2.0 * math.pi)
    for _ in range(40):
        s = complex(rng.uniform(-3.0, 0.9), rng.uniform(-2.0, 2.0))
        lhs = sq2pi * gaussian_frac_closed(s)
        rhs = (2.0 * np.cos(0.5 * np.pi * s) * gamma(1.0 - s)
               * gaussian_frac_closed(1.0 - s))
        assert abs(lhs - rhs) <= 1e-8 * (1.0 + abs(lhs))


def test_builtins_are_even_and_normalised():
    for F in builtin_test_functions():
        ts = np.linspace(0.0, 2.5, 11)
        assert np.allclose(F.value(ts), F.value(-ts), rtol=0, atol=1e-15)
        for k in (1, 3, 5):
            assert F.deriv_at_0(k) == pytest.approx(0.0, abs=1e-12)
        # fourier(0) = 2 * integral of F over the half line
        half, _ = integrate_00_inf(lambda u, F=F: F.value(u) + 0j, tol=1e-12)
        assert float(np.asarray(F.fourier(0.0))) == pytest.approx(
            2.0 * half.real, abs=1e-10)


def test_gaussian_fourier_self_dual(gaussian):
    assert float(np.asarray(gaussian.fourier(0.0))) == pytest.approx(
        math.sqrt(2.0 * math.pi), rel=1e-14)
    # Taylor coefficients F^(2n)(0)/(2n)! = (-1)^n / (2^n n!)
    for n in range(0, 8):
        got = gaussian.deriv_at_0(2 * n) / math.factorial(2 * n)
        assert got == pytest.approx((-1.0) ** n / (2.0 ** n * math.factorial(n)),
                                    rel=1e-13)


def test_sech_square_model(sech_square):
    assert sech_square.value(0.0) == 1.0
    assert sech_square.deriv_at_0(2) == pytest.approx(-2.0, rel=1e-13)
    r = frac_deriv(sech_square, -1.0)  # integral of sech^2 = tanh -> 1
    assert r.value.real == pytest.approx(1.0, abs=1e-11)
    x = np.array([0.5, 2.0])
    ref = np.pi * x / np.sinh(0.5 * np.pi * x)
    assert np.allclose(np.asarray(sech_square.fourier(x)), ref, rtol=1e-13)


def test_bump_model(bump):
    assert bump.value(0.0) == 1.0
    assert bump.value(3.5) == 0.0
    assert bump.deriv_fn(1, np.array([2.9999]))[0] == pytest.approx(0.0, abs=1e-4)
    r = frac_deriv(bump, -0.5)
    assert r.quadrature_error_estimate < 1e-10


def test_shift_order_validation(gaussian):
    with pytest.raises(ValueError):
        frac_deriv(gaussian, 2.5, shift_order=2)
