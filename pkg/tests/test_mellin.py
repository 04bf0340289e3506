"""Mellin transform / inversion, the kernel registry, rectangle residue
bookkeeping, and the master-formula interpolation check."""

import math

import numpy as np
import pytest

from summa.errors import PoleOnBoundaryError, TailError
from summa.fractional import gaussian_frac_closed
from summa.mellin import (KERNELS, RectanglePath, VerticalContour, get_kernel,
                          inverse_mellin_line, line_integral, mellin_transform,
                          mother_integrand, mother_line_integral,
                          ramanujan_check, rectangle_quadrature,
                          rectangle_residue_sum)
from summa.special_functions import gamma

SQRT_PI_OVER_2 = math.sqrt(math.pi / 2.0)


def test_kernel_registry_table():
    assert set(KERNELS) == {"identity", "zeta", "zeta_squared", "zeta_L4", "mobius"}
    assert get_kernel("identity").canonical_abscissa == -0.5
    assert get_kernel("zeta").canonical_abscissa == -1.5
    assert get_kernel("zeta_squared").canonical_abscissa == -0.5
    assert get_kernel("zeta_L4").canonical_abscissa == -0.5
    s = 2.0 + 1.5j
    from summa.special_functions import dirichlet_L_chi4, zeta

    assert get_kernel("zeta_squared").kernel(s) == pytest.approx(zeta(s) ** 2)
    assert get_kernel("zeta_L4").kernel(s) == pytest.approx(zeta(s) * dirichlet_L_chi4(s))
    # mobius kernel: (2 pi)^-s / zeta(1 - s)
    got = get_kernel("mobius").kernel(s)
    assert got == pytest.approx(np.exp(-s * np.log(2 * np.pi)) / zeta(1.0 - s))
    with pytest.raises(KeyError):
        get_kernel("nope")


def test_mellin_transform_gaussian(gaussian):
    assert mellin_transform(gaussian, 1.0).real == pytest.approx(SQRT_PI_OVER_2,
                                                                 abs=1e-12)
    assert mellin_transform(gaussian, 2.0).real == pytest.approx(1.0, abs=1e-12)
    # M[F](s) = Gamma(s) F^(-s)(0) / Gamma(s) consistency with the closed form:
    # the transform equals 2^(s/2-1) Gamma(s/2) for the Gaussian
    for s in (0.7, 1.3 + 0.8j, 2.4 - 1.1j):
        want = gamma(0.5 * s) * np.exp((0.5 * s - 1.0) * np.log(2.0))
        assert abs(mellin_transform(gaussian, s) - want) <= 1e-11


def test_mellin_fractional_relation(gaussian):
    # F^(s)(0) = M[F(-u)](-s) / Gamma(-s) on Re s < 0, F even
    for s in (-0.8, -1.7 + 0.4j):
        lhs = gaussian_frac_closed(-np.complex128(s))
        rhs = mellin_transform(gaussian, -s) / gamma(-np.complex128(s))
        assert abs(lhs - rhs) <= 1e-11


def test_inverse_mellin_round_trip(gaussian):
    G = lambda s: gamma(0.5 * s) * np.exp((0.5 * s - 1.0) * np.log(2.0))
    for v in (0.4, 1.0, 2.2):
        got = inverse_mellin_line(G, 1.0, v, VerticalContour(1.0, 40.0))
        assert abs(got - gaussian.value(v)) <= 1e-8


def test_inverse_mellin_quadrature_backed_round_trip(gaussian):
    def G(s):
        flat = np.atleast_1d(np.asarray(s, dtype=complex)).ravel()
        vals = np.array([mellin_transform(gaussian, si, tol=1e-12) for si in flat])
        return vals.reshape(np.shape(s))

    got = inverse_mellin_line(G, 1.0, 1.0, VerticalContour(1.0, 40.0, 16))
    assert abs(got - math.exp(-0.5)) <= 1e-8


def test_inverse_mellin_classical_gamma_pair():
    got = inverse_mellin_line(lambda s: gamma(s), 1.0, 1.0, VerticalContour(1.0, 40.0))
    assert abs(got - math.exp(-1.0)) <= 1e-12


def test_inverse_mellin_tail_error():
    with pytest.raises(TailError):
        # 1/s decays far too slowly for a truncated line
        inverse_mellin_line(lambda s: 1.0 / s, 1.0, 1.0, VerticalContour(1.0, 20.0))


def test_round_trip_invariant_random_v(gaussian):
    rng = np.random.default_rng(31)
    G = lambda s: gamma(0.5 * s) * np.exp((0.5 * s - 1.0) * np.log(2.0))
    for v in rng.uniform(0.2, 3.0, size=10):
        got = inverse_mellin_line(G, 1.0, float(v), VerticalContour(1.0, 50.0))
        assert abs(got - gaussian.value(v)) <= 1e-7


def test_mother_integrand_factors(gaussian):
    K = get_kernel("identity")
    got = mother_integrand(K, gaussian, -1.0 + 0j, 2.0)
    want = gamma(1.0) * 1.0 * SQRT_PI_OVER_2 * 0.5
    assert abs(got - want) <= 1e-12
    # zeta kernel stays finite on its canonical line
    K = get_kernel("zeta")
    vals = mother_integrand(K, gaussian, np.array([-1.5 + 3j, -1.5 - 7j]), 1.0)
    assert np.all(np.isfinite(vals))
    # mobius kernel equals the inverted-zeta form
    K = get_kernel("mobius")
    s = -0.5 + 2j
    from summa.special_functions import zeta

    want = (gamma(-s) * np.exp(s * np.log(2 * np.pi)) / zeta(s + 1.0)
            * gaussian_frac_closed(-np.complex128(s)) * 1.0)
    assert abs(mother_integrand(K, gaussian, s, 1.0) - want) <= 1e-12


def test_rectangle_residue_theorem(gaussian):
    K = get_kernel("identity")
    path = RectanglePath(-0.5, 4.5, 60.0)
    res = rectangle_residue_sum(K, gaussian, path, 2.0)
    circ = rectangle_quadrature(K, gaussian, path, 2.0)
    assert abs(res - circ) <= 1e-7
    # Taylor reading: minus the residue sum is the degree-4 Taylor part at t=-2
    taylor = sum(gaussian.deriv_at_0(k) * (-2.0) ** k / math.factorial(k)
                 for k in range(5))
    assert abs(-res - taylor) <= 1e-12


def test_rectangle_residues_zeta_kernel(gaussian):
    # crossing s = -1 and s = 0 for the zeta kernel picks up
    # -F^(-1)(0)/y and F(0)/2
    K = get_kernel("zeta")
    path = RectanglePath(-1.5, 0.5, 40.0)
    res = rectangle_residue_sum(K, gaussian, path, 1.0)
    want = -SQRT_PI_OVER_2 + 0.5
    assert abs(res - want) <= 1e-12
    circ = rectangle_quadrature(K, gaussian, path, 1.0)
    assert abs(res - circ) <= 1e-7


def test_rectangle_residues_zeta_squared_double_pole(gaussian, oracle_sums):
    from conftest import oracle
    from summa.special_functions import EULER_GAMMA

    K = get_kernel("zeta_squared")
    path = RectanglePath(-1.5, 0.5, 40.0)
    y = 1.0
    res = rectangle_residue_sum(K, gaussian, path, y)
    log_moment = oracle(oracle_sums, "gauss_log_moment")
    want = -(log_moment + 2.0 * EULER_GAMMA * SQRT_PI_OVER_2) - 0.25
    assert abs(res - want) <= 1e-11
    circ = rectangle_quadrature(K, gaussian, path, y)
    assert abs(res - circ) <= 1e-7


def test_rectangle_residues_zeta_L4_kernel(gaussian):
    # crossing s = -1 and s = 0: -(pi/4) F^(-1)(0)/y and F(0)/4
    K = get_kernel("zeta_L4")
    path = RectanglePath(-1.5, 0.5, 40.0)
    res = rectangle_residue_sum(K, gaussian, path, 1.0)
    want = -(math.pi / 4.0) * SQRT_PI_OVER_2 + 0.25
    assert abs(res - want) <= 1e-12
    circ = rectangle_quadrature(K, gaussian, path, 1.0)
    assert abs(res - circ) <= 1e-7


def test_rectangle_pole_on_boundary(gaussian):
    K = get_kernel("identity")
    with pytest.raises(PoleOnBoundaryError):
        rectangle_residue_sum(K, gaussian, RectanglePath(-0.5, 3.0, 10.0), 1.0)
    K = get_kernel("mobius")
    with pytest.raises(PoleOnBoundaryError):
        rectangle_residue_sum(K, gaussian, RectanglePath(-1.5, 0.5, 10.0), 1.0)


def test_horizontal_segment_decay(gaussian):
    # top/bottom edge contributions at T = 60 are negligible against the
    # vertical edges for every built-in kernel on its canonical strip
    strips = {"identity": (-0.5, 4.5), "zeta": (-1.5, 4.0),
              "zeta_squared": (-1.5, 4.0), "zeta_L4": (-0.5, 3.5),
              "mobius": (-0.3, 3.6)}
    from summa._quad import gl_panels

    for kind, (a, b) in strips.items():
        K = get_kernel(kind)
        f = lambda s: mother_integrand(K, gaussian, s, 1.3)
        top = np.sum(gl_panels(lambda x: f(x + 60j), np.linspace(a, b, 5), nodes=16))
        bot = np.sum(gl_panels(lambda x: f(x - 60j), np.linspace(a, b, 5), nodes=16))
        left, _ = mother_line_integral(K, gaussian, a, 1.3, height=60.0)
        scale = max(abs(left), 1e-6)
        assert (abs(top) + abs(bot)) / (2 * np.pi) <= 1e-8 * scale


def test_ramanujan_master_formula(gaussian):
    lhs, rhs = ramanujan_check(gaussian, 0.5)
    assert abs(lhs - rhs) <= 1e-8
    # rhs is the Mellin transform of the even extension at the same point
    assert abs(rhs - mellin_transform(gaussian, 0.5)) <= 1e-10
    # conjugate symmetry for real F
    l2, r2 = ramanujan_check(gaussian, 0.5 + 0.3j)
    l3, r3 = ramanujan_check(gaussian, 0.5 - 0.3j)
    assert abs(l2 - np.conj(l3)) <= 1e-10
    assert abs(r2 - np.conj(r3)) <= 1e-10


def test_contour_validation():
    with pytest.raises(ValueError):
        VerticalContour(0.0, -1.0)
    with pytest.raises(ValueError):
        RectanglePath(2.0, 1.0, 5.0)
