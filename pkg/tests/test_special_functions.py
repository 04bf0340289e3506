"""Special-function accuracy against the oracle grids, plus the
functional-equation and modulus identities."""

import numpy as np
import pytest

from summa.errors import DomainError, PoleError
from summa.fixtures import load_value_grid
from summa.special_functions import (EULER_GAMMA, EvalOptions, bessel_j0,
                                     bessel_k0, bessel_y0, dirichlet_L_chi4,
                                     gamma, xi, xi4, zeta)


def _rel(got, ref):
    return abs(got - ref) / max(abs(ref), 1e-300)


def test_gamma_against_fixture_grid():
    worst = 0.0
    for _, s, ref in load_value_grid("gamma_grid.tsv"):
        worst = max(worst, _rel(gamma(s), ref))
    assert worst <= 1e-13


def test_gamma_basic_values():
    assert gamma(1.0) == pytest.approx(1.0, abs=1e-15)
    assert gamma(0.5).real == pytest.approx(np.sqrt(np.pi), rel=1e-14)


def test_gamma_residue_at_minus_two():
    # residue of Gamma at -k is (-1)^k / k!; k = 2 gives 1/2
    for eps in (1e-5, 1e-6):
        val = eps * gamma(-2.0 + eps)
        assert val.real == pytest.approx(0.5, rel=2e4 * eps)


def test_gamma_pole_guard():
    with pytest.raises(PoleError):
        gamma(0.0)
    with pytest.raises(PoleError):
        gamma(-3.0 + 1e-10j)


def test_zeta_against_fixture_grid():
    worst = 0.0
    for _, s, ref in load_value_grid("zeta_grid.tsv"):
        if abs(ref) < 1e-30:  # exact trivial zero rows
            assert abs(zeta(s)) <= 1e-12
            continue
        worst = max(worst, _rel(zeta(s), ref))
    assert worst <= 1e-12


def test_zeta_special_points():
    assert abs(zeta(-2.0)) <= 1e-15
    assert zeta(2.0).real == pytest.approx(np.pi ** 2 / 6, rel=1e-14)
    assert zeta(0.0).real == pytest.approx(-0.5, rel=1e-14)
    with pytest.raises(PoleError):
        zeta(1.0)


def test_L_chi4_against_fixture_grid():
    worst = 0.0
    for _, s, ref in load_value_grid("lchi4_grid.tsv"):
        if abs(ref) < 1e-30:
            assert abs(dirichlet_L_chi4(s)) <= 1e-12
            continue
        worst = max(worst, _rel(dirichlet_L_chi4(s), ref))
    assert worst <= 1e-12


def test_L_chi4_special_points():
    assert dirichlet_L_chi4(1.0).real == pytest.approx(np.pi / 4, rel=1e-14)
    assert dirichlet_L_chi4(0.0).real == pytest.approx(0.5, rel=1e-13)
    assert abs(dirichlet_L_chi4(-1.0)) <= 1e-13


def test_bessel_against_fixture_grid():
    fn = {"bessel_j0": bessel_j0, "bessel_y0": bessel_y0, "bessel_k0": bessel_k0}
    for label, s, ref in load_value_grid("bessel_grid.tsv"):
        assert abs(fn[label](s.real) - ref.real) <= 1e-12


def test_bessel_domain_errors():
    assert bessel_j0(0.0) == 1.0
    with pytest.raises(DomainError):
        bessel_y0(0.0)
    with pytest.raises(DomainError):
        bessel_k0(-1.0)


def _pole_free_grid(rng, n, re_lo, re_hi, im_max, avoid):
    out = []
    while len(out) < n:
        s = complex(rng.uniform(re_lo, re_hi), rng.uniform(-im_max, im_max))
        if all(abs(s - a) > 0.3 for a in avoid):
            out.append(s)
    return out


def test_xi_reflection_invariant():
    rng = np.random.default_rng(1234)
    pts = _pole_free_grid(rng, 100, -8.0, 9.0, 20.0, avoid=(0.0, 1.0))
    for s in pts:
        a, b = xi(s), xi(1.0 - s)
        assert abs(a - b) <= 1e-9 * (1.0 + abs(a))


def test_xi4_reflection_invariant():
    rng = np.random.default_rng(4321)
    pts = _pole_free_grid(rng, 100, -8.0, 9.0, 20.0, avoid=())
    for s in pts:
        a, b = xi4(s), xi4(1.0 - s)
        assert abs(a - b) <= 1e-9 * (1.0 + abs(a))
    assert abs(xi4(0.25) - xi4(0.75)) <= 1e-10


def test_xi_conjugate_reflection_spot():
    assert abs(xi(0.3 + 2j) - xi(0.7 - 2j)) <= 1e-10
    assert abs(xi(0.5 + 0j).imag) <= 1e-14


def test_zeta_functional_equation_identity():
    # zeta(1-s) = 2 (2 pi)^-s Gamma(s) cos(pi s / 2) zeta(s)
    rng = np.random.default_rng(99)
    avoid = (0.0, 1.0)
    pts = _pole_free_grid(rng, 100, -6.0, 7.0, 20.0, avoid=avoid)
    for s in pts:
        if abs(s.imag) < 0.2 and s.real < 0.2:  # keep Gamma(s) off its poles
            s += 0.5j
        lhs = zeta(1.0 - s)
        rhs = (2.0 * np.exp(-s * np.log(2.0 * np.pi)) * gamma(s)
               * np.cos(0.5 * np.pi * s) * zeta(s))
        assert abs(lhs - rhs) <= 1e-9 * (1.0 + abs(lhs))


def test_gamma_modulus_identity():
    # |Gamma(N + 1/2 + i tau)|^2 = pi / cosh(pi tau) * prod_{k<N} ((k+1/2)^2 + tau^2)
    for N in (0, 1, 2):
        for tau in np.linspace(-10.0, 10.0, 41):
            lhs = abs(gamma(N + 0.5 + 1j * tau)) ** 2
            prod = 1.0
            for k in range(N):
                prod *= (k + 0.5) ** 2 + tau ** 2
            rhs = np.pi / np.cosh(np.pi * tau) * prod
            assert lhs == pytest.approx(rhs, rel=1e-10)


def test_dirichlet_series_consistency_for_zeta3():
    n = np.arange(1, 10_001, dtype=float)
    partial = np.sum(n ** -3.0)
    assert abs(partial - zeta(3.0).real) <= 1e-7


def test_eval_options_validation():
    with pytest.raises(ValueError):
        EvalOptions(rel_tol=0.0)
    with pytest.raises(ValueError):
        EvalOptions(max_terms=8)


def test_euler_gamma_constant():
    assert EULER_GAMMA == pytest.approx(0.5772156649015329, abs=1e-16)
