"""Zero-table identities: loading, the antisymmetric coefficient C, the
sinh-kernel zero sum, and the symmetrised Moebius double series."""

import math

import numpy as np
import pytest

from summa.errors import ConvergenceError, FormatError, NotAZeroError
from summa.rh import (c_function, load_zeros, mobius_zero_sum_check,
                      sinh_kernel_sides, strip_bound_constant,
                      zero_side_partials)


def test_load_zeros(zeros_table):
    assert len(zeros_table) >= 100
    assert zeros_table[0].gamma == pytest.approx(14.134725141734694, abs=1e-12)
    assert zeros_table[1].gamma == pytest.approx(21.022039638771555, abs=1e-12)
    gammas = [z.gamma for z in zeros_table]
    assert all(a < b for a, b in zip(gammas, gammas[1:]))
    assert zeros_table[0].zeta_prime == pytest.approx(
        0.783296511867031 + 0.12469982974817109j, abs=1e-12)


def test_load_zeros_format_errors(tmp_path):
    bad = tmp_path / "zeros.tsv"
    bad.write_text("# count=2\n14.1\t1.0\t0.0\n")
    with pytest.raises(FormatError):
        load_zeros(bad)
    bad.write_text("# count=2\n14.1\t1.0\t0.0\n13.0\t1.0\t0.0\n")
    with pytest.raises(FormatError):
        load_zeros(bad)


def test_zeros_vanish_under_reevaluation(zeros_table):
    # the tabulated ordinates really are zeros of this package's zeta
    from summa.special_functions import zeta

    for z in zeros_table[::7]:
        assert abs(zeta(z.rho)) <= 1e-8


def test_c_function_properties(zeros_table):
    for z in zeros_table:
        c = c_function(z.rho, zeros_table)
        # real on the tabulated zeros
        assert abs(c.imag) <= 1e-9 * max(abs(c), 1e-300)
        # antisymmetry under rho -> 1 - rho
        c_ref = c_function(1.0 - z.rho, zeros_table)
        assert abs(c + c_ref) <= 1e-9 * abs(c)


def test_c_function_conjugation_spot(zeros_table):
    z = zeros_table[3]
    c = c_function(z.rho, zeros_table)
    c_conj = c_function(np.conj(z.rho), zeros_table)
    assert abs(c_conj + np.conj(c)) <= 1e-9 * abs(c)


def test_c_function_rejects_non_zero(zeros_table):
    with pytest.raises(NotAZeroError):
        c_function(0.5 + 15.0j, zeros_table)


def test_sinh_kernel_identity_inside_strip(zeros_table):
    for theta in (0.3, 0.5):
        zs, ss, zt, st = sinh_kernel_sides(theta, zeros_table, K=25)
        assert abs(zs - ss) <= 1e-3
        assert abs(zs - ss) <= 1e-10  # measured agreement is far tighter
        assert abs(zs.imag) <= 1e-12
    zs, ss, *_ = sinh_kernel_sides(0.0, zeros_table)
    assert zs == 0.0 and ss == 0.0


def test_sinh_kernel_divergence_outside_strip(zeros_table):
    with pytest.raises(ConvergenceError):
        sinh_kernel_sides(1.0, zeros_table, K=25)


def test_zero_side_truncation_stability(zeros_table):
    partials = zero_side_partials(0.3, zeros_table)
    gammas = np.array([z.gamma for z in zeros_table])
    window = [complex(partials[np.searchsorted(gammas, h, "right") - 1])
              for h in range(60, 101)]
    spread = max(abs(a - b) for a in window for b in window)
    assert spread <= 1e-3


def test_mobius_zero_sum_identity(gaussian, zeros_table, tables):
    for z in (math.sqrt(2.0 * math.pi), 2.0):
        rep = mobius_zero_sum_check(gaussian, z, zeros_table, tables=tables)
        assert rep.residual <= 1e-3
        assert rep.residual <= 1e-8  # measured with 100 zeros
    # the residual stays small for large z (the sides themselves only
    # shrink at the critical-line z^(-i gamma) oscillation scale)
    rep = mobius_zero_sum_check(gaussian, 25.0, zeros_table, tables=tables)
    assert rep.residual <= 1e-6


def test_mobius_zero_sum_antisymmetry(gaussian, zeros_table, tables):
    # z <-> 1/z exchanges the two series with a sign flip for the
    # self-dual Gaussian (Fhat = sqrt(2 pi) F)
    rep_a = mobius_zero_sum_check(gaussian, 1.7, zeros_table, tables=tables)
    rep_b = mobius_zero_sum_check(gaussian, 1.0 / 1.7, zeros_table, tables=tables)
    assert abs(rep_a.rhs + rep_b.rhs) <= 1e-12
    assert abs(rep_a.lhs + rep_b.lhs) <= 1e-8


def test_gaussian_strip_bound(gaussian):
    # |F^(-s)(0)| <= A 2^(|sigma|/2) e^(0.7 |tau|) holds on the grid for a
    # finite fitted A (polynomial tau factors at negative sigma keep the
    # grid constant well above 1, but it stays bounded)
    A = strip_bound_constant(gaussian, 0.7, n_sigma=49, n_tau=81)
    assert np.isfinite(A) and A < 1e5
    sig = np.linspace(-6.0, 6.0, 49)
    tau = np.linspace(-20.0, 20.0, 81)
    S, T = np.meshgrid(sig, tau)
    vals = np.abs(gaussian.frac_closed(S + 1j * T))
    bound = 1.000001 * A * np.exp(0.5 * np.abs(S) * math.log(2.0) + 0.7 * np.abs(T))
    assert np.all(vals <= bound)
