"""Identities conditional on the simple critical-line zeros: zero sums
against Dirichlet series, the antisymmetric coefficient C at each zero,
and convergence-strip scanning.

All zero data (ordinates and zeta' values) comes from oracle fixtures;
nothing here computes a zero.  Term assembly runs in log space so the
Gamma / cosine growth factors (e^(pi gamma / 2) and friends) never meet
the floating-point range ends even for deep tables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy import special as _sp

from .arithmetic import ArithmeticTables, default_tables
from .errors import ConvergenceError, NotAZeroError
from .fixtures import load_zero_rows
from .fractional import TestFunction
from .special_functions import zeta
from .summation import SummationReport, zero_avoiding_height

_LN2 = math.log(2.0)
_LNPI = math.log(math.pi)


@dataclass(frozen=True)
class ZetaZero:
    """Nontrivial zero 1/2 + i gamma together with zeta'(1/2 + i gamma)."""

    gamma: float
    zeta_prime: complex

    @property
    def rho(self) -> complex:
        return complex(0.5, self.gamma)


def load_zeros(path: str | Path | None = None) -> list[ZetaZero]:
    """Zeros from the fixture file, sorted strictly ascending in gamma."""
    if path is None:
        rows = load_zero_rows()
    else:
        p = Path(path)
        rows = load_zero_rows(p.name, p.parent)
    zeros = [ZetaZero(g, zp) for g, zp in rows]
    for a, b in zip(zeros, zeros[1:]):
        if not a.gamma < b.gamma:
            from .errors import FormatError

            raise FormatError("zero ordinates must increase strictly")
    return zeros


def _log_cos(z: np.ndarray) -> np.ndarray:
    """log cos z, stable for large |Im z|."""
    z = np.asarray(z, dtype=complex)
    up = z.imag >= 0
    out = np.empty(z.shape, dtype=complex)
    # cos z = e^{-iz}(1 + e^{2iz})/2 for Im z > 0 (|e^{2iz}| < 1)
    out[up] = -1j * z[up] - _LN2 + np.log1p(np.exp(2j * z[up]))
    out[~up] = 1j * z[~up] - _LN2 + np.log1p(np.exp(-2j * z[~up]))
    return out


def c_function(s: complex, zeros: list[ZetaZero], match_tol: float = 1e-6) -> complex:
    """C(s) = i 2^s pi^(s/2) Gamma(s/2) / (cos(pi s / 2) Gamma(s) zeta'(s))
    at a tabulated zero (or its reflection 1 - rho / conjugate).

    Real on the tabulated zeros, with C(rho) = -C(1 - rho).
    """
    s = complex(s)
    zp = None
    for z in zeros:
        if abs(s - z.rho) < match_tol:
            zp = z.zeta_prime
            break
        if abs(s - (1.0 - z.rho)) < match_tol:  # = conj(rho) on the line
            zp = np.conj(z.zeta_prime)
            break
    if zp is None:
        raise NotAZeroError(f"{s} does not match a tabulated zero")
    ln = (s * _LN2 + 0.5 * s * _LNPI + _sp.loggamma(0.5 * s)
          - _log_cos(0.5 * math.pi * s) - _sp.loggamma(s) - np.log(zp))
    return complex(1j * np.exp(ln))


def _sinh_zero_terms(theta: complex, zeros: list[ZetaZero]) -> np.ndarray:
    """Per-zero terms i 2^rho pi^(rho/2) Gamma(rho/2)
    / (4 cos(pi rho / 2) Gamma(rho) zeta'(rho)) * sinh(gamma theta)."""
    if np.real(theta) < 0:
        # sinh is odd; keep the exponential factoring on its stable side
        return -_sinh_zero_terms(-theta, zeros)
    rho = np.array([z.rho for z in zeros])
    zp = np.array([z.zeta_prime for z in zeros])
    g = np.array([z.gamma for z in zeros])
    ln = (rho * _LN2 + 0.5 * rho * _LNPI + _sp.loggamma(0.5 * rho)
          - math.log(4.0) - _log_cos(0.5 * math.pi * rho)
          - _sp.loggamma(rho) - np.log(zp))
    # sinh(g theta) = e^{g theta}(1 - e^{-2 g theta})/2 folded into the logs
    ln = ln + g * theta + np.log1p(-np.exp(-2.0 * g * np.real(theta)
                                           - 2j * g * np.imag(theta))) - _LN2
    return 1j * np.exp(ln)


def sinh_kernel_sides(theta: complex, zeros: list[ZetaZero], K: int = 25,
                      height: float | None = None):
    """Both sides of the zero-sum / Dirichlet-series identity

      i sum_{gamma>0} [2^rho pi^(rho/2) Gamma(rho/2)
          / (4 cos(pi rho/2) Gamma(rho) zeta'(rho))] sinh(gamma theta)
        = sum_{k>=1} (-1)^k pi^k / (k! zeta(2k+1)) sin((2k + 1/2) theta),

    zeros truncated at a zero-avoiding height.  Convergence of the zero
    side needs |Re theta| < pi/4; outside the strip the partial sums blow
    up and a ConvergenceError carries the divergence flag.

    Returns (zero_side, series_side, last_zero_term, last_series_term).
    """
    if not zeros:
        raise ValueError("need a zeros table")
    g = np.array([z.gamma for z in zeros])
    if height is None:
        height = zero_avoiding_height(g, g[-1])
    keep = [z for z in zeros if z.gamma <= height]
    if not keep:
        raise ValueError("height excludes every tabulated zero")
    if theta == 0:
        return 0.0 + 0.0j, 0.0 + 0.0j, 0.0, 0.0

    terms = _sinh_zero_terms(theta, keep)
    partials = np.cumsum(terms)
    if _diverging(partials, np.abs(terms)):
        raise ConvergenceError(
            f"zero-side partial sums diverge at theta = {theta} "
            f"(|Re theta| >= pi/4 regime)")
    zero_side = complex(partials[-1])

    ks = np.arange(1, K + 1, dtype=float)
    zvals = np.array([complex(zeta(2.0 * k + 1.0)).real for k in ks])
    series_terms = ((-1.0) ** ks * np.pi ** ks / (_factorials(K) * zvals)
                    * np.sin((2.0 * ks + 0.5) * theta))
    series_side = complex(np.sum(series_terms))
    return zero_side, series_side, abs(terms[-1]), abs(series_terms[-1])


def _factorials(K: int) -> np.ndarray:
    out = np.empty(K)
    acc = 1.0
    for k in range(1, K + 1):
        acc *= k
        out[k - 1] = acc
    return out


def _diverging(partials: np.ndarray, term_mags: np.ndarray) -> bool:
    """Divergence gauge.  The literal five-consecutive-doublings signal is
    kept, but per-zero growth inside the divergence regime is often below
    2x (ordinate gaps shrink like 2 pi / log gamma), so a trailing-window
    blowup test backs it up: the last partial sums dwarfing the first
    third marks the exponential regime regardless of step ratios."""
    mags = np.abs(partials)
    growth = mags[1:] > 2.0 * mags[:-1]
    run = 0
    for gflag in growth:
        run = run + 1 if gflag else 0
        if run >= 5:
            return True
    if len(mags) >= 9:
        head = np.max(mags[: len(mags) // 3]) + np.max(term_mags[: len(mags) // 3])
        if np.min(mags[-3:]) > 1e4 * max(head, 1e-300):
            return True
    return False


def zero_side_partials(theta: complex, zeros: list[ZetaZero]) -> np.ndarray:
    """Cumulative zero-side sums (one entry per tabulated zero), for
    truncation-stability studies."""
    return np.cumsum(_sinh_zero_terms(theta, zeros))


def mobius_zero_sum_check(F: TestFunction, z: float, zeros: list[ZetaZero],
                          n_max: int = 200_000,
                          tables: ArithmeticTables | None = None) -> SummationReport:
    """Zero-sum side against the symmetrised Moebius double series:

      sum_{rho} F^(-rho)(0) (2 pi)^(rho/2) / (2 cos(pi rho/2) zeta'(rho))
          * z^(1/2 - rho)
        = (1/sqrt(2 pi z)) sum mu_n/n Fhat(sqrt(2 pi)/(n z))
          - sqrt(z) sum mu_n/n F(sqrt(2 pi) z / n),

    the Moebius sums accumulated with their n -> infinity limits removed
    (the weights mu_n/n sum to zero).  Requires a closed-form fractional
    derivative: quadrature cannot track F^(-rho)(0) at ordinates ~ 10^2.
    """
    if z <= 0:
        raise ValueError("z must be positive")
    if F.frac_closed is None:
        raise ValueError("zero-sum side needs frac_closed on the test function")
    rho = np.array([zz.rho for zz in zeros])
    zp = np.array([zz.zeta_prime for zz in zeros])
    fneg = np.asarray(F.frac_closed(rho), dtype=complex)
    ln = (0.5 * rho * math.log(2.0 * math.pi) - _LN2
          - _log_cos(0.5 * math.pi * rho) - np.log(zp)
          + (0.5 - rho) * math.log(z))
    terms = fneg * np.exp(ln)
    lhs = float(2.0 * np.sum(terms.real))  # rho and conj(rho) pair up

    tables = tables if tables is not None else default_tables()
    N = min(n_max, tables.limit)
    n = np.arange(1, N + 1, dtype=float)
    mu = tables.mu[1 : N + 1]
    sq2pi = math.sqrt(2.0 * math.pi)
    fhat0 = float(np.asarray(F.fourier(0.0)))
    f0 = float(F.value(0.0))
    s1 = np.sum((mu / n) * (np.asarray(F.fourier(sq2pi / (n * z)), dtype=float) - fhat0))
    s2 = np.sum((mu / n) * (np.asarray(F.value(sq2pi * z / n), dtype=float) - f0))
    rhs = s1 / math.sqrt(2.0 * math.pi * z) - math.sqrt(z) * s2
    tail = (abs(s1) + abs(s2)) / N  # 1/n^3 terms: coarse omitted-tail gauge
    return SummationReport("mobius-zero-sum", z, lhs, float(rhs),
                           abs(terms[-1]), tail, N)


def strip_bound_constant(F: TestFunction, alpha: float,
                         sigma_range=(-6.0, 6.0), tau_range=(-20.0, 20.0),
                         n_sigma: int = 25, n_tau: int = 41) -> float:
    """Smallest A with |F^(-s)(0)| <= A 2^(|Re s|/2) e^(alpha |Im s|) on the
    grid, using the closed form when present."""
    sig = np.linspace(*sigma_range, n_sigma)
    tau = np.linspace(*tau_range, n_tau)
    S, T = np.meshgrid(sig, tau)
    s = S + 1j * T
    if F.frac_closed is not None:
        vals = np.abs(np.asarray(F.frac_closed(s), dtype=complex))
    else:
        from .fractional import frac_deriv

        vals = np.abs(np.array([[frac_deriv(F, -si).value for si in row]
                                for row in s]))
    bound = np.exp(0.5 * np.abs(S) * _LN2 + alpha * np.abs(T))
    return float(np.max(vals / bound))
