"""Asymptotic-expansion (residue-side) evaluators with explicit regular
parts and vertical-line contour remainders: Taylor-MacLaurin,
Euler-MacLaurin (series and finite forms), Euler-Voronoi, Euler-Circle,
and the Euler-Moebius-Poisson series pair.

Each evaluator returns the regular terms crossed by pushing the contour
right of the last enclosed pole, plus the remaining line integral; the
two together reproduce the weighted sum the formula encodes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from ._quad import _leggauss, integrate_00_inf
from .errors import ConvergenceError
from .fractional import TestFunction
from .mellin import get_kernel, log_moment_term, mother_line_integral
from .special_functions import zeta

# pi to extended precision; float64 pi would poison the long-double work
_PI_LD = np.longdouble("3.14159265358979323846264338327950288")
_FOUR_PI_SQ_LD = np.longdouble(4) * _PI_LD * _PI_LD


@dataclass(frozen=True)
class AsymptoticExpansion:
    """Ordered regular terms plus a remainder-contour descriptor.

    A term (p, c) contributes c * t^p; the single allowed log-type term
    stores its full evaluated value in the coefficient slot (its t-shape,
    (1/y)(log-moment), does not factor as coeff * t^p).
    """

    terms: tuple
    remainder_abscissa: float
    t: float
    remainder_value: Optional[complex] = None
    remainder_tail: float = 0.0

    def term_values(self) -> list[complex]:
        out = []
        for p, c in self.terms:
            if p == "log":
                out.append(complex(c))
            elif self.t == 0.0:
                out.append(complex(c) if p == 0 else 0.0)
            else:
                out.append(complex(c) * self.t ** p)
        return out

    def regular_part(self) -> complex:
        return sum(self.term_values(), 0.0 + 0.0j)

    def total(self) -> complex:
        if self.remainder_value is None:
            return self.regular_part()
        return self.regular_part() + self.remainder_value


def taylor_maclaurin(F: TestFunction, t: float, N: int,
                     height: float = 40.0, nodes: int = 32) -> AsymptoticExpansion:
    """F(t) = sum_{n<=N} F^(n)(0) t^n / n!  +  remainder on Re s = N + 1/2."""
    if t > 0:
        raise ValueError("t must be <= 0")
    if N < 0:
        raise ValueError("N must be >= 0")
    terms = tuple((n, F.deriv_at_0(n) / math.factorial(n)) for n in range(N + 1))
    c = N + 0.5
    if t == 0.0:
        return AsymptoticExpansion(terms, c, t, 0.0 + 0.0j, 0.0)
    rem, tail = mother_line_integral(get_kernel("identity"), F, c, -t,
                                     height=height, nodes=nodes)
    return AsymptoticExpansion(terms, c, t, rem, tail)


def taylor_remainder_classical(F: TestFunction, t: float, N: int) -> complex:
    """Classical integral remainder (1/N!) ∫_0^t F^(N+1)(u) (t-u)^N du."""
    if t == 0.0:
        return 0.0 + 0.0j
    x, w = _leggauss(64)
    u = 0.5 * t * (x + 1.0)
    vals = F.deriv_fn(N + 1, u) * (t - u) ** N
    return complex(np.sum(vals * w) * 0.5 * t / math.factorial(N))


def euler_maclaurin(F: TestFunction, t: float, N: int,
                    height: float = 60.0, nodes: int = 32) -> AsymptoticExpansion:
    """sum_{n>=1} F(nt) = -F^(-1)(0)/t + sum_{k=0}^{2N-1} zeta(-k) F^(k)(0) t^k / k!
    + remainder on Re s = 2N."""
    if not t < 0:
        raise ValueError("t must be < 0")
    if N < 1:
        raise ValueError("N must be >= 1")
    fm1 = F.frac(-1)
    terms = [(-1, -fm1)]
    for k in range(0, 2 * N):
        terms.append((k, complex(zeta(-k)) * F.deriv_at_0(k) / math.factorial(k)))
    rem, tail = mother_line_integral(get_kernel("zeta"), F, 2 * N, -t,
                                     height=height, nodes=nodes)
    return AsymptoticExpansion(tuple(terms), 2 * N, t, rem, tail)


@dataclass(frozen=True)
class OneSidedFunction:
    """A function on [p, q] for the finite summation formula: value,
    derivatives, and an optional exact polynomial degree."""

    name: str
    value: Callable[[np.ndarray], np.ndarray]
    deriv_fn: Callable[[int, np.ndarray], np.ndarray]
    polynomial_degree: Optional[int] = None


def euler_maclaurin_finite(G: OneSidedFunction, p: int, q: int, N: int,
                           height: float = 36.0, nodes: int = 16,
                           u_level: float = 1.0 / 128.0):
    """Finite summation formula on integers p..q:

        (G(p) + G(q))/2 + sum_{p<n<q} G(n)
            = ∫_p^q G + sum_{k=1}^N zeta(1-2k)/(2k-1)! [G^(2k-1)(p) - G^(2k-1)(q)]
              + remainder,

    the remainder being a vertical-line integral of
    zeta(-s) [Gp^(s)(0) - Gq^(s)(0)] over Re s = 2N, where Gp, Gq are the
    translates of u -> G(-u) by p and q.  Returns (value, remainder) with
    value = integral + corrections + remainder.

    For a polynomial of degree < 2N + 2 the remainder vanishes identically.
    """
    if not p < q:
        raise ValueError("need p < q")
    x, w = _leggauss(64)
    n_panels = max(1, q - p)
    edges = np.linspace(p, q, n_panels + 1)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    pts = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    integral = float(np.sum(G.value(pts).reshape(n_panels, -1) @ w * half))

    corrections = 0.0
    for k in range(1, N + 1):
        coeff = complex(zeta(1 - 2 * k)).real / math.factorial(2 * k - 1)
        corrections += coeff * float(G.deriv_fn(2 * k - 1, np.array([float(p)]))[0]
                                     - G.deriv_fn(2 * k - 1, np.array([float(q)]))[0])

    if G.polynomial_degree is not None and G.polynomial_degree < 2 * N + 2:
        return integral + corrections, 0.0

    rem = _finite_remainder(G, p, q, N, height, nodes, u_level)
    return integral + corrections + rem, rem


def _finite_remainder(G: OneSidedFunction, p: int, q: int, N: int,
                      height: float, nodes: int, u_level: float) -> float:
    """(1/2 pi i) ∫_(Re s = 2N) zeta(-s) M(s) ds with

        M(s) = (-1)^n / prod_{j<n}(j - s) * ∫_0^∞ u^(n-s-1)
               [G^(n)(u+p) - G^(n)(u+q)] du,   n = 2N + 2.

    The Gamma factor is folded into the product so no pole is evaluated.
    The u-integral runs on a fixed double-exponential grid shared by all
    contour nodes (one matrix product instead of one quadrature per node).
    """
    n = 2 * N + 2
    c = float(2 * N)

    # DE grid on (0, inf): u = exp(pi/2 sinh(v))
    v = np.arange(-6.5, 6.5 + u_level, u_level)
    lnu = 0.5 * np.pi * np.sinh(v)
    keep = np.abs(lnu) < 600.0
    lnu = lnu[keep]
    u = np.exp(lnu)
    duw = u * 0.5 * np.pi * np.cosh(v[keep]) * u_level
    dg = (G.deriv_fn(n, u + p) - G.deriv_fn(n, u + q)) * duw * (-1.0) ** n

    x, wgl = _leggauss(nodes)
    n_panels = max(2, int(math.ceil(height)))
    edges = np.linspace(-height, height, n_panels + 1)
    midp = 0.5 * (edges[1:] + edges[:-1])
    halfp = 0.5 * (edges[1:] - edges[:-1])
    taus = (midp[:, None] + halfp[:, None] * x[None, :]).ravel()
    s = c + 1j * taus

    moments = np.exp(np.multiply.outer(n - s - 1.0, lnu)) @ dg
    js = np.arange(n, dtype=float)
    prod = np.prod(js[None, :] - s[:, None], axis=1)
    vals = zeta(-s) * moments / prod
    per_panel = (vals.reshape(n_panels, -1) @ wgl) * halfp
    return float((np.sum(per_panel) / (2.0 * math.pi)).real)


def euler_voronoi(F: TestFunction, t: float, N: int,
                  height: float = 60.0, nodes: int = 32) -> AsymptoticExpansion:
    """sum_{n>=1} d_n F(nt) = (log-moment term) + F(0)/4
    + sum_{n<=N} zeta(1-2n)^2 F^(2n-1)(0) t^(2n-1) / (2n-1)!
    + remainder on Re s = 2N.

    The log-type term is -(1/t) ∫_0^∞ F(-u)(ln(u/-t) + 2 gamma) du,
    stored evaluated (it mixes 1/t and ln(-t))."""
    if not t < 0:
        raise ValueError("t must be < 0")
    if N < 1:
        raise ValueError("N must be >= 1")
    terms = [("log", log_moment_term(F, -t)), (0, 0.25 * F.deriv_at_0(0))]
    for n in range(1, N + 1):
        k = 2 * n - 1
        terms.append((k, complex(zeta(-k)) ** 2 * F.deriv_at_0(k) / math.factorial(k)))
    rem, tail = mother_line_integral(get_kernel("zeta_squared"), F, 2 * N, -t,
                                     height=height, nodes=nodes)
    return AsymptoticExpansion(tuple(terms), 2 * N, t, rem, tail)


def euler_circle(F: TestFunction, t: float, abscissa: float = 0.5,
                 height: float = 40.0, nodes: int = 32) -> AsymptoticExpansion:
    """(1/4) sum_{n>=1} r_n F(nt) = -pi F^(-1)(0)/(4t) - F(0)/4 + remainder
    on any Re s = c > 0.

    The zeta and L zeros cancel every Gamma pole to the right of 0, so the
    regular part is stationary from order 0 and the remainder abscissa is a
    free positive parameter."""
    if not t < 0:
        raise ValueError("t must be < 0")
    if abscissa <= 0:
        raise ValueError("remainder abscissa must be positive")
    fm1 = F.frac(-1)
    terms = ((-1, -0.25 * math.pi * fm1), (0, -0.25 * F.deriv_at_0(0)))
    rem, tail = mother_line_integral(get_kernel("zeta_L4"), F, abscissa, -t,
                                     height=height, nodes=nodes)
    return AsymptoticExpansion(terms, abscissa, t, rem, tail)


def _zeta_odd_longdouble(m: int, cutoff: int = 400) -> np.longdouble:
    """zeta(m) for odd m >= 3 in extended precision: direct sum plus
    an Euler-MacLaurin tail through the B_4 term."""
    n = np.arange(1, cutoff, dtype=np.longdouble)
    s = np.sum(n ** (-np.longdouble(m)))
    M = np.longdouble(cutoff)
    s += M ** (1 - m) / np.longdouble(m - 1)
    s += M ** (-m) / 2
    s += np.longdouble(m) * M ** (-m - 1) / 12
    s -= np.longdouble(m * (m + 1) * (m + 2)) * M ** (-m - 3) / 720
    return s


_ZETA_ODD_LD: dict[int, np.longdouble] = {}


def _zeta_odd_ld(m: int) -> np.longdouble:
    if m not in _ZETA_ODD_LD:
        _ZETA_ODD_LD[m] = _zeta_odd_longdouble(m)
    return _ZETA_ODD_LD[m]


def euler_mobius_poisson_sides(F: TestFunction, theta: complex, K: int,
                               require_decreasing: bool = True):
    """The two series of the Euler-Moebius-Poisson expansion:

        fourier_side = (1/2 pi) sum_{k=1}^K  Fhat^(2k)(0)/(2k)!
                                  * e^{(2k+1) i theta} / zeta(2k+1)
        direct_side  =          sum_{k=1}^K  F^(2k)(0)/(2k)!
                                  * (2 pi)^{2k} e^{-2k i theta} / zeta(2k+1)

    Their difference is the Moebius-Poisson defect at y = e^{-i theta}.

    The direct side is violently cancellative (terms peak near 3e7 at
    theta = 0 for the Gaussian before factorial decay wins), so when the
    test function carries an exact Taylor-coefficient ratio and a Fourier
    scale the chains are accumulated in 80-bit extended precision.

    Returns (fourier_side, direct_side, fourier_tail, direct_tail).
    """
    _, alpha = F.decay
    if abs(np.real(theta)) + alpha >= 0.5 * math.pi:
        raise ValueError("need |Re theta| + alpha < pi/2 for the strip bound")
    if K < 1:
        raise ValueError("K must be >= 1")
    theta = complex(theta)

    if F.taylor_ratio is not None and F.fourier_scale is not None:
        return _emp_sides_extended(F, theta, K, F.taylor_ratio, require_decreasing)
    return _emp_sides_generic(F, theta, K, require_decreasing)


def _emp_sides_extended(F, theta, K, ratio, require_decreasing):
    two_pi_ld = 2 * _PI_LD
    phase_d = np.clongdouble(np.exp(-2j * theta))  # e^{-2 i theta}
    phase_f = np.clongdouble(np.exp(2j * theta))
    grown = np.clongdouble(F.deriv_at_0(0))   # coeff(2k) (2 pi)^(2k)
    plain = np.clongdouble(F.deriv_at_0(0))   # coeff(2k)
    scale_f = np.clongdouble(F.fourier_scale) / two_pi_ld
    direct = np.clongdouble(0.0)
    fourier = np.clongdouble(0.0)
    rot_d = np.clongdouble(1.0)
    rot_f = np.clongdouble(np.exp(1j * theta))
    last_d = last_f = np.inf
    d_tail = f_tail = 0.0
    for k in range(1, K + 1):
        num, den = ratio(2 * k)
        step = np.clongdouble(num) / np.clongdouble(den)
        grown = grown * step * _FOUR_PI_SQ_LD
        plain = plain * step
        z = _zeta_odd_ld(2 * k + 1)
        rot_d = rot_d * phase_d
        rot_f = rot_f * phase_f
        term_d = grown / z * rot_d
        term_f = plain / z * rot_f * scale_f
        direct += term_d
        fourier += term_f
        mag_d, mag_f = abs(complex(term_d)), abs(complex(term_f))
        if k == K:
            if require_decreasing and (mag_d > last_d or mag_f > last_f):
                raise ConvergenceError(
                    f"series terms still growing at K={K}; extend the truncation")
            rd = mag_d / last_d if last_d > 0 else 0.0
            rf = mag_f / last_f if last_f > 0 else 0.0
            d_tail = mag_d * rd / (1 - rd) if rd < 1 else math.inf
            f_tail = mag_f * rf / (1 - rf) if rf < 1 else math.inf
        last_d, last_f = mag_d, mag_f
    return complex(fourier), complex(direct), f_tail, d_tail


def _emp_sides_generic(F, theta, K, require_decreasing):
    direct = fourier = 0.0 + 0.0j
    last_d = last_f = np.inf
    d_tail = f_tail = 0.0
    for k in range(1, K + 1):
        zk = complex(zeta(2 * k + 1)).real
        try:
            cd = F.deriv_at_0(2 * k) / math.factorial(2 * k)
            cf = _fourier_deriv_at_0(F, 2 * k) / math.factorial(2 * k)
        except ValueError as exc:
            raise ConvergenceError(
                f"coefficients unavailable at k={k} with terms still "
                f"significant: {exc}") from None
        term_d = cd * (2.0 * math.pi) ** (2 * k) * np.exp(-2j * k * theta) / zk
        term_f = cf * np.exp((2 * k + 1) * 1j * theta) / (2.0 * math.pi * zk)
        direct += term_d
        fourier += term_f
        mag_d, mag_f = abs(term_d), abs(term_f)
        if k == K:
            if require_decreasing and (mag_d > last_d or mag_f > last_f):
                raise ConvergenceError(
                    f"series terms still growing at K={K}; extend the truncation")
            rd = mag_d / last_d if last_d > 0 else 0.0
            d_tail = mag_d * rd / (1 - rd) if rd < 1 else math.inf
            rf = mag_f / last_f if last_f > 0 else 0.0
            f_tail = mag_f * rf / (1 - rf) if rf < 1 else math.inf
        last_d, last_f = mag_d, mag_f
    return fourier, direct, f_tail, d_tail


def _fourier_deriv_at_0(F: TestFunction, k: int) -> float:
    """Fhat^(k)(0) = (-1)^(k/2) * 2 ∫_0^∞ u^k F(u) du for even k (0 for odd)."""
    if k % 2:
        return 0.0
    if F.fourier_scale is not None:
        return F.fourier_scale * F.deriv_at_0(k)
    val, _ = integrate_00_inf(lambda u: u ** k * F.value(u) + 0j, tol=1e-13)
    return (-1.0) ** (k // 2) * 2.0 * val.real
