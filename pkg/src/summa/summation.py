"""Both sides of the proper summation formulae: Poisson, Voronoi (Bessel
and cosine kernel forms), Circle (J0 and sine forms), and Moebius-Poisson,
with tail-controlled truncation and residual reporting.

The oscillatory kernel-transform tails substitute v = 1/x and sum
zero-to-zero panels with alternating-series acceleration; the Bessel-form
integrals treat the monotone K0 part and the oscillatory Y0/J0 part on the
same panels but lean on a tanh-sinh head for the logarithmic origin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._quad import gl_panels, integrate_finite, oscillatory_tail
from .arithmetic import ArithmeticTables, default_tables
from .errors import TailBoundError, ZeroProximityError
from .fractional import TestFunction, frac_deriv
from .mellin import VerticalContour, line_integral, log_moment_term
from .special_functions import bessel_j0, bessel_k0, bessel_y0, zeta


@dataclass(frozen=True)
class SummationReport:
    formula: str
    y: float
    lhs: float
    rhs: float
    lhs_tail_bound: float
    rhs_tail_bound: float
    terms_used: int

    @property
    def residual(self) -> float:
        return abs(self.lhs - self.rhs)

    def as_dict(self) -> dict:
        return {
            "formula": self.formula,
            "y": self.y,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "residual": self.residual,
            "lhs_tail_bound": self.lhs_tail_bound,
            "rhs_tail_bound": self.rhs_tail_bound,
            "terms_used": self.terms_used,
        }


def _envelope(F: TestFunction):
    if F.envelope is not None:
        return F.envelope
    return lambda t: np.abs(np.asarray(F.value(t), dtype=float))


def _env_tail(F: TestFunction, y: float, n_from: int, w_bound, horizon: int = 256) -> float:
    """Bound on sum_{n >= n_from} w_n |F(n y)| from the decay envelope:
    explicit terms over a horizon plus a crude continuation beyond it."""
    env = _envelope(F)
    ns = np.arange(n_from, n_from + horizon, dtype=float)
    vals = w_bound(ns) * np.asarray(env(ns * y), dtype=float)
    beyond = ns[-1] + 1.0
    return float(np.sum(vals) + horizon * w_bound(beyond) * float(env(np.array([beyond * y]))[0]))


def weighted_sum(weights: str, F: TestFunction, y: float, tol: float = 1e-12,
                 tables: ArithmeticTables | None = None):
    """Truncated weighted sum of F.

    weights 'ones', 'd', 'r': sum_{n>=1} w_n F(n y), cut once the decay
    envelope certifies the remaining tail below ``tol``.
    weights 'mobius_over_n': sum_{n>=1} (mu_n/n) F(2 pi y / n), the
    Moebius-inverted shape; its terms approach (mu_n/n) F(0), so the
    reported tail is the empirical envelope of the recent partial-sum
    oscillation, not a certified bound.

    Returns (value, tail_bound).
    """
    if y <= 0:
        raise ValueError("y must be positive")
    tables = tables if tables is not None else default_tables()
    N = tables.limit

    if weights == "mobius_over_n":
        n = np.arange(1, N + 1, dtype=float)
        terms = (tables.mu[1:] / n) * np.asarray(F.value(2.0 * math.pi * y / n), dtype=float)
        partial = np.cumsum(terms)
        value = float(partial[-1])
        recent = partial[-(N // 10):]
        tail = float(np.max(np.abs(recent - value)))
        return value, tail

    if weights == "ones":
        w = None
        w_bound = lambda n: np.ones_like(np.asarray(n, dtype=float))
    elif weights == "d":
        w = tables.d
        w_bound = lambda n: np.asarray(n, dtype=float)
    elif weights == "r":
        w = tables.r
        w_bound = lambda n: 4.0 * np.asarray(n, dtype=float)
    else:
        raise KeyError(f"unknown weight kind {weights!r}")

    total = 0.0
    n0, block = 1, 64
    while n0 <= N:
        n1 = min(N, n0 + block - 1)
        ns = np.arange(n0, n1 + 1)
        wv = 1.0 if w is None else w[ns]
        total += float(np.sum(wv * np.asarray(F.value(ns * y), dtype=float)))
        tail = _env_tail(F, y, n1 + 1, w_bound)
        if tail < tol:
            return total, tail
        n0, block = n1 + 1, block * 2
    raise TailBoundError(
        f"envelope cannot certify tail below {tol:.1e} within table limit {N}")


def poisson_check(F: TestFunction, y: float, tol: float = 1e-15) -> SummationReport:
    """sum_{n in Z} F(n y)  versus  (1/y) sum_{n in Z} Fhat(2 pi n / y)."""
    if y <= 0:
        raise ValueError("y must be positive")

    def symmetric_sum(f, step, center):
        total, n, streak = center, 1, 0
        while streak < 3:
            t = float(f(n * step))
            total += 2.0 * t
            streak = streak + 1 if abs(t) < tol else 0
            n += 1
            if n > 10_000_000:
                raise TailBoundError("term decay never certified the cut")
        return total, n - 1

    lhs, n_lhs = symmetric_sum(lambda t: F.value(t), y, float(F.value(0.0)))
    rhs_raw, n_rhs = symmetric_sum(lambda t: F.fourier(t), 2.0 * math.pi / y,
                                   float(F.fourier(0.0)))
    rhs = rhs_raw / y
    ones = lambda n: np.ones_like(np.asarray(n, dtype=float))
    lhs_tail = 2.0 * _env_tail(F, y, n_lhs + 1, ones)
    return SummationReport("poisson", y, lhs, rhs, lhs_tail, 2.0 * tol / y,
                           n_lhs + n_rhs)


# --- kernel-transform integrals -------------------------------------------

def _series_support(F: TestFunction, tiny: float = 1e-20) -> float:
    """x beyond which the envelope certifies |F| below ``tiny``."""
    env = _envelope(F)
    x = 1.0
    while float(env(np.array([x]))[0]) > tiny and x < 1e8:
        x *= 1.25
    return x


def _fhat_support(F: TestFunction, tiny: float = 1e-19) -> float:
    """x beyond which |Fhat(x)| stays below ``tiny`` (sampled decay)."""
    x = 1.0
    while abs(float(np.asarray(F.fourier(x)))) > tiny and x < 1e6:
        x *= 1.5
    return x


def _bessel_kernel_integral(F: TestFunction, a: float, kind: str,
                            w_max: float, gl_nodes: int = 12) -> float:
    """2 ∫_0^∞ kernel(a w) F(w^2) w dw (the x = w^2 form of the kernel
    transform at scaled frequency a).

    kind 'voronoi': kernel (2/pi) K0 - Y0, whose logarithmic origin goes to
    a tanh-sinh head panel; kind 'j0': kernel J0, smooth everywhere.
    """
    if kind == "voronoi":
        kernel = lambda z: (2.0 / math.pi) * bessel_k0(z) - bessel_y0(z)
        head_end = min(math.pi / a, w_max)
    else:
        kernel = bessel_j0
        head_end = 0.0

    def f(w):
        w = np.asarray(w, dtype=float)
        out = np.zeros_like(w)
        pos = w > 0
        out[pos] = kernel(a * w[pos]) * np.asarray(F.value(w[pos] ** 2), dtype=float) \
            * 2.0 * w[pos]
        return out

    total = 0.0
    if head_end > 0.0:
        head, _ = integrate_finite(lambda w: f(w) + 0j, 0.0, head_end, tol=1e-13)
        total += head.real
    if head_end < w_max:
        spacing = math.pi / a  # period-matched panels; no sign alignment needed
        n_panels = int(math.ceil((w_max - head_end) / spacing)) + 1
        edges = head_end + spacing * np.arange(n_panels + 1)
        total += float(np.sum(gl_panels(f, edges, nodes=gl_nodes).real))
    return total


def _reciprocal_oscillatory(Fhat, c: float, v_lo: float, v_break: float,
                            phase: str, gl_nodes: int = 12):
    """∫_0^∞ trig(c v) Fhat(1/v) dv / v for trig = cos or sin.

    Head below the first kernel zero by tanh-sinh (the transform factor
    kills v -> 0), a directly-summed region out to the first zero past
    ``v_break``, then accelerated alternating zero-to-zero panel sums for
    the 1/v tail.  The direct grid is the union of the kernel zeros and a
    curvature-adapted geometric grid: Fhat(1/v) has a boundary layer of
    width ~ v^3 / (decay scale) that fixed-width panels under-resolve.
    Returns (value, tail_estimate).
    """
    spacing = math.pi / c
    if phase == "cos":
        trig, z0 = np.cos, 0.5 * math.pi / c
    else:
        trig, z0 = np.sin, math.pi / c

    def f(v):
        v = np.asarray(v, dtype=float)
        out = np.zeros_like(v)
        pos = v > 0.25 * v_lo
        vv = v[pos]
        out[pos] = trig(c * vv) * np.asarray(Fhat(1.0 / vv), dtype=float) / vv
        return out

    if z0 >= v_lo:
        start, head_lo = z0, v_lo
    else:
        j = math.ceil((v_lo - z0) / spacing)
        start = z0 + j * spacing
        head_lo = start - spacing
    total = 0.0
    if start > head_lo:
        head, _ = integrate_finite(lambda v: f(v) + 0j, head_lo, start, tol=1e-13)
        total += head.real

    n_direct = max(1, int(math.ceil((v_break - start) / spacing)))
    z_break = start + n_direct * spacing
    zero_edges = start + spacing * np.arange(n_direct + 1)
    geo = []
    v = max(start, 0.8 * v_lo, 0.02)
    while v < min(1.2, z_break):
        geo.append(v)
        v *= 1.0 + 0.25 * v * v
    edges = np.union1d(zero_edges, np.asarray(geo))
    edges = edges[(edges >= start) & (edges <= z_break)]
    total += float(np.sum(gl_panels(f, edges, nodes=12).real))

    val, tail = oscillatory_tail(f, z_break, spacing, 0,
                                 accel_panels=24, gl_nodes=gl_nodes)
    return total + val, tail


def _kernel_series(F, y, n_max, tables, weight, term_fn, prefactor):
    """Common n-loop: sum prefactor * w_n * term(n) with early cut once the
    per-term contributions stay below resolution, plus a tail bound."""
    total, used, streak, tail_bound = 0.0, 0, 0, 0.0
    for n in range(1, n_max + 1):
        wn = weight(n)
        if wn == 0:
            continue
        val, osc_tail = term_fn(n)
        contrib = prefactor * wn * val
        total += contrib
        tail_bound += abs(prefactor * wn) * osc_tail
        used = n
        streak = streak + 1 if abs(contrib) < 5e-16 else 0
        if streak >= 5:
            tail_bound += abs(contrib) * (n_max - n)
            break
    return total, tail_bound, used


def voronoi_rhs_bessel(F: TestFunction, y: float, n_max: int = 400,
                       tables: ArithmeticTables | None = None) -> float:
    """Kernel-transform side of the divisor summation formula:

        (1/y) ∫_0^∞ F(u)(ln(u/y) + 2 gamma) du + F(0)/4
        + (2 pi / y) sum_{n<=n_max} d_n ∫_0^∞ [(2/pi) K0 - Y0](4 pi sqrt(n x / y)) F(x) dx.
    """
    v, _, _ = _voronoi_bessel_parts(F, y, n_max, tables)
    return v


def _voronoi_bessel_parts(F, y, n_max, tables):
    tables = tables if tables is not None else default_tables()
    analytic = log_moment_term(F, y) + 0.25 * float(F.value(0.0))
    w_max = math.sqrt(_series_support(F))
    term = lambda n: (_bessel_kernel_integral(
        F, 4.0 * math.pi * math.sqrt(n / y), "voronoi", w_max), 0.0)
    s, tail, used = _kernel_series(F, y, n_max, tables,
                                   lambda n: int(tables.d[n]), term,
                                   2.0 * math.pi / y)
    return analytic + s, tail, used


def voronoi_rhs_cosine(F: TestFunction, y: float, n_max: int = 400,
                       tables: ArithmeticTables | None = None) -> float:
    """Cosine-kernel form of the divisor summation formula:

        (1/y) ∫_0^∞ F(u)(ln(u/y) + 2 gamma) du + F(0)/4
        + (2/y) sum_{n<=n_max} d_n ∫_0^∞ cos(4 pi^2 n / (x y)) Fhat(x) dx / x.
    """
    v, _, _ = _voronoi_cosine_parts(F, y, n_max, tables)
    return v


def _voronoi_cosine_parts(F, y, n_max, tables):
    tables = tables if tables is not None else default_tables()
    analytic = log_moment_term(F, y) + 0.25 * float(F.value(0.0))
    v_lo = 1.0 / _fhat_support(F)
    term = lambda n: _reciprocal_oscillatory(
        F.fourier, 4.0 * math.pi ** 2 * n / y, v_lo, 1.6, "cos")
    s, tail, used = _kernel_series(F, y, n_max, tables,
                                   lambda n: int(tables.d[n]), term, 2.0 / y)
    return analytic + s, tail, used


def circle_rhs_j0(F: TestFunction, y: float, n_max: int = 400,
                  tables: ArithmeticTables | None = None) -> float:
    """J0-kernel side of the two-squares summation formula:

        (pi/y) ∫_0^∞ F + (pi/y) sum_{n<=n_max} r_n ∫_0^∞ J0(2 pi sqrt(n x / y)) F(x) dx,

    equal to sum_{n>=0} r_n F(n y)."""
    v, _, _ = _circle_j0_parts(F, y, n_max, tables)
    return v


def _leading_integral(F) -> float:
    v, _ = integrate_finite(lambda u: np.asarray(F.value(u), dtype=float) + 0j,
                            0.0, _series_support(F), tol=1e-13)
    return v.real


def _circle_j0_parts(F, y, n_max, tables):
    tables = tables if tables is not None else default_tables()
    analytic = math.pi / y * _leading_integral(F)
    w_max = math.sqrt(_series_support(F))
    term = lambda n: (_bessel_kernel_integral(
        F, 2.0 * math.pi * math.sqrt(n / y), "j0", w_max), 0.0)
    s, tail, used = _kernel_series(F, y, n_max, tables,
                                   lambda n: int(tables.r[n]), term, math.pi / y)
    return analytic + s, tail, used


def circle_rhs_sine(F: TestFunction, y: float, n_max: int = 400,
                    tables: ArithmeticTables | None = None) -> float:
    """Sine-kernel form of the two-squares summation formula:

        (pi/y) ∫_0^∞ F + (1/y) sum_{n<=n_max} r_n ∫_0^∞ sin(pi^2 n / (y u)) Fhat(u) du / u.
    """
    v, _, _ = _circle_sine_parts(F, y, n_max, tables)
    return v


def _circle_sine_parts(F, y, n_max, tables):
    tables = tables if tables is not None else default_tables()
    analytic = math.pi / y * _leading_integral(F)
    v_lo = 1.0 / _fhat_support(F)
    term = lambda n: _reciprocal_oscillatory(
        F.fourier, math.pi ** 2 * n / y, v_lo, 1.6, "sin")
    s, tail, used = _kernel_series(F, y, n_max, tables,
                                   lambda n: int(tables.r[n]), term, 1.0 / y)
    return analytic + s, tail, used


def voronoi_check(F: TestFunction, y: float, n_max: int = 400,
                  form: str = "cosine",
                  tables: ArithmeticTables | None = None) -> SummationReport:
    """Divisor-weighted sum versus its kernel-transform side."""
    tables = tables if tables is not None else default_tables()
    lhs, lhs_tail = weighted_sum("d", F, y, tables=tables)
    parts = _voronoi_cosine_parts if form == "cosine" else (
        _voronoi_bessel_parts if form == "bessel" else None)
    if parts is None:
        raise KeyError(f"unknown voronoi form {form!r}")
    rhs, rhs_tail, used = parts(F, y, n_max, tables)
    return SummationReport(f"voronoi-{form}", y, lhs, rhs, lhs_tail, rhs_tail, used)


def circle_check(F: TestFunction, y: float, n_max: int = 400,
                 form: str = "sine",
                 tables: ArithmeticTables | None = None) -> SummationReport:
    """Two-squares-weighted sum (n >= 0, r_0 = 1) versus its transform side."""
    tables = tables if tables is not None else default_tables()
    s, lhs_tail = weighted_sum("r", F, y, tables=tables)
    lhs = float(F.value(0.0)) + s
    parts = _circle_sine_parts if form == "sine" else (
        _circle_j0_parts if form == "j0" else None)
    if parts is None:
        raise KeyError(f"unknown circle form {form!r}")
    rhs, rhs_tail, used = parts(F, y, n_max, tables)
    return SummationReport(f"circle-{form}", y, lhs, rhs, lhs_tail, rhs_tail, used)


# --- Moebius-Poisson -------------------------------------------------------

def zero_avoiding_height(ordinates, near: float) -> float:
    """Truncation height at a midpoint between consecutive zeta-zero
    ordinates closest to ``near`` (midpoints maximise the distance from the
    tabulated zeros)."""
    g = np.sort(np.asarray(ordinates, dtype=float))
    if len(g) < 2:
        raise ValueError("need at least two ordinates")
    if near <= g[0]:
        return 0.5 * g[0]
    if near >= g[-1]:
        return g[-1] + 0.5 * (g[-1] - g[-2])
    i = int(np.searchsorted(g, near))
    return 0.5 * (g[i - 1] + g[i])


def _mobius_series_sides(F: TestFunction, y: float, N: int,
                         tables: ArithmeticTables):
    """(transform side, direct side) of the Moebius-inverted pair, summed
    with the limits Fhat(0) and F(0) subtracted: the weights mu_n/n sum to
    zero, which upgrades conditional convergence to an absolute 1/n^3 tail.

    Returns (fhat_side, f_side, tail_estimate)."""
    n = np.arange(1, N + 1, dtype=float)
    mu = tables.mu[1:N + 1]
    fhat0 = float(np.asarray(F.fourier(0.0)))
    f0 = float(F.value(0.0))
    g1 = (mu / n) * (np.asarray(F.fourier(1.0 / (n * y)), dtype=float) - fhat0)
    g2 = (mu / n) * (np.asarray(F.value(2.0 * math.pi * y / n), dtype=float) - f0)
    # |terms| ~ C/n^3, so the omitted tail is about |last| * N / 2
    tail = (abs(g1[-1]) / (2.0 * math.pi * y) + abs(g2[-1])) * N / 2.0
    return float(np.sum(g1)) / (2.0 * math.pi * y), float(np.sum(g2)), tail


def mobius_poisson_defect(F: TestFunction, y: float, height: float = 60.0,
                          zero_ordinates=None, nodes: int = 32,
                          series_limit: int = 200_000,
                          tables: ArithmeticTables | None = None):
    """The defect of naively Moebius-inverting the Poisson formula.

    Contour value: (1/2 pi i) [∫_(Re s = 3/2) - ∫_(Re s = -1/2)] of
        F^(-s)(0) y^(-s) / (2 cos(pi s / 2) zeta(s)) ds,
    truncated at a zero-avoiding height.  Series value:

        (1/(2 pi y)) sum mu_n/n Fhat(1/(n y)) - sum mu_n/n F(2 pi y / n).

    Returns (defect_contour, defect_series); both are real for real even F,
    and nonzero: the naive inversion fails at exactly this magnitude.
    """
    if y <= 0:
        raise ValueError("y must be positive")
    if zero_ordinates is not None:
        g = np.asarray(zero_ordinates, dtype=float)
        if np.any(np.abs(g - height) < 1e-3):
            raise ZeroProximityError(
                f"height {height} is within 1e-3 of a tabulated zero ordinate")
        height = zero_avoiding_height(g, height)

    if F.frac_closed is not None:
        fneg = F.frac_closed
    else:
        fneg = lambda s: np.array([frac_deriv(F, -si).value
                                   for si in np.atleast_1d(s)]).reshape(np.shape(s))

    def integrand(s):
        return (np.asarray(fneg(s), dtype=complex) * np.exp(-s * math.log(y))
                / (2.0 * np.cos(0.5 * math.pi * s) * zeta(s)))

    right, _ = line_integral(integrand, VerticalContour(1.5, height, nodes))
    left, _ = line_integral(integrand, VerticalContour(-0.5, height, nodes))
    defect_contour = complex(right - left).real

    tables = tables if tables is not None else default_tables()
    N = min(series_limit, tables.limit)
    fhat_side, f_side, _ = _mobius_series_sides(F, y, N, tables)
    return defect_contour, fhat_side - f_side


def mobius_check(F: TestFunction, y: float, naive: bool = False,
                 series_limit: int = 200_000,
                 tables: ArithmeticTables | None = None,
                 **kwargs) -> SummationReport:
    """With ``naive=False``: contour defect (lhs) against series defect
    (rhs); the residual is the error of the defect computation itself.
    With ``naive=True``: the two sides of the uncorrected inversion, whose
    residual IS the defect magnitude and stays above machine noise."""
    tables = tables if tables is not None else default_tables()
    if naive:
        N = min(series_limit, tables.limit)
        fhat_side, f_side, tail = _mobius_series_sides(F, y, N, tables)
        return SummationReport("mobius-naive", y, f_side, fhat_side,
                               tail, tail, N)
    contour, series = mobius_poisson_defect(
        F, y, series_limit=series_limit, tables=tables, **kwargs)
    return SummationReport("mobius-poisson", y, contour, series, 0.0, 0.0,
                           min(series_limit, tables.limit))
