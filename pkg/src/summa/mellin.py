"""Mellin transform, truncated-line inversion, and the kernel contour
integrand whose two evaluations (residue sums versus Mellin inversion)
produce each summation-formula / asymptotic-expansion pair.

Conventions.  All contour work happens in the variable s with integrand

    Gamma(-s) K(-s) F^(s)(0) y^s,   y > 0,

the factor 1/(2 pi i) living in the integrators.  Vertical lines are
oriented upward; rectangles are traversed counterclockwise (left edge
downward, bottom rightward, right edge upward, top leftward), so the
enclosed residue sum equals the full circuit divided by 2 pi i.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from ._quad import gl_panels, integrate_00_inf
from .errors import PoleOnBoundaryError, TailError
from .fractional import TestFunction, frac_deriv
from .special_functions import EULER_GAMMA, dirichlet_L_chi4, gamma, zeta


@dataclass(frozen=True)
class KernelSpec:
    """A Dirichlet-series kernel K(s) and its canonical contour abscissa."""

    kind: str
    kernel: Callable[[np.ndarray], np.ndarray]
    canonical_abscissa: float


def _one(s):
    return np.ones_like(np.asarray(s, dtype=complex))


KERNELS = {
    "identity": KernelSpec("identity", _one, -0.5),
    "zeta": KernelSpec("zeta", lambda s: zeta(s), -1.5),
    # the table abscissa; derivations also use -3/2 and the engine treats
    # the abscissa as a free parameter between poles
    "zeta_squared": KernelSpec("zeta_squared", lambda s: zeta(s) ** 2, -0.5),
    "zeta_L4": KernelSpec(
        "zeta_L4", lambda s: zeta(s) * dirichlet_L_chi4(s), -0.5),
    "mobius": KernelSpec(
        "mobius",
        lambda s: np.exp(-np.asarray(s, dtype=complex) * math.log(2.0 * math.pi))
        / zeta(1.0 - np.asarray(s, dtype=complex)),
        1.5,
    ),
}


def get_kernel(kind: str) -> KernelSpec:
    try:
        return KERNELS[kind]
    except KeyError:
        raise KeyError(f"unknown kernel kind {kind!r}") from None


@dataclass(frozen=True)
class VerticalContour:
    """Truncated vertical line Re s = abscissa, |Im s| <= height."""

    abscissa: float
    height: float = 60.0
    nodes: int = 32  # Gauss-Legendre nodes per height-2 panel

    def __post_init__(self):
        if self.height <= 0:
            raise ValueError("contour height must be positive")
        if self.nodes < 4:
            raise ValueError("need at least 4 nodes per panel")


@dataclass(frozen=True)
class RectanglePath:
    """Rectangle with vertices [a+iT, a-iT, b-iT, b+iT], a < b."""

    a: float
    b: float
    T: float

    def __post_init__(self):
        if not (self.a < self.b and self.T > 0):
            raise ValueError("need a < b and T > 0")


def mellin_transform(F: TestFunction, s, tol: float = 1e-11) -> complex:
    """M[F](s) = ∫_0^∞ v^(s-1) F(v) dv for Re s > 0 (F evenly extended)."""
    s = complex(s)
    if s.real <= 0:
        raise ValueError("Mellin transform needs Re s > 0 for these models")

    def integrand(v):
        return np.exp((s - 1.0) * np.log(v)) * F.value(v)

    val, _ = integrate_00_inf(integrand, tol=tol)
    return val


def line_integral(G, contour: VerticalContour, panel_height: float = 2.0):
    """(1/2 pi i) ∫ G(s) ds along the truncated vertical line.

    Returns (value, tail_estimate); the tail estimate is the magnitude of
    the contribution from the outermost tenth of the line, a proxy for
    what truncation at the cut height abandons.
    """
    c, T, nodes = contour.abscissa, contour.height, contour.nodes
    n_panels = max(2, int(math.ceil(2.0 * T / panel_height)))
    edges = np.linspace(-T, T, n_panels + 1)
    panels = gl_panels(lambda tau: G(c + 1j * tau), edges, nodes=nodes)
    total = np.sum(panels) / (2.0 * math.pi)
    n_tail = max(1, n_panels // 10)
    tail = (abs(np.sum(panels[:n_tail])) + abs(np.sum(panels[-n_tail:]))) / (2.0 * math.pi)
    return total, tail


def inverse_mellin_line(G, c: float, v: float, contour: VerticalContour | None = None,
                        tail_rel: float = 1e-8) -> complex:
    """Mellin inversion (1/2 pi i) ∫_(c-iT)^(c+iT) G(s) v^(-s) ds.

    Raises TailError when the outer-decade contribution exceeds
    ``tail_rel`` of the accumulated value, i.e. when the cut height is
    too low for the requested integrand.
    """
    if contour is None:
        contour = VerticalContour(c)
    elif contour.abscissa != c:
        contour = VerticalContour(c, contour.height, contour.nodes)
    gv = lambda s: np.asarray(G(s), dtype=complex) * np.exp(-s * math.log(v))
    total, tail = line_integral(gv, contour)
    if tail > tail_rel * max(abs(total), 1e-300):
        raise TailError(
            f"line tail {tail:.3e} exceeds {tail_rel:.1e} of |value| {abs(total):.3e};"
            f" raise the contour height")
    return total


def mother_integrand(K: KernelSpec, F: TestFunction, s, y: float):
    """Gamma(-s) K(-s) F^(s)(0) y^s (scalar s or ndarray of s).

    Uses the test function's closed-form fractional derivative when one is
    attached; otherwise each point costs a quadrature.
    """
    arr = np.asarray(s, dtype=complex)
    scalar = arr.ndim == 0
    if y <= 0:
        raise ValueError("y must be positive")
    flat = arr.ravel()
    if F.frac_closed is not None:
        fs = F.frac_closed(-flat)
    else:
        fs = np.array([frac_deriv(F, si).value for si in flat])
    out = gamma(-flat) * K.kernel(-flat) * fs * np.exp(flat * math.log(y))
    out = out.reshape(arr.shape)
    return complex(out) if scalar else out


def mother_line_integral(K: KernelSpec, F: TestFunction, c: float, y: float,
                         height: float = 60.0, nodes: int = 32):
    """(1/2 pi i) ∫_(Re s = c) Gamma(-s) K(-s) F^(s)(0) y^s ds.

    Lines through removable points (a kernel zero cancelling a Gamma pole,
    e.g. Re s = 2N for the zeta kernel) are fine: panel boundaries sit on
    the real axis so no node touches the pole, and the pole-zero product
    stays well scaled at node distance.

    Returns (value, tail_estimate).
    """
    contour = VerticalContour(c, height, nodes)

    if F.frac_closed is not None:
        def G(s):
            return gamma(-s) * K.kernel(-s) * F.frac_closed(-s) * np.exp(s * math.log(y))
    else:
        def G(s):
            flat = np.asarray(s, dtype=complex).ravel()
            fs = np.array([frac_deriv(F, si).value for si in flat])
            out = gamma(-flat) * K.kernel(-flat) * fs * np.exp(flat * math.log(y))
            return out.reshape(np.shape(s))

    return line_integral(G, contour)


@lru_cache(maxsize=64)
def _moment_integrals(F: TestFunction):
    """(∫_0^∞ F(u) du, ∫_0^∞ F(u) ln u du), cached per test function."""
    i0, _ = integrate_00_inf(lambda u: F.value(u) + 0j, tol=1e-13)
    i1, _ = integrate_00_inf(lambda u: F.value(u) * np.log(u) + 0j, tol=1e-13)
    return i0.real, i1.real


def log_moment_term(F: TestFunction, y: float) -> float:
    """-(1/t) ∫_0^∞ F(-u)(ln(u/-t) + 2 gamma) du at t = -y, F even:
    (1/y) ∫_0^∞ F(u)(ln(u/y) + 2 gamma) du."""
    i0, i1 = _moment_integrals(F)
    return (i1 + (2.0 * EULER_GAMMA - math.log(y)) * i0) / y


def _gamma_pole_residue(k: int) -> float:
    """Residue of Gamma(-s) at s = k: -(-1)^k / k!."""
    return -((-1.0) ** k) / math.factorial(k)


def integrand_poles(K: KernelSpec, F: TestFunction, y: float, a: float, b: float):
    """Poles of Gamma(-s) K(-s) F^(s)(0) y^s with a < Re s < b, and their
    residues, enumerated analytically per kernel kind.

    Returns a list of (location, residue).  The double pole of the
    zeta-squared kernel at s = -1 contributes

        -(1/y) ∫_0^∞ F(u)(ln(u/y) + 2 gamma) du,

    computed from the Laurent data of zeta(-s)^2, Gamma(-s) F^(s)(0) and
    y^s rather than by numerical differentiation.
    """
    out = []
    fval = lambda k: complex(F.deriv_at_0(k))
    fm1 = lambda: frac_deriv(F, -1).value if F.frac_closed is None \
        else F.frac_closed(np.complex128(1.0))

    k_lo = max(0, int(math.floor(a)) + 1)
    k_hi = int(math.ceil(b)) - 1

    if K.kind == "identity":
        for k in range(k_lo, k_hi + 1):
            out.append((complex(k), _gamma_pole_residue(k) * fval(k) * y ** k))
    elif K.kind == "zeta":
        if a < -1 < b:
            out.append((complex(-1), -fm1() / y))
        for k in range(k_lo, k_hi + 1):
            if k >= 2 and k % 2 == 0:
                continue  # trivial zero of zeta(-s) cancels the Gamma pole
            out.append((complex(k),
                        _gamma_pole_residue(k) * complex(zeta(-k)) * fval(k) * y ** k))
    elif K.kind == "zeta_squared":
        if a < -1 < b:
            out.append((complex(-1), complex(-log_moment_term(F, y))))
        for k in range(k_lo, k_hi + 1):
            if k >= 2 and k % 2 == 0:
                continue  # double zero beats the simple Gamma pole
            out.append((complex(k),
                        _gamma_pole_residue(k) * complex(zeta(-k)) ** 2 * fval(k) * y ** k))
    elif K.kind == "zeta_L4":
        if a < -1 < b:
            out.append((complex(-1), -(math.pi / 4.0) * fm1() / y))
        if a < 0 < b:
            out.append((complex(0), _gamma_pole_residue(0)
                        * complex(zeta(0)) * complex(dirichlet_L_chi4(0)) * fval(0)))
        # every Gamma pole at k >= 1 is cancelled by a zero of zeta or of L
    elif K.kind == "mobius":
        if a < -0.4:
            raise PoleOnBoundaryError(
                "mobius-kernel rectangles must stay right of Re s = -0.4: "
                "poles at shifted nontrivial zeta zeros obstruct the strip")
        for k in range(max(k_lo, 1), k_hi + 1):
            out.append((complex(k),
                        _gamma_pole_residue(k) * (2.0 * math.pi) ** k * fval(k)
                        * y ** k / complex(zeta(k + 1))))
    else:
        raise KeyError(f"unknown kernel kind {K.kind!r}")
    return out


def rectangle_residue_sum(K: KernelSpec, F: TestFunction, path: RectanglePath,
                          y: float) -> complex:
    """Sum of residues of the kernel integrand strictly inside ``path``.

    Equals the counterclockwise circuit integral divided by 2 pi i.  The
    boundary must keep a distance of at least 1e-6 from every pole.
    """
    poles = integrand_poles(K, F, y, path.a - 1.0, path.b + 1.0)
    total = 0.0 + 0.0j
    for loc, res in poles:
        d = min(abs(loc.real - path.a), abs(loc.real - path.b))
        if d < 1e-6:
            raise PoleOnBoundaryError(f"pole at s = {loc} sits on the contour")
        if path.a < loc.real < path.b and abs(loc.imag) < path.T:
            total += res
    return total


def rectangle_quadrature(K: KernelSpec, F: TestFunction, path: RectanglePath,
                         y: float, nodes: int = 32, panel: float = 2.0) -> complex:
    """(1/2 pi i) ∮ of the kernel integrand, counterclockwise: left edge
    downward, bottom rightward, right edge upward, top leftward."""
    a, b, T = path.a, path.b, path.T
    f = lambda s: mother_integrand(K, F, s, y)

    def seg(p0: complex, p1: complex) -> complex:
        length = abs(p1 - p0)
        direction = (p1 - p0) / length
        n_panels = max(1, int(math.ceil(length / panel)))
        edges = np.linspace(0.0, length, n_panels + 1)
        vals = gl_panels(lambda x: f(p0 + direction * x), edges, nodes=nodes)
        return np.sum(vals) * direction

    circuit = (
        seg(a + 1j * T, a - 1j * T)
        + seg(a - 1j * T, b - 1j * T)
        + seg(b - 1j * T, b + 1j * T)
        + seg(b + 1j * T, a + 1j * T)
    )
    return circuit / (2j * math.pi)


def ramanujan_check(F: TestFunction, s, tol: float = 1e-11):
    """Master-formula interpolation check for 0 < Re s < 1.

    lhs: pi / sin(pi s) * Phi(-s) with Phi(z) = F^(z)(0) / Gamma(z+1);
    rhs: ∫_0^∞ x^(s-1) F(-x) dx by quadrature.  For F equal to its Taylor
    series, Phi interpolates the Taylor coefficients and both sides agree.
    """
    s = complex(s)
    if not 0 < s.real < 1:
        raise ValueError("need 0 < Re s < 1")
    phi = (F.frac_closed(np.complex128(s)) if F.frac_closed is not None
           else frac_deriv(F, -s).value) / gamma(1.0 - s)
    lhs = math.pi / np.sin(math.pi * s) * phi

    def integrand(x):
        return np.exp((s - 1.0) * np.log(x)) * F.value_one_sided(-x)

    rhs, _ = integrate_00_inf(integrand, tol=tol)
    return lhs, rhs
