"""Riemann-Liouville fractional derivative F^(s)(0) of rapidly decreasing
test functions, with holomorphic continuation across Re s >= 0.

For Re s < 0 the defining integral

    F^(s)(0) = (1/Gamma(-s)) \\int_0^inf u^(-s-1) F(-u) du

converges; for larger Re s the order-shift identity
F^(s)(0) = (d^n F)^(s-n)(0) pushes the exponent back into the convergent
range.  Test functions are even extensions of functions given on t <= 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from ._quad import integrate_00_inf, integrate_finite
from .special_functions import gamma

_INT_RADIUS = 1e-12


@dataclass(frozen=True)
class TestFunction:
    """A model test function: even, smooth, rapidly decreasing.

    ``value_one_sided`` is the caller's function on t <= 0; the even
    extension to all of R is this class's responsibility.  ``deriv_fn``
    must supply the k-th derivative wherever the order-shift identity
    needs it, and ``decay = (A, alpha)`` certifies the strip bound
    |F^(-s)(0)| <= A exp(alpha |Im s|) used by the Moebius-Poisson
    machinery.
    """

    __test__ = False  # bare "Test" prefix; not a pytest suite

    name: str
    value_one_sided: Callable[[np.ndarray], np.ndarray]
    deriv_at_0: Callable[[int], float]
    deriv_fn: Callable[[int, np.ndarray], np.ndarray]
    fourier: Callable[[np.ndarray], np.ndarray]
    decay: tuple[float, float]
    frac_closed: Optional[Callable[[complex], complex]] = None
    envelope: Optional[Callable[[np.ndarray], np.ndarray]] = None
    # Fhat = fourier_scale * F when the function is its own transform shape
    fourier_scale: Optional[float] = None
    # exact rational (num, den) with coeff(k)/coeff(k-2) = num/den for the
    # Taylor coefficients coeff(k) = F^(k)(0)/k!; lets cancellation-heavy
    # series run their coefficient chains in extended precision
    taylor_ratio: Optional[Callable[[int], tuple[float, float]]] = None

    def value(self, t):
        """F at t, evenly extended: F(t) = F(-|t|)."""
        t = np.asarray(t, dtype=float)
        out = self.value_one_sided(-np.abs(t))
        return float(out) if out.ndim == 0 else out

    def frac(self, s, tol: float = 1e-12) -> complex:
        """F^(s)(0), preferring the closed form when one is attached."""
        if self.frac_closed is not None:
            return self.frac_closed(-np.asarray(s, dtype=complex))
        return frac_deriv(self, s, tol=tol).value


@dataclass(frozen=True)
class FracDerivResult:
    value: complex
    shift_order_used: int
    quadrature_error_estimate: float


def frac_deriv(F: TestFunction, s, tol: float = 1e-12,
               shift_order: int | None = None) -> FracDerivResult:
    """Fractional derivative F^(s)(0) of complex order s.

    Nonnegative integer s routes straight to the stored derivatives
    (no 0*inf ambiguity against 1/Gamma(-s)).  Otherwise the order is
    shifted by n = max(0, ceil(Re s) + 2) and the integral evaluated by
    a double-exponential rule; the u -> 0 endpoint then behaves like
    u^(n - Re s - 1) with exponent >= 1.  ``shift_order`` overrides n
    (it must keep Re s - n negative for convergence).
    """
    s = complex(s)
    if abs(s.imag) < _INT_RADIUS and abs(s.real - round(s.real)) < _INT_RADIUS \
            and round(s.real) >= 0:
        return FracDerivResult(complex(F.deriv_at_0(int(round(s.real)))), 0, 0.0)
    if shift_order is not None:
        n = shift_order
    elif s.real <= -0.5:
        n = 0
    elif s.real < 0:
        # direct evaluation would leave a u^(-Re s) endpoint with exponent
        # near zero; a two-order shift keeps the integrand decaying at u -> 0
        n = 2
    else:
        n = int(math.ceil(s.real)) + 2
    if n - s.real <= 0:
        raise ValueError("shift order must exceed Re s")
    a = n - s - 1.0  # exponent of u in the shifted integrand

    def integrand(u):
        fu = F.deriv_fn(n, -u) if n else F.value_one_sided(-u)
        return np.exp(a * np.log(u)) * fu

    raw, err = integrate_00_inf(integrand, tol=tol)
    g = gamma(n - s)
    return FracDerivResult(raw / g, n, abs(err / g))


def gaussian_frac_closed(s) -> complex:
    """F^(-s)(0) for the Gaussian F(t) = exp(-t^2/2):

        F^(-s)(0) = Gamma(s/2) / Gamma(s) * 2^(s/2 - 1).

    Entire in s: at s = 0, -2, -4, ... the two Gamma poles cancel (limit
    equals the integer-order derivative), and odd negative s give zeros.
    Accepts scalars or arrays.
    """
    arr = np.asarray(s, dtype=complex)
    scalar = arr.ndim == 0
    flat = arr.ravel()
    out = np.empty(flat.shape, dtype=complex)
    near_int = (np.abs(flat.imag) < 1e-9) & (
        np.abs(flat.real - np.round(flat.real)) < 1e-9) & (np.round(flat.real) <= 0)
    if np.any(near_int):
        ks = (-np.round(flat[near_int].real)).astype(int)
        out[near_int] = [_gaussian_deriv_at_0(k) for k in ks]
    rest = ~near_int
    if np.any(rest):
        sr = flat[rest]
        out[rest] = (gamma(0.5 * sr) / gamma(sr)
                     * np.exp((0.5 * sr - 1.0) * math.log(2.0)))
    out = out.reshape(arr.shape)
    return complex(out) if scalar else out


def _gaussian_deriv_at_0(k: int) -> float:
    if k % 2:
        return 0.0
    n = k // 2
    # (2n)! (-1)^n / (2^n n!)
    v = 1.0
    for j in range(n + 1, 2 * n + 1):
        v *= j
    return v * (-1.0) ** n / 2.0 ** n


def _hermite_deriv(k: int, t: np.ndarray) -> np.ndarray:
    """d^k/dt^k exp(-t^2/2) = (-1)^k He_k(t) exp(-t^2/2).

    Beyond |t| = 40 the value underflows double precision for every
    tabulated order, and the raw polynomial would overflow first."""
    raw = np.asarray(t, dtype=float)
    dead = np.abs(raw) > 40.0
    t = np.where(dead, 0.0, raw)
    if k == 0:
        return np.where(dead, 0.0, np.exp(-0.5 * t * t))
    h_prev = np.ones_like(t)
    h = t.copy()
    for j in range(1, k):
        h, h_prev = t * h - j * h_prev, h
    return np.where(dead, 0.0, (-1.0) ** k * h * np.exp(-0.5 * t * t))


def _gaussian() -> TestFunction:
    sq2pi = math.sqrt(2.0 * math.pi)
    return TestFunction(
        name="gaussian",
        value_one_sided=lambda t: np.exp(-0.5 * np.asarray(t, dtype=float) ** 2),
        deriv_at_0=_gaussian_deriv_at_0,
        deriv_fn=_hermite_deriv,
        fourier=lambda x: sq2pi * np.exp(-0.5 * np.asarray(x, dtype=float) ** 2),
        frac_closed=gaussian_frac_closed,
        decay=(2.0, 0.7),
        envelope=lambda t: np.exp(-0.5 * np.asarray(t, dtype=float) ** 2),
        fourier_scale=sq2pi,
        taylor_ratio=lambda k: (-1.0, float(k)),
    )


# --- sech^2: derivatives are polynomials in tanh t ---

def _sech2_polys(k_max: int):
    """P_k with F^(k)(t) = P_k(tanh t), via P_{k+1} = P_k' * (1 - u^2)."""
    polys = [np.poly1d([-1.0, 0.0, 1.0])]  # 1 - u^2
    shrink = polys[0]
    for _ in range(k_max):
        polys.append(polys[-1].deriv() * shrink)
    return polys


_SECH2_POLYS = _sech2_polys(64)


def _sech2_deriv(k: int, t: np.ndarray) -> np.ndarray:
    if k >= len(_SECH2_POLYS):
        raise ValueError(f"sech^2 derivatives tabulated up to order {len(_SECH2_POLYS)-1}")
    return _SECH2_POLYS[k](np.tanh(np.asarray(t, dtype=float)))


def _sech_square() -> TestFunction:
    def fourier(x):
        # pi x / sinh(pi x / 2), with the removable point at x = 0 -> 2
        x = np.asarray(x, dtype=float)
        safe = np.where(np.abs(x) < 1e-8, 1.0, x)
        out = np.where(np.abs(x) < 1e-8, 2.0,
                       np.pi * safe / np.sinh(0.5 * np.pi * safe))
        return float(out) if x.ndim == 0 else out

    return TestFunction(
        name="sech_square",
        value_one_sided=lambda t: 1.0 / np.cosh(np.asarray(t, dtype=float)) ** 2,
        deriv_at_0=lambda k: float(_sech2_deriv(k, np.zeros(()))),
        deriv_fn=_sech2_deriv,
        fourier=fourier,
        decay=(6.0, 0.8),
        envelope=lambda t: 4.0 * np.exp(-2.0 * np.abs(np.asarray(t, dtype=float))),
    )


# --- smooth bump: exp(1 - 9/(9 - t^2)) on |t| < 3, zero outside ---

_BUMP_HALF_WIDTH = 3.0


def _bump_value(t):
    t = np.asarray(t, dtype=float)
    out = np.zeros_like(t)
    inside = np.abs(t) < _BUMP_HALF_WIDTH
    w = t[inside]
    out[inside] = np.exp(1.0 - 9.0 / (9.0 - w * w))
    return out


def _bump_numerators(k_max: int):
    """F^(k) = F * N_k(t) / (9 - t^2)^(2k) with polynomial N_k.

    Recurrence from F' = F * g', g'(t) = -18 t / (9 - t^2)^2:
        N_{k+1} = (N_k' * (9 - t^2) + 4 k t N_k) (9 - t^2) - 18 t N_k.
    """
    den = np.poly1d([-1.0, 0.0, 9.0])  # 9 - t^2
    tt = np.poly1d([1.0, 0.0])
    nums = [np.poly1d([1.0])]
    for k in range(k_max):
        nk = nums[-1]
        nums.append((nk.deriv() * den + 4.0 * k * tt * nk) * den - 18.0 * tt * nk)
    return nums


_BUMP_NUMS = _bump_numerators(14)


def _bump_deriv(k: int, t: np.ndarray) -> np.ndarray:
    if k >= len(_BUMP_NUMS):
        raise ValueError(f"bump derivatives tabulated up to order {len(_BUMP_NUMS)-1}")
    t = np.asarray(t, dtype=float)
    out = np.zeros_like(t)
    inside = np.abs(t) < _BUMP_HALF_WIDTH - 1e-12
    w = t[inside]
    out[inside] = (_bump_value(w) * _BUMP_NUMS[k](w)
                   / (9.0 - w * w) ** (2 * k))
    return out


def _bump() -> TestFunction:
    def fourier(x):
        x = np.asarray(x, dtype=float)
        flat = np.atleast_1d(x)
        vals = np.empty(flat.shape)
        for i, xi in enumerate(flat):
            v, _ = integrate_finite(
                lambda u, xi=xi: _bump_value(u) * np.cos(xi * u),
                0.0, _BUMP_HALF_WIDTH, tol=1e-13)
            vals[i] = 2.0 * v.real
        return float(vals[0]) if x.ndim == 0 else vals.reshape(x.shape)

    return TestFunction(
        name="bump",
        value_one_sided=_bump_value,
        deriv_at_0=lambda k: float(_bump_deriv(k, np.zeros(1))[0]),
        deriv_fn=_bump_deriv,
        fourier=fourier,
        decay=(8.0, 1.2),
        envelope=lambda t: np.where(np.abs(np.asarray(t, dtype=float)) < _BUMP_HALF_WIDTH, 1.0, 0.0),
    )


def builtin_test_functions() -> list[TestFunction]:
    """The bundled models: gaussian (with closed forms), sech_square, bump."""
    return [_gaussian(), _sech_square(), _bump()]


def get_test_function(name: str) -> TestFunction:
    for f in builtin_test_functions():
        if f.name == name:
            return f
    raise KeyError(f"unknown test function {name!r}")
