"""One-shot generator for every reference fixture the main test suite
consumes: special-function grids, zeta zeros with zeta' values, direct
weighted sums, and the Moebius-inversion defect.

Every value runs through two evaluation routes; generation fails unless
they share >= 30 significant digits before the final rounding to double.
Output is deterministic (fixed precision, fixed rounding, fixed ordering),
so reruns reproduce the committed files bit for bit.
"""

from __future__ import annotations

import argparse
import hashlib
import math
import json
import sys
from pathlib import Path

import mpmath as mp

from . import dual

GENERATOR_VERSION = "0.1.0"
PRECISION_DPS = 50
MIN_AGREE_DIGITS = 30
ABS_FLOOR = mp.mpf(10) ** -35  # below this, both routes count as zero

GAMMA_RE = [-9.3, -7.6, -5.1, -3.4, -1.7, -0.3, 0.5, 1.0, 2.3, 4.8, 7.1, 9.6]
GAMMA_IM = [0.0, 0.7, 2.9, 8.3, 17.5, 33.0, 49.0]

ZETA_RE = [-9.6, -7.2, -4.9, -2.6, -0.8, 0.1, 0.6, 1.4, 2.0, 3.0, 5.5, 8.3]
ZETA_IM = [0.0, 0.9, 3.3, 9.2, 21.4, 37.8, 49.9]

BESSEL_X = [0.001, 0.1, 0.5, 1.0, 2.5, 7.7, 12.566370614359172, 20.0,
            39.47841760435743, 61.3, 77.7, 100.0]

SUM_Y = [0.7, 1.0, 1.4]
N_ZEROS = 100


class DisagreementError(RuntimeError):
    pass


def _require_agreement(label, a, b):
    if max(abs(mp.mpc(a)), abs(mp.mpc(b))) < ABS_FLOOR:
        return
    digits = dual.agreement_digits(a, b)
    if digits < MIN_AGREE_DIGITS:
        raise DisagreementError(
            f"{label}: dual evaluations agree to only {digits:.1f} digits")


def _row(label, s, val) -> str:
    s = mp.mpc(s)
    val = mp.mpc(val)
    return "\t".join([label, repr(float(s.real)), repr(float(s.imag)),
                      repr(float(val.real)), repr(float(val.imag))])


def _header(name: str) -> str:
    return (f"# {name} fixtures | generator=summa-oracle {GENERATOR_VERSION} "
            f"| precision_dps={PRECISION_DPS} | format: "
            f"name\\tre(s)\\tim(s)\\tre(val)\\tim(val)")


def gen_gamma_grid() -> str:
    lines = [_header("gamma")]
    for re in GAMMA_RE:
        for im in GAMMA_IM:
            s = mp.mpc(re, im)
            val = mp.gamma(s)
            _require_agreement(f"gamma({s})", val, dual.spouge_gamma(s))
            lines.append(_row("gamma", s, val))
    return "\n".join(lines) + "\n"


def gen_zeta_grid() -> str:
    lines = [_header("zeta")]
    for re in ZETA_RE:
        for im in ZETA_IM:
            s = mp.mpc(re, im)
            if abs(s - 1) < 0.3:
                continue
            val = mp.zeta(s)
            _require_agreement(f"zeta({s})", val, dual.em_zeta(s))
            lines.append(_row("zeta", s, val))
    for s in [mp.mpf(2), mp.mpf(0), mp.mpf(3), mp.mpf(-1), mp.mpf(-2)]:
        val = mp.zeta(s)
        _require_agreement(f"zeta({s})", val, dual.em_zeta(s))
        lines.append(_row("zeta", s, val))
    return "\n".join(lines) + "\n"


def gen_lchi4_grid() -> str:
    def beta(s):
        return (mp.zeta(s, mp.mpf(1) / 4) - mp.zeta(s, mp.mpf(3) / 4)) / mp.mpf(4) ** s

    lines = [_header("dirichlet_L_chi4")]
    for re in ZETA_RE:
        for im in ZETA_IM:
            s = mp.mpc(re, im)
            val = beta(s)
            _require_agreement(f"L({s},chi4)", val, dual.accel_beta_chi4(s))
            lines.append(_row("dirichlet_L_chi4", s, val))
    for s in [mp.mpf(1), mp.mpf(0), mp.mpf(-1), mp.mpf(-2), mp.mpf(2)]:
        val = beta(s)
        _require_agreement(f"L({s},chi4)", val, dual.accel_beta_chi4(s))
        lines.append(_row("dirichlet_L_chi4", s, val))
    return "\n".join(lines) + "\n"


def gen_bessel_grid() -> str:
    lines = [_header("bessel")]
    for x in BESSEL_X:
        xm = mp.mpf(repr(x))
        j0 = mp.besselj(0, xm)
        _require_agreement(f"J0({x})", j0, dual.j0_integral(xm))
        lines.append(_row("bessel_j0", mp.mpc(xm), j0))
    for x in BESSEL_X:
        xm = mp.mpf(repr(x))
        y0 = mp.bessely(0, xm)
        _require_agreement(f"Y0({x})", y0, dual.y0_series(xm))
        lines.append(_row("bessel_y0", mp.mpc(xm), y0))
    for x in BESSEL_X:
        xm = mp.mpf(repr(x))
        k0 = mp.besselk(0, xm)
        _require_agreement(f"K0({x})", k0, dual.k0_integral(xm))
        lines.append(_row("bessel_k0", mp.mpc(xm), k0))
    return "\n".join(lines) + "\n"


# --- weighted sums and analytic constants ----------------------------------

def _gauss(t):
    return mp.e ** (-t * t / 2)


def _divisors(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if n % k == 0)


def _two_squares(n: int) -> int:
    count = 0
    a = 0
    while a * a <= n:
        rest = n - a * a
        b = math.isqrt(rest)
        if b * b == rest:
            za = 1 if a == 0 else 2
            zb = 1 if b == 0 else 2
            count += za * zb
        a += 1
    return count


def _direct_sum(weight_fn, y, cutoff=None):
    y = mp.mpf(y)
    if cutoff is None:
        cutoff = int(mp.ceil(17 / y)) + 2
    terms = [weight_fn(n) * _gauss(n * y) for n in range(1, cutoff + 1)]
    fwd = mp.fsum(terms)
    rev = mp.fsum(reversed(terms))  # independent accumulation order
    _require_agreement(f"direct sum y={y}", fwd, rev)
    return fwd


def _theta_dual_ones(y):
    """Poisson-transformed evaluation of sum_(n>=1) exp(-(ny)^2/2)."""
    y = mp.mpf(y)
    dual_side = mp.sqrt(2 * mp.pi) / y * mp.nsum(
        lambda n: mp.e ** (-2 * mp.pi ** 2 * n ** 2 / y ** 2), [1, mp.inf])
    return (mp.sqrt(2 * mp.pi) / y - 1) / 2 + dual_side


def _mobius_list(limit: int):
    mu = [0] * (limit + 1)
    mu[1] = 1
    primes = []
    comp = [False] * (limit + 1)
    for i in range(2, limit + 1):
        if not comp[i]:
            primes.append(i)
            mu[i] = -1
        for p in primes:
            if i * p > limit:
                break
            comp[i * p] = True
            if i % p == 0:
                mu[i * p] = 0
                break
            mu[i * p] = -mu[i]
    return mu


def _frac_neg_gauss(s):
    return mp.gamma(s / 2) / mp.gamma(s) * mp.mpf(2) ** (s / 2 - 1)


def _defect_contour(y, right, left, T=120):
    def integrand(tau, c):
        s = c + 1j * tau
        return _frac_neg_gauss(s) * y ** (-s) / (2 * mp.cos(mp.pi * s / 2) * mp.zeta(s))

    splits = [-T, -60, -30, -12, -5, -2, 0, 2, 5, 12, 30, 60, T]

    def line(c):
        with mp.workdps(mp.mp.dps + 15):
            val = mp.quad(lambda t: integrand(t, c), splits, maxdegree=8)
        return +val / (2 * mp.pi)

    return line(mp.mpf(right)) - line(mp.mpf(left))


def gen_oracle_sums() -> str:
    lines = [_header("oracle sums / constants; parameter in re(s)")]

    g = mp.euler
    _require_agreement("euler_gamma", g, dual.euler_gamma_em())
    lines.append(_row("euler_gamma", mp.mpc(0), g))

    z3 = mp.zeta(3)
    _require_agreement("zeta3", z3, dual.em_zeta(3))
    lines.append(_row("zeta_3", mp.mpc(0), z3))

    for y in SUM_Y + [float(mp.sqrt(2 * mp.pi))]:
        ym = mp.mpf(repr(y))
        v = _direct_sum(lambda n: 1, ym)
        _require_agreement(f"ones_sum y={y}", v, _theta_dual_ones(ym))
        lines.append(_row("gauss_ones_sum", mp.mpc(ym), v))

    for y in SUM_Y:
        ym = mp.mpf(repr(y))
        lines.append(_row("gauss_d_sum", mp.mpc(ym), _direct_sum(_divisors, ym)))
    for y in SUM_Y:
        ym = mp.mpf(repr(y))
        lines.append(_row("gauss_r_sum", mp.mpc(ym), _direct_sum(_two_squares, ym)))

    # log moment: ∫_0^∞ exp(-u^2/2) ln u du, closed form -(sqrt(pi/2)/2)(gamma + ln 2)
    lm = mp.quad(lambda u: _gauss(u) * mp.log(u), [0, 1, 3, 16])
    closed = -mp.sqrt(mp.pi / 2) / 2 * (mp.euler + mp.log(2))
    _require_agreement("gauss_log_moment", lm, closed)
    lines.append(_row("gauss_log_moment", mp.mpc(0), lm))

    fin = (_gauss(0) + _gauss(8)) / 2 + mp.fsum(_gauss(n) for n in range(1, 8))
    lines.append(_row("gauss_finite_em_p0_q8", mp.mpc(0), fin))

    mu = _mobius_list(300000)
    sq2pi = mp.sqrt(2 * mp.pi)
    for y in SUM_Y:
        ym = mp.mpf(repr(y))
        d1 = _defect_contour(ym, "1.5", "-0.5")
        d2 = _defect_contour(ym, "2.5", "-1.5")
        _require_agreement(f"mobius_defect y={y} (contour pair)", d1, d2)
        # series route (double-precision-grade: limits the defect check, not
        # the fixture digits, which come from the agreeing contour pair)
        s1 = mp.mpf(0)
        s2 = mp.mpf(0)
        for n in range(1, 300001):
            m = mu[n]
            if m == 0:
                continue
            s1 += mp.mpf(m) / n * (sq2pi * _gauss(1 / (n * ym)) - sq2pi)
            s2 += mp.mpf(m) / n * (_gauss(2 * mp.pi * ym / n) - 1)
        series = s1 / (2 * mp.pi * ym) - s2
        if abs(series - d1) > mp.mpf(10) ** -9:
            raise DisagreementError(f"mobius defect series vs contour at y={y}")
        lines.append(_row("mobius_defect", mp.mpc(ym), d1))
    return "\n".join(lines) + "\n"


# --- zeta zeros -------------------------------------------------------------

def _newton_zero(gamma_guess):
    """Independent zero refinement: Newton iteration on the hand-rolled
    Euler-MacLaurin zeta, started from a deliberately perturbed ordinate."""
    s = mp.mpc(mp.mpf(1) / 2, gamma_guess + mp.mpf(10) ** -6)
    for _ in range(6):
        step = dual.em_zeta(s, M=120, J=80) / dual.zeta_prime_central(s)
        s -= step
        if abs(step) < mp.mpf(10) ** (-PRECISION_DPS - 5):
            break
    return s


def gen_zeros(progress=False) -> str:
    lines = [
        f"# zeta zeros | count={N_ZEROS} | generator=summa-oracle {GENERATOR_VERSION} "
        f"| precision_dps={PRECISION_DPS} | format: gamma\\tre(zeta')\\tim(zeta')"
    ]
    for n in range(1, N_ZEROS + 1):
        rho = mp.zetazero(n)
        zp = mp.zeta(rho, derivative=1)
        refined = _newton_zero(rho.imag)
        _require_agreement(f"zero {n} ordinate", rho, refined)
        zp_dual = dual.zeta_prime_central(rho)
        _require_agreement(f"zeta'(rho_{n})", zp, zp_dual)
        lines.append("\t".join([repr(float(rho.imag)),
                                repr(float(zp.real)), repr(float(zp.imag))]))
        if progress and n % 10 == 0:
            print(f"  zeros: {n}/{N_ZEROS}", file=sys.stderr)
    return "\n".join(lines) + "\n"


FILES = {
    "gamma_grid.tsv": gen_gamma_grid,
    "zeta_grid.tsv": gen_zeta_grid,
    "lchi4_grid.tsv": gen_lchi4_grid,
    "bessel_grid.tsv": gen_bessel_grid,
    "oracle_sums.tsv": gen_oracle_sums,
    "zeta_zeros.tsv": gen_zeros,
}


def generate_all(outdir, progress=False) -> dict:
    """Emit every fixture file plus the checksum manifest; returns the
    manifest dict.  Raises (nonzero exit from main) on any dual-evaluation
    disagreement or divergence."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    mp.mp.dps = PRECISION_DPS
    checksums = {}
    for name, builder in FILES.items():
        if progress:
            print(f"generating {name} ...", file=sys.stderr)
        content = builder(progress) if name == "zeta_zeros.tsv" else builder()
        path = outdir / name
        path.write_text(content)
        checksums[name] = hashlib.sha256(content.encode()).hexdigest()
    manifest = {
        "generator_version": GENERATOR_VERSION,
        "precision_digits": PRECISION_DPS,
        "files": dict(sorted(checksums.items())),
    }
    (outdir / "manifest.json").write_text(json.dumps(manifest, indent=2,
                                                     sort_keys=True) + "\n")
    return manifest


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("outdir", nargs="?", default="fixtures")
    ap.add_argument("--quiet", action="store_true")
    args = ap.parse_args(argv)
    try:
        generate_all(args.outdir, progress=not args.quiet)
    except DisagreementError as exc:
        print(f"FATAL: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
