"""Why the Moebius-inverted Poisson formula is (slightly) wrong.

Formally inverting the Poisson formula with Moebius weights suggests

    sum mu_n/n F(2 pi y / n)  ?=  (1/(2 pi y)) sum mu_n/n Fhat(1/(n y)),

and low-precision checks seem to confirm it.  At machine precision the
two sides differ by a y-dependent defect that a contour pair computes
exactly: the line integrals at Re s = 3/2 and Re s = -1/2 of
F^(-s)(0) y^(-s) / (2 cos(pi s/2) zeta(s)) do not cancel, because the
nontrivial zeta zeros sit between the lines.
"""

from summa import get_test_function
from summa.arithmetic import build_tables
from summa.expansions import euler_mobius_poisson_sides
from summa.summation import _mobius_series_sides, mobius_poisson_defect

F = get_test_function("gaussian")
tables = build_tables(300_000)

print(f"{'y':>6} | {'naive lhs':>15} | {'naive rhs':>15} | {'defect (series)':>16} | {'defect (contour)':>17}")
print("-" * 82)
for y in (0.7, 1.0, 1.4, 2.0):
    fhat_side, f_side, _ = _mobius_series_sides(F, y, 300_000, tables)
    contour, series = mobius_poisson_defect(F, y, tables=tables)
    print(f"{y:>6.2f} | {f_side:>15.10f} | {fhat_side:>15.10f} | "
          f"{series:>16.10e} | {contour:>17.10e}")

print()
print("The same defect appears as the difference of the two series of the")
print("Euler-Moebius-Poisson expansion at theta = 0 (y = 1), whose direct")
print("side climbs through ~3e7 before factorial decay wins -- the chain")
print("runs in 80-bit precision:")
fo, di, *_ = euler_mobius_poisson_sides(F, 0.0, 140)
contour, _ = mobius_poisson_defect(F, 1.0, tables=tables)
print(f"   transform-side series  {fo.real:+.15f}")
print(f"   direct-side series     {di.real:+.15f}")
print(f"   difference             {(fo - di).real:+.12e}")
print(f"   contour defect         {contour:+.12e}")
print(f"   agreement              {abs((fo - di).real - contour):.2e}")
