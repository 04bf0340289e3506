"""Divisor and two-squares summation formulae, both kernel forms each.

The transform side of the divisor formula can be written against the
Bessel kernel (2/pi) K0 - Y0 or, equivalently, against cos(c / x); the
two-squares formula pairs J0 with sin(c / x).  The evaluations are fully
independent (different kernels, different quadrature strategies) and
agree with the sieved sums and with each other.
"""

from summa import get_test_function
from summa.arithmetic import build_tables
from summa.summation import (circle_rhs_j0, circle_rhs_sine, voronoi_rhs_bessel,
                             voronoi_rhs_cosine, weighted_sum)

F = get_test_function("gaussian")
tables = build_tables(10_000)

for y in (0.8, 1.0, 1.25):
    d_sum = weighted_sum("d", F, y, tables=tables)[0]
    cosine = voronoi_rhs_cosine(F, y, n_max=60, tables=tables)
    bessel = voronoi_rhs_bessel(F, y, n_max=60, tables=tables)
    print(f"divisor weights, y = {y}:")
    print(f"   sieved sum      {d_sum:.15f}")
    print(f"   cosine kernel   {cosine:.15f}   (gap {abs(cosine - d_sum):.2e})")
    print(f"   Bessel kernel   {bessel:.15f}   (gap {abs(bessel - d_sum):.2e})")

    r_sum = float(F.value(0.0)) + weighted_sum("r", F, y, tables=tables)[0]
    sine = circle_rhs_sine(F, y, n_max=60, tables=tables)
    j0 = circle_rhs_j0(F, y, n_max=60, tables=tables)
    print(f"two-squares weights, y = {y}:")
    print(f"   sieved sum      {r_sum:.15f}")
    print(f"   sine kernel     {sine:.15f}   (gap {abs(sine - r_sum):.2e})")
    print(f"   J0 kernel       {j0:.15f}   (gap {abs(j0 - r_sum):.2e})")
    print()
