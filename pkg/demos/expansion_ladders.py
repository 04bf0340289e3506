"""Asymptotic expansions with explicit contour remainders.

Each evaluator returns the regular terms picked up by pushing the
inversion contour to the right, plus the leftover vertical-line integral;
regular part + remainder reproduces the weighted sum to quadrature
accuracy.  The finite summation formula gets the same treatment on
integers p..q.
"""

import math

import numpy as np

from summa import (OneSidedFunction, euler_circle, euler_maclaurin,
                   euler_maclaurin_finite, euler_voronoi, get_test_function,
                   taylor_maclaurin, weighted_sum)
from summa.arithmetic import build_tables

F = get_test_function("gaussian")
tables = build_tables(10_000)


def show(title, expansion, target):
    print(f"\n{title}")
    for (p, c), v in zip(expansion.terms, expansion.term_values()):
        print(f"   t^{p!s:>4}  coeff {complex(c).real:+.12e}   term {complex(v).real:+.12e}")
    rem = complex(expansion.remainder_value)
    print(f"   remainder on Re s = {expansion.remainder_abscissa}: {rem.real:+.12e}")
    total = complex(expansion.total()).real
    print(f"   regular + remainder = {total:.15f}")
    print(f"   direct evaluation   = {target:.15f}   (gap {abs(total - target):.2e})")


t = -1.0
show("Taylor-MacLaurin, F(t) at t = -0.5, N = 6:",
     taylor_maclaurin(F, -0.5, 6), math.exp(-0.125))

direct = weighted_sum("ones", F, 1.0, tables=tables)[0]
show("Euler-MacLaurin, sum F(n t) at t = -1, N = 2:",
     euler_maclaurin(F, t, 2), direct)

direct = weighted_sum("d", F, 1.0, tables=tables)[0]
show("Euler-Voronoi, sum d_n F(n t) at t = -1, N = 2:",
     euler_voronoi(F, t, 2), direct)

direct = weighted_sum("r", F, 1.0, tables=tables)[0] / 4.0
show("Euler-Circle, (1/4) sum r_n F(n t) at t = -1:",
     euler_circle(F, t), direct)

print("\nFinite form on integers 0..8 (Gaussian):")
G = OneSidedFunction("gauss-right",
                     lambda u: np.exp(-0.5 * np.asarray(u, dtype=float) ** 2),
                     lambda k, u: F.deriv_fn(k, np.asarray(u, dtype=float)))
value, rem = euler_maclaurin_finite(G, 0, 8, 2)
direct = 0.5 * (1.0 + math.exp(-32.0)) + sum(math.exp(-0.5 * n * n) for n in range(1, 8))
print(f"   integral + corrections + remainder = {value:.15f}")
print(f"   trapezoid-corrected direct sum     = {direct:.15f}")
print(f"   remainder term                     = {rem:.3e}")
