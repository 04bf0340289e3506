"""summa: a numerical engine for paired summation formulae.

One kernel contour integral, evaluated once by residues and once by Mellin
inversion, generates each classical pair: the identity map with
Taylor-MacLaurin, Poisson with Euler-MacLaurin, the divisor (Voronoi) and
two-squares (Circle) formulae with their expansions, and the
Moebius-inverted Poisson formula together with its nonzero inversion
defect.  Everything is verified at double precision against committed
high-precision fixtures.
"""

from . import arithmetic, expansions, fractional, mellin, rh, special_functions, summation
from .arithmetic import ArithmeticTables, build_tables, dirichlet_consistency
from .errors import (CapacityError, ConvergenceError, DomainError, FormatError,
                     NotAZeroError, OscillationError, PoleError,
                     PoleOnBoundaryError, QuadratureError, SummaError,
                     TailBoundError, TailError, ZeroProximityError)
from .expansions import (AsymptoticExpansion, euler_circle, euler_maclaurin,
                         euler_maclaurin_finite, euler_mobius_poisson_sides,
                         euler_voronoi, OneSidedFunction, taylor_maclaurin)
from .fractional import (FracDerivResult, TestFunction, builtin_test_functions,
                         frac_deriv, gaussian_frac_closed, get_test_function)
from .mellin import (KernelSpec, KERNELS, RectanglePath, VerticalContour,
                     get_kernel, inverse_mellin_line, mellin_transform,
                     mother_integrand, ramanujan_check, rectangle_quadrature,
                     rectangle_residue_sum)
from .rh import (ZetaZero, c_function, load_zeros, mobius_zero_sum_check,
                 sinh_kernel_sides, strip_bound_constant)
from .special_functions import (EULER_GAMMA, EvalOptions, bessel_j0, bessel_k0,
                                bessel_y0, dirichlet_L_chi4, gamma, xi, xi4,
                                zeta)
from .summation import (SummationReport, circle_check, circle_rhs_j0,
                        circle_rhs_sine, mobius_check, mobius_poisson_defect,
                        poisson_check, voronoi_check, voronoi_rhs_bessel,
                        voronoi_rhs_cosine, weighted_sum, zero_avoiding_height)

__version__ = "0.1.0"
