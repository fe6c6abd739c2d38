"""Exact arithmetic for central factorial numbers, their r-extended
families, central Bell polynomials, and the identity suite that
cross-checks every family along independent computation paths."""

from .bell import (
    DobinskiResult,
    central_bell_poly,
    dobinski_eval,
    exact_bell_value,
    r_central_bell_poly,
    r_central_bell_via_conv,
    r_central_bell_via_stirling,
)
from .central import (
    Family,
    Path,
    TriangleTable,
    central2,
    central2_r,
    central2_r_conv,
    central_diff,
    central_factorial_poly,
    falling_factorial_poly,
    stirling1_r,
    stirling2,
)
from .checks import CheckReport, Counterexample, SuiteConfig, all_pass, run_all
from .first_kind import central1, central1_r
from .poly import Polynomial, X, monomial
from .series import Series, constant, t, two_asinh_half, two_sinh_half

__version__ = "0.1.0"

__all__ = [
    "DobinskiResult",
    "central_bell_poly",
    "dobinski_eval",
    "exact_bell_value",
    "r_central_bell_poly",
    "r_central_bell_via_conv",
    "r_central_bell_via_stirling",
    "Family",
    "Path",
    "TriangleTable",
    "central2",
    "central2_r",
    "central2_r_conv",
    "central_diff",
    "central_factorial_poly",
    "falling_factorial_poly",
    "stirling1_r",
    "stirling2",
    "CheckReport",
    "Counterexample",
    "SuiteConfig",
    "all_pass",
    "run_all",
    "central1",
    "central1_r",
    "Polynomial",
    "X",
    "monomial",
    "Series",
    "constant",
    "t",
    "two_asinh_half",
    "two_sinh_half",
    "__version__",
]
