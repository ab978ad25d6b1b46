"""Weighted fractional derivative toolkit.

Thin python surface over the C++ core: expression parsing and symbolic
differentiation, the fractional operator family, partial operators, the
fractional Taylor series, and the linear fractional ODE / PDE residual
checks. Expressions are plain strings in the shared grammar (variables
t, x, t1..t9; functions sin cos tan exp ln sqrt abs).
"""

from ._core import (
    GfdError,
    __version__,
    caputo,
    differentiate,
    evaluate,
    free_variables,
    gfd,
    gfd_higher,
    gpfd,
    gpfd_second,
    mvt_witness,
    named_derivative,
    ode_max_residual,
    pde_max_residual,
    rising_factorial,
    rolle_witness,
    simplify,
    solve_ode_closed,
    solve_ode_rk4,
    taylor_eval,
    taylor_terms,
    weight_of,
)

__all__ = [
    "GfdError",
    "__version__",
    "caputo",
    "differentiate",
    "evaluate",
    "free_variables",
    "gfd",
    "gfd_higher",
    "gpfd",
    "gpfd_second",
    "mvt_witness",
    "named_derivative",
    "ode_max_residual",
    "pde_max_residual",
    "rising_factorial",
    "rolle_witness",
    "simplify",
    "solve_ode_closed",
    "solve_ode_rk4",
    "taylor_eval",
    "taylor_terms",
    "weight_of",
]
