"""Integral points on quadratic twist families: exact C++ kernels.

Everything heavy lives in the _core extension; this package re-exports it.
"""

from ._core import (  # noqa: F401
    brute_count,
    classify_torsion,
    construct_points,
    count_via_lattices,
    covariant_g,
    cubic_lambda,
    factorize,
    four_square_decompose,
    full2_decompose,
    fundamental_unit,
    hensel_lift,
    int_sqrt,
    integral_points,
    invariants,
    jacobi,
    lower_disc,
    mordell_form,
    mult_f,
    partial_decompose,
    pell_enumerate,
    pell_simultaneous,
    reduce_quartic,
    rho,
    seminvariants,
    squarefree_part,
    squarefree_sieve,
    syzygy_descend,
    szpiro_upper,
    thue_enumerate,
    truncated_s,
    unlinked_max_size,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
