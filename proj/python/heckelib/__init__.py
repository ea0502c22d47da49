"""Exact computations with symmetric group intertwiners and hook lengths.

Thin re-export of the compiled extension; all exact values cross the
boundary as strings or integer-string arrays.
"""

from heckelib._core import (
    HeckeParseError,
    MultiplicityError,
    PoleError,
    PreconditionError,
    column_tableau,
    conjugate,
    dset,
    eigenvalue_at,
    fused_F_matches,
    gamma_tableau,
    h_ratio,
    hooks,
    matrix_element_F,
    multiplicity,
    prop4_rhs,
    r_delta,
    r_gamma,
    r_theta,
    run_suite,
    standard_tableaux,
    suite_names,
)

__all__ = [
    "HeckeParseError",
    "MultiplicityError",
    "PoleError",
    "PreconditionError",
    "column_tableau",
    "conjugate",
    "dset",
    "eigenvalue_at",
    "fused_F_matches",
    "gamma_tableau",
    "h_ratio",
    "hooks",
    "matrix_element_F",
    "multiplicity",
    "prop4_rhs",
    "r_delta",
    "r_gamma",
    "r_theta",
    "run_suite",
    "standard_tableaux",
    "suite_names",
]
