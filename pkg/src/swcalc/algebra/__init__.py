"""Exact lattice and group-ring algebra."""

from .knots import (
    FiberedKnot,
    alexander_sub_square,
    alexander_torus_knot,
    figure_eight,
    knot_by_name,
    knot_from_coefficients,
    trefoil,
    twist_knot_family,
    unknot,
)
from .lattice import ClassVec, GluedLattice, IntLattice, direct_sum, glue_lattices
from .laurent import LaurentElem, Term, laurent_bar, laurent_mul, t_minus_t_inverse, two_term, univariate
from .normal_form import chain_form, determinant, integer_kernel

__all__ = [
    "ClassVec",
    "FiberedKnot",
    "GluedLattice",
    "IntLattice",
    "LaurentElem",
    "Term",
    "alexander_sub_square",
    "alexander_torus_knot",
    "chain_form",
    "determinant",
    "direct_sum",
    "figure_eight",
    "glue_lattices",
    "integer_kernel",
    "knot_by_name",
    "knot_from_coefficients",
    "laurent_bar",
    "laurent_mul",
    "t_minus_t_inverse",
    "trefoil",
    "twist_knot_family",
    "two_term",
    "univariate",
    "unknot",
]
