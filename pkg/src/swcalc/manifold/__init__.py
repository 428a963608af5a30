"""Manifold invariant records and the predicates applied to them."""

from .invariants import (
    HomeoVerdict,
    TaubesVerdict,
    b2_minus,
    b2_plus,
    c1_squared,
    characteristic_numbers,
    homeo_compare,
    max_part,
    quarter_characteristic,
    rochlin_check,
    simple_type_check,
    sw_conjugation_check,
    taubes_symplectic_check,
)
from .record import FourManifold, Provenance, TrackedSurface
from .render import render_text
from .sw import (
    ExactSW,
    MaxOnlySW,
    QuotientSW,
    SWValue,
    UnknownConstantSW,
    UnknownSW,
    ZeroSW,
    exact,
    known_terms,
    render_sw,
    sw_max_part,
)

__all__ = [
    "ExactSW",
    "FourManifold",
    "HomeoVerdict",
    "MaxOnlySW",
    "Provenance",
    "QuotientSW",
    "SWValue",
    "TaubesVerdict",
    "TrackedSurface",
    "UnknownConstantSW",
    "UnknownSW",
    "ZeroSW",
    "b2_minus",
    "b2_plus",
    "c1_squared",
    "characteristic_numbers",
    "exact",
    "homeo_compare",
    "known_terms",
    "max_part",
    "quarter_characteristic",
    "render_sw",
    "render_text",
    "rochlin_check",
    "simple_type_check",
    "sw_conjugation_check",
    "sw_max_part",
    "taubes_symplectic_check",
]
