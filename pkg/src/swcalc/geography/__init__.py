"""Spin geography checks for the ``Z(m, g)`` family."""

from .restriction import (
    PRINTED_LISTS,
    GeographyRow,
    GeographyVerdict,
    ListComparison,
    closed_form_genera,
    compare_printed,
    geography_scan,
    ppx_check,
    restricted_genera,
    zmg_closed_form,
    zmg_restricted,
)

__all__ = [
    "PRINTED_LISTS",
    "GeographyRow",
    "GeographyVerdict",
    "ListComparison",
    "closed_form_genera",
    "compare_printed",
    "geography_scan",
    "ppx_check",
    "restricted_genera",
    "zmg_closed_form",
    "zmg_restricted",
]
