"""Fibered knots and their symmetrized Alexander polynomials."""

from __future__ import annotations

from math import gcd
from typing import Dict, Mapping

import structlog
from pydantic import BaseModel, ConfigDict, Field, model_validator
from sympy import Poly, symbols

from ..errors import InvalidParameterError, LatticeMismatchError
from .lattice import IntLattice
from .laurent import LaurentElem, univariate

logger = structlog.get_logger(__name__)

KNOT_LATTICE = IntLattice.trivial("t")

_t = symbols("t")


class FiberedKnot(BaseModel):
    """A fibered knot: its genus and symmetrized Alexander polynomial in ``t``."""

    model_config = ConfigDict(frozen=True)

    name: str
    genus: int = Field(ge=0)
    alexander: LaurentElem

    @model_validator(mode="after")
    def _check_fibered(self) -> "FiberedKnot":
        delta = self.alexander
        if delta.lattice != KNOT_LATTICE:
            raise ValueError("Alexander polynomial must live in the one-variable lattice 't'")
        if delta.bar() != delta:
            raise ValueError(f"Alexander polynomial of {self.name} is not symmetric: {delta}")
        if abs(delta.augmentation()) != 1:
            raise ValueError(f"Alexander polynomial of {self.name} must evaluate to +/-1 at t=1")
        top = max(t.exp[0] for t in delta.terms)
        if top != self.genus:
            raise ValueError(
                f"{self.name} is declared genus {self.genus} but its Alexander polynomial has degree {top}; "
                "a fibered knot has monic polynomial of degree equal to its genus"
            )
        if abs(delta.coefficient((top,))) != 1:
            raise ValueError(f"Alexander polynomial of fibered knot {self.name} must be monic")
        return self

    def coefficients(self) -> Dict[int, int]:
        return {t.exp[0]: t.coeff for t in self.alexander.terms}


def knot_from_coefficients(name: str, coeffs: Mapping[int, int]) -> FiberedKnot:
    """Build a fibered knot from symmetric coefficients ``{degree: coeff}``.

    The sign is normalized so the polynomial evaluates to 1 at ``t = 1``.
    """
    delta = univariate(KNOT_LATTICE, coeffs)
    if delta.is_zero():
        raise InvalidParameterError(f"knot {name} has zero Alexander polynomial")
    if delta.augmentation() == -1:
        delta = -delta
    genus = max(t.exp[0] for t in delta.terms)
    try:
        return FiberedKnot(name=name, genus=genus, alexander=delta)
    except ValueError as exc:
        raise InvalidParameterError(str(exc)) from exc


def alexander_torus_knot(p: int, q: int) -> FiberedKnot:
    """The (p, q)-torus knot.

    ``(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`` with ``|p|, |q|``, shifted
    by ``t^{-(|p|-1)(|q|-1)/2}`` to be symmetric. Mirror images share it.
    """
    if abs(p) < 2 or abs(q) < 2:
        raise InvalidParameterError(f"torus knot T({p},{q}) needs |p|, |q| >= 2")
    if gcd(p, q) != 1:
        raise InvalidParameterError(f"torus knot T({p},{q}) needs coprime parameters")
    a, b = abs(p), abs(q)
    numerator = Poly((_t ** (a * b) - 1) * (_t - 1), _t)
    denominator = Poly((_t**a - 1) * (_t**b - 1), _t)
    quotient = numerator.exquo(denominator)
    genus = (a - 1) * (b - 1) // 2
    coeffs: Dict[int, int] = {}
    for (power,), c in quotient.terms():
        coeffs[power - genus] = int(c)
    logger.debug("alexander_torus_knot", p=p, q=q, genus=genus, terms=len(coeffs))
    return knot_from_coefficients(f"T({p},{q})", coeffs)


def unknot() -> FiberedKnot:
    return FiberedKnot(name="unknot", genus=0, alexander=LaurentElem.one(KNOT_LATTICE))


def trefoil() -> FiberedKnot:
    return alexander_torus_knot(3, 2).model_copy(update={"name": "trefoil"})


def figure_eight() -> FiberedKnot:
    return knot_from_coefficients("figure-eight", {1: -1, 0: 3, -1: -1})


def twist_knot_family(g: int) -> FiberedKnot:
    """The genus ``g`` fibered torus knot ``T(2g+1, -2)``."""
    if g < 1:
        raise InvalidParameterError(f"genus must be >= 1, got {g}")
    knot = alexander_torus_knot(2 * g + 1, -2)
    return knot.model_copy(update={"name": f"K_{g}"})


def alexander_sub_square(knot: FiberedKnot, target: IntLattice, torus_class_index: int) -> LaurentElem:
    """``Delta_K(t_T^2)`` in ``Z[target]`` where ``T`` is basis class ``torus_class_index``."""
    if not 0 <= torus_class_index < target.rank:
        raise LatticeMismatchError(
            f"torus class index {torus_class_index} out of range for a rank-{target.rank} lattice"
        )
    return univariate(target, {2 * d: c for d, c in knot.coefficients().items()}, index=torus_class_index)


def knot_by_name(name: str) -> FiberedKnot:
    """Resolve names used in expression files: ``unknot``, ``trefoil``,
    ``figure-eight``, ``K_g`` and ``T(p,q)``."""
    key = name.strip()
    if key == "unknot":
        return unknot()
    if key == "trefoil":
        return trefoil()
    if key in ("figure-eight", "figure_eight", "4_1"):
        return figure_eight()
    if key.startswith("K_"):
        try:
            genus = int(key[2:])
        except ValueError:
            raise InvalidParameterError(f"cannot read a knot genus from {name!r}") from None
        return twist_knot_family(genus)
    if key.startswith("T(") and key.endswith(")"):
        try:
            p, q = (int(v) for v in key[2:-1].split(","))
        except ValueError:
            raise InvalidParameterError(f"cannot read torus knot parameters from {name!r}") from None
        return alexander_torus_knot(p, q)
    raise InvalidParameterError(f"unknown knot {name!r}")
