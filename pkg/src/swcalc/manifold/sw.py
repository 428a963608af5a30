"""Structured Seiberg-Witten values.

The engine rarely knows a full invariant. ``SWValue`` records exactly how
much is known: the whole group-ring element, only its part at maximal degree
along one surface, everything but a constant, nothing, or the unexpanded
quotient that a three-manifold-times-circle carries.
"""

from __future__ import annotations

from typing import Annotated, Literal, Optional, Sequence, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..algebra.lattice import ClassVec, IntLattice
from ..algebra.laurent import LaurentElem
from ..errors import InsufficientInformationError, LatticeMismatchError


class ExactSW(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["exact"] = "exact"
    terms: LaurentElem

    @model_validator(mode="after")
    def _symmetric(self) -> "ExactSW":
        if not self.terms.is_zero() and self.terms.bar_sign() is None:
            raise ValueError(f"SW value is not symmetric up to sign under conjugation: {self.terms}")
        return self


class MaxOnlySW(BaseModel):
    """Only the terms with ``|k . surface| = max_degree`` are known."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["max_only"] = "max_only"
    surface: ClassVec
    max_degree: int
    terms: LaurentElem
    rim_torus_ambiguous: bool = False

    @model_validator(mode="after")
    def _on_max_degree(self) -> "MaxOnlySW":
        for t in self.terms.terms:
            if abs(self.terms.lattice.pair(t.exp, self.surface)) != self.max_degree:
                raise ValueError(
                    f"term t[{','.join(map(str, t.exp))}] does not pair to +/-{self.max_degree} with the surface"
                )
        return self


class UnknownConstantSW(BaseModel):
    """``terms + c`` with the constant ``c`` (at exponent 0) not determined."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["exact_with_unknown_constant"] = "exact_with_unknown_constant"
    terms: LaurentElem
    constant_name: str = "c"

    @model_validator(mode="after")
    def _no_constant(self) -> "UnknownConstantSW":
        if self.terms.coefficient(self.terms.lattice.zero()) != 0:
            raise ValueError("the known part must not carry a constant term")
        if not self.terms.is_zero() and self.terms.bar_sign() is None:
            raise ValueError(f"SW value is not symmetric up to sign under conjugation: {self.terms}")
        return self


class ZeroSW(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["zero"] = "zero"


class UnknownSW(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["unknown"] = "unknown"
    reason: str = ""


class QuotientSW(BaseModel):
    """``numerator / denominator``, never expanded into a series."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["quotient"] = "quotient"
    numerator: LaurentElem
    denominator: LaurentElem

    @model_validator(mode="after")
    def _same_ring(self) -> "QuotientSW":
        if self.numerator.lattice != self.denominator.lattice:
            raise ValueError("numerator and denominator live in different lattices")
        if self.denominator.is_zero():
            raise ValueError("zero denominator")
        return self


SWValue = Annotated[
    Union[ExactSW, MaxOnlySW, UnknownConstantSW, ZeroSW, UnknownSW, QuotientSW],
    Field(discriminator="kind"),
]

LAURENT_FIELDS = ("terms", "numerator", "denominator")


def sw_lattice(sw: SWValue) -> Optional[IntLattice]:
    if isinstance(sw, (ExactSW, MaxOnlySW, UnknownConstantSW)):
        return sw.terms.lattice
    if isinstance(sw, QuotientSW):
        return sw.numerator.lattice
    return None


def known_terms(sw: SWValue) -> Optional[LaurentElem]:
    """The explicitly known group-ring terms, if the variant has any."""
    if isinstance(sw, (ExactSW, MaxOnlySW, UnknownConstantSW)):
        return sw.terms
    return None


def exact(terms: LaurentElem) -> SWValue:
    return ZeroSW() if terms.is_zero() else ExactSW(terms=terms)


def _quotient_edge(sw: QuotientSW, surface: Sequence[int], top: bool) -> tuple[int, LaurentElem]:
    """Leading (or trailing) term of the quotient along ``surface``."""
    lattice = sw.numerator.lattice

    def edge(x: LaurentElem) -> tuple[int, LaurentElem]:
        lo, hi = x.degree_along(surface)
        d = hi if top else lo
        return d, LaurentElem.from_terms(
            lattice, [(t.exp, t.coeff) for t in x.terms if lattice.pair(t.exp, surface) == d]
        )

    dn, num = edge(sw.numerator)
    dd, den = edge(sw.denominator)
    if len(den.terms) != 1 or abs(den.terms[0].coeff) != 1:
        raise InsufficientInformationError("quotient edge is not a unit monomial; cannot divide")
    lead = den.terms[0]
    shifted = num.shift(tuple(-v for v in lead.exp)).scale(lead.coeff)
    return dn - dd, shifted


def sw_max_part(
    sw: SWValue,
    lattice: IntLattice,
    surface: Sequence[int],
    degree: int,
) -> LaurentElem:
    """Terms of the invariant with ``|k . surface| = degree``.

    Raises ``InsufficientInformationError`` when the stored data does not
    determine them.
    """
    surface = lattice.check(surface)
    own = sw_lattice(sw)
    if own is not None and own != lattice:
        raise LatticeMismatchError("SW value and surface live in different lattices")

    if isinstance(sw, ZeroSW):
        return LaurentElem.zero(lattice)
    if isinstance(sw, UnknownSW):
        raise InsufficientInformationError(f"SW invariant unknown{': ' + sw.reason if sw.reason else ''}")
    if isinstance(sw, ExactSW):
        return sw.terms.max_part(surface, degree)
    if isinstance(sw, UnknownConstantSW):
        if degree == 0:
            raise InsufficientInformationError(
                f"degree-0 part involves the undetermined constant {sw.constant_name}"
            )
        return sw.terms.max_part(surface, degree)
    if isinstance(sw, MaxOnlySW):
        if tuple(surface) != tuple(sw.surface) or degree != sw.max_degree:
            raise InsufficientInformationError(
                "only the maximal part along the fiber-sum surface is known"
            )
        return sw.terms
    # QuotientSW: ratio of leading and trailing edges.
    d_top, top = _quotient_edge(sw, surface, top=True)
    d_bot, bottom = _quotient_edge(sw, surface, top=False)
    parts = []
    if abs(d_top) == degree:
        parts.append(top)
    if abs(d_bot) == degree and d_bot != d_top:
        parts.append(bottom)
    total = LaurentElem.zero(lattice)
    for p in parts:
        total = total + p
    return total


def render_sw(sw: SWValue, pretty: bool = True) -> str:
    def show(x: LaurentElem) -> str:
        return x.pretty() if pretty else x.to_text()

    if isinstance(sw, ExactSW):
        return show(sw.terms)
    if isinstance(sw, MaxOnlySW):
        flag = " [rim-torus ambiguity]" if sw.rim_torus_ambiguous else ""
        return f"max part {show(sw.terms)} + (lower terms unknown){flag}"
    if isinstance(sw, UnknownConstantSW):
        return f"{show(sw.terms)} + {sw.constant_name}"
    if isinstance(sw, ZeroSW):
        return "0"
    if isinstance(sw, UnknownSW):
        return f"unknown{' (' + sw.reason + ')' if sw.reason else ''}"
    return f"({show(sw.numerator)}) / ({show(sw.denominator)})"
