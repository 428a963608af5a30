"""The spin geography restriction and the ``Z(m, g)`` tables built on it.

A simply connected spin complex surface with ``2 chi <= c1^2 < 3(chi - 5)``
must satisfy one of two exceptional equations. Spin symplectic manifolds
whose numbers land in that range without meeting either equation carry no
complex structure.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Literal, Tuple

import structlog
from pydantic import BaseModel, ConfigDict

from ..constructions.closed_forms import zmg_numbers
from ..errors import InvalidParameterError

logger = structlog.get_logger(__name__)

VerdictTag = Literal["not_in_range", "exception_A", "exception_B", "excluded"]

# Restricted g for Z(m, g) as printed alongside the restriction theorem.
PRINTED_LISTS: Dict[int, Tuple[int, ...]] = {
    1: (),
    2: (),
    3: (1,),
    4: (1, 2, 4),
    5: (2, 3),
    6: (1, 3, 4, 6, 7),
}


class GeographyVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    tag: VerdictTag
    detail: str


def ppx_check(chi: int, c1sq: int, spin: bool) -> GeographyVerdict:
    if not spin:
        return GeographyVerdict(tag="not_in_range", detail="the restriction applies to spin surfaces only")
    if not 2 * chi <= c1sq < 3 * (chi - 5):
        return GeographyVerdict(
            tag="not_in_range", detail=f"c1^2 = {c1sq} outside [{2 * chi}, {3 * (chi - 5)})"
        )
    if c1sq == 2 * (chi - 3) and c1sq % 8 == 0 and (c1sq // 8) % 2 == 1:
        return GeographyVerdict(tag="exception_A", detail=f"c1^2 = 2(chi - 3) = 8 * {c1sq // 8}")
    if 3 * c1sq == 8 * (chi - 4) and chi % 3 == 1:
        return GeographyVerdict(tag="exception_B", detail="3 c1^2 = 8(chi - 4) with chi = 1 mod 3")
    return GeographyVerdict(
        tag="excluded", detail="no simply connected spin complex surface has these numbers"
    )


def zmg_restricted(m: int, g: int) -> bool:
    chi, c1sq = zmg_numbers(m, g)
    return ppx_check(chi, c1sq, spin=True).tag == "excluded"


def zmg_closed_form(m: int, g: int) -> bool:
    """``g < 8m/5 - 2`` with ``g != m - 1 (mod 3)``."""
    zmg_numbers(m, g)
    return 5 * g < 8 * m - 10 and (g - m + 1) % 3 != 0


class GeographyRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    m: int
    g: int
    chi: int
    c1sq: int
    verdict: VerdictTag
    restricted: bool
    closed_form: bool
    agree: bool


def geography_scan(m_range: Iterable[int], g_range: Iterable[int]) -> List[GeographyRow]:
    gs = list(g_range)
    rows = []
    for m in m_range:
        for g in gs:
            chi, c1sq = zmg_numbers(m, g)
            verdict = ppx_check(chi, c1sq, spin=True)
            restricted = verdict.tag == "excluded"
            closed = zmg_closed_form(m, g)
            rows.append(
                GeographyRow(
                    m=m,
                    g=g,
                    chi=chi,
                    c1sq=c1sq,
                    verdict=verdict.tag,
                    restricted=restricted,
                    closed_form=closed,
                    agree=restricted == closed,
                )
            )
    logger.debug("geography_scan", cells=len(rows))
    return rows


def restricted_genera(m: int) -> List[int]:
    """Every ``g`` with ``Z(m, g)`` restricted; none exist once ``5g >= 8m - 10``."""
    return [g for g in range(1, max(1, (8 * m - 10 + 4) // 5)) if zmg_restricted(m, g)]


def closed_form_genera(m: int) -> List[int]:
    return [g for g in range(1, max(1, (8 * m - 10 + 4) // 5)) if zmg_closed_form(m, g)]


class ListComparison(BaseModel):
    model_config = ConfigDict(frozen=True)

    m: int
    printed: List[int]
    theorem: List[int]
    closed_form: List[int]

    @property
    def matches_printed(self) -> bool:
        return self.theorem == self.printed

    def note(self) -> str:
        if self.matches_printed:
            return "theorem reproduces the printed list"
        extra = sorted(set(self.theorem) - set(self.printed))
        missing = sorted(set(self.printed) - set(self.theorem))
        parts = []
        if extra:
            parts.append(f"theorem also excludes g = {extra}")
        if missing:
            parts.append(f"printed g = {missing} not excluded by the theorem")
        return "; ".join(parts)


def compare_printed(m: int) -> ListComparison:
    if m not in PRINTED_LISTS:
        raise InvalidParameterError(f"no printed list for m = {m}; printed lists cover m = 1..6")
    return ListComparison(
        m=m,
        printed=list(PRINTED_LISTS[m]),
        theorem=restricted_genera(m),
        closed_form=closed_form_genera(m),
    )
