"""Characteristic numbers and the predicates applied to manifold records."""

from __future__ import annotations

from typing import List, Literal, Optional, Tuple

import structlog
from pydantic import BaseModel

from ..algebra.laurent import LaurentElem
from ..errors import InconsistentManifoldError
from .record import FourManifold
from .sw import MaxOnlySW, QuotientSW, UnknownConstantSW, UnknownSW, ZeroSW, known_terms, sw_max_part

logger = structlog.get_logger(__name__)


def quarter_characteristic(m: FourManifold) -> int:
    """``chi = (e + sign) / 4``."""
    total = m.e + m.sign
    if total % 4:
        raise InconsistentManifoldError(
            f"{m.name}: e + sign = {total} is not divisible by 4, so chi is not an integer"
        )
    return total // 4


def c1_squared(m: FourManifold) -> int:
    return 2 * m.e + 3 * m.sign


def b2(m: FourManifold) -> Optional[int]:
    if m.b1 is None:
        return None
    return m.e - 2 + 2 * m.b1


def b2_plus(m: FourManifold) -> Optional[int]:
    total = b2(m)
    return None if total is None else (total + m.sign) // 2


def b2_minus(m: FourManifold) -> Optional[int]:
    total = b2(m)
    return None if total is None else (total - m.sign) // 2


def characteristic_numbers(m: FourManifold) -> dict:
    return {
        "name": m.name,
        "e": m.e,
        "sign": m.sign,
        "chi": quarter_characteristic(m),
        "c1_squared": c1_squared(m),
        "b1": m.b1,
        "b2_plus": b2_plus(m),
        "b2_minus": b2_minus(m),
    }


def max_part(m: FourManifold, surface_label: str) -> LaurentElem:
    """SW terms at the adjunction bound ``|k . S| = 2g(S) - 2 - S.S`` of a tracked surface."""
    s = m.surface(surface_label)
    return sw_max_part(m.sw, m.tracked, s.cls, 2 * s.genus - 2 - s.self_int)


# -- homeomorphism ---------------------------------------------------------------

HomeoTag = Literal["homeomorphic", "distinct", "undecidable"]


class HomeoVerdict(BaseModel):
    verdict: HomeoTag
    left: Tuple[int, int, str]
    right: Tuple[int, int, str]
    notes: List[str] = []


def homeo_compare(m1: FourManifold, m2: FourManifold) -> HomeoVerdict:
    """Compare homeomorphism types via (e, sign, parity).

    Only verdicts that follow from those numbers and the simple-connectivity
    hypotheses are returned; diffeomorphism is never decided.
    """
    left = (m1.e, m1.sign, m1.parity)
    right = (m2.e, m2.sign, m2.parity)
    notes: List[str] = []

    if m1.e != m2.e:
        notes.append(f"Euler numbers differ ({m1.e} vs {m2.e})")
    if m1.sign != m2.sign:
        notes.append(f"signatures differ ({m1.sign} vs {m2.sign})")
    if "unknown" not in (m1.parity, m2.parity) and m1.parity != m2.parity:
        notes.append(f"intersection forms have different parity ({m1.parity} vs {m2.parity})")
    if notes:
        return HomeoVerdict(verdict="distinct", left=left, right=right, notes=notes)

    if m1.simply_connected != "asserted" or m2.simply_connected != "asserted":
        notes.append("simple connectivity is not asserted for both manifolds")
    if "unknown" in (m1.parity, m2.parity):
        notes.append("parity of the intersection form is unknown")
    if notes:
        return HomeoVerdict(verdict="undecidable", left=left, right=right, notes=notes)

    rank = m1.e - 2
    if rank != 0 and rank <= abs(m1.sign):
        notes.append("definite intersection form; classification of definite forms is not implemented")
        return HomeoVerdict(verdict="undecidable", left=left, right=right, notes=notes)

    notes.append("simply connected with equal rank, signature and parity of an indefinite (or trivial) form")
    return HomeoVerdict(verdict="homeomorphic", left=left, right=right, notes=notes)


# -- Taubes ----------------------------------------------------------------------

TaubesTag = Literal["consistent", "obstructed", "inapplicable"]


class TaubesVerdict(BaseModel):
    verdict: TaubesTag
    reason: str
    coefficient: Optional[int] = None


def taubes_symplectic_check(m: FourManifold) -> TaubesVerdict:
    """A symplectic structure forces ``SW(+/-K) = +/-1`` and ``SW != 0`` when ``b2+ > 1``."""
    if isinstance(m.sw, ZeroSW):
        bp = b2_plus(m)
        if bp is not None and bp > 1:
            return TaubesVerdict(verdict="obstructed", reason=f"SW vanishes while b2+ = {bp} > 1")
        return TaubesVerdict(verdict="inapplicable", reason="SW vanishes but b2+ > 1 is not known")
    if isinstance(m.sw, (UnknownSW, QuotientSW)):
        return TaubesVerdict(verdict="inapplicable", reason=f"SW value of kind {m.sw.kind} does not fix coefficients")
    if m.canonical is None:
        return TaubesVerdict(verdict="inapplicable", reason="no canonical class recorded")
    if isinstance(m.sw, MaxOnlySW):
        degree = abs(m.tracked.pair(m.canonical, m.sw.surface))
        if degree != m.sw.max_degree:
            return TaubesVerdict(
                verdict="inapplicable",
                reason=f"canonical class has degree {degree} along the surface, only degree {m.sw.max_degree} is known",
            )

    terms = known_terms(m.sw)
    assert terms is not None
    if isinstance(m.sw, UnknownConstantSW) and not any(m.canonical):
        return TaubesVerdict(verdict="inapplicable", reason="canonical class is 0 and the constant is unknown")
    coeff = terms.coefficient(m.canonical)
    if abs(coeff) != 1:
        logger.debug("taubes_obstruction", manifold=m.name, coefficient=coeff)
        return TaubesVerdict(
            verdict="obstructed",
            reason=f"SW coefficient at the canonical class is {coeff}, not +/-1",
            coefficient=coeff,
        )
    return TaubesVerdict(verdict="consistent", reason="SW coefficient at the canonical class is +/-1", coefficient=coeff)


# -- self-consistency checks -------------------------------------------------------


def sw_conjugation_check(m: FourManifold) -> Optional[bool]:
    """``bar(SW) = (-1)^chi SW`` on the known terms; ``None`` when nothing is known."""
    terms = known_terms(m.sw)
    if terms is None or terms.is_zero():
        return None
    expected = -1 if quarter_characteristic(m) % 2 else 1
    return terms.bar() == terms.scale(expected)


def rochlin_check(m: FourManifold) -> bool:
    """Spin forces ``sign = 0 mod 16``; vacuous otherwise."""
    return m.spin != "yes" or m.sign % 16 == 0


def simple_type_check(m: FourManifold) -> Optional[bool]:
    """Every known basic class squares to ``c1^2``."""
    terms = known_terms(m.sw)
    if terms is None or terms.is_zero():
        return None
    target = c1_squared(m)
    return all(m.tracked.square(t.exp) == target for t in terms.terms)


__all__ = [
    "HomeoVerdict",
    "TaubesVerdict",
    "b2",
    "b2_minus",
    "b2_plus",
    "c1_squared",
    "characteristic_numbers",
    "homeo_compare",
    "max_part",
    "quarter_characteristic",
    "rochlin_check",
    "simple_type_check",
    "sw_conjugation_check",
    "taubes_symplectic_check",
]
