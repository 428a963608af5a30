"""Knot surgery, fiber sum and torus surgery as operations on invariant records."""

from __future__ import annotations

from math import prod
from typing import List, Optional, Sequence, Tuple

import structlog
from pydantic import BaseModel

from ..algebra.knots import FiberedKnot
from ..algebra.lattice import ClassVec, GluedLattice, IntLattice, add, glue_lattices, scale
from ..algebra.laurent import LaurentElem, t_minus_t_inverse
from ..errors import (
    ConstructionError,
    InconsistentManifoldError,
    InsufficientInformationError,
    InvalidParameterError,
    LatticeMismatchError,
)
from ..manifold.record import FourManifold, Provenance, TrackedSurface
from ..manifold.sw import (
    ExactSW,
    MaxOnlySW,
    QuotientSW,
    SWValue,
    UnknownConstantSW,
    UnknownSW,
    ZeroSW,
    exact,
    known_terms,
    sw_lattice,
    sw_max_part,
)

logger = structlog.get_logger(__name__)

COMPLEMENTARY = "complementary"


class ComplementarityHypothesis(BaseModel):
    """User-asserted: the reference loops on C bound (-1)-disks in X - C."""

    holds: bool
    justification: str = ""

    def describe(self) -> str:
        state = COMPLEMENTARY if self.holds else "not complementary"
        return f"{state}: {self.justification}" if self.justification else state


def delta_along(knot: FiberedKnot, lattice: IntLattice, torus: Sequence[int]) -> LaurentElem:
    """``Delta_K(t_T^2)`` for an arbitrary torus class ``T``."""
    torus = lattice.check(torus)
    return LaurentElem.from_terms(lattice, [(scale(2 * d, torus), c) for d, c in knot.coefficients().items()])


def _chi(e: int, sign: int, name: str) -> int:
    if (e + sign) % 4:
        raise InconsistentManifoldError(f"{name}: e + sign = {e + sign} is not divisible by 4")
    return (e + sign) // 4


# -- knot surgery ------------------------------------------------------------------


def knot_surgery(m: FourManifold, torus_label: str, knot: FiberedKnot, name: Optional[str] = None) -> FourManifold:
    """Replace a square-0 torus ``T`` by ``S^1 x (S^3 - K)``.

    SW is multiplied by ``Delta_K(t_T^2)``; every tracked surface meeting
    ``T`` in ``d`` points gains ``d * genus(K)`` handles.
    """
    torus = m.surface(torus_label)
    if torus.genus != 1:
        raise ConstructionError(f"knot surgery needs a torus, {torus_label} has genus {torus.genus}")
    if torus.self_int != 0:
        raise ConstructionError(f"knot surgery needs a square-0 torus, {torus_label} has square {torus.self_int}")
    if knot.genus == 0:
        logger.debug("knot_surgery_identity", manifold=m.name, knot=knot.name)
        return m

    delta = delta_along(knot, m.tracked, torus.cls)
    sw: SWValue
    if isinstance(m.sw, ExactSW):
        sw = exact(m.sw.terms * delta)
    elif isinstance(m.sw, QuotientSW):
        sw = QuotientSW(numerator=m.sw.numerator * delta, denominator=m.sw.denominator)
    elif isinstance(m.sw, MaxOnlySW):
        raise InsufficientInformationError(
            f"{m.name}: knot surgery needs the full SW invariant, only the maximal part is known"
        )
    elif isinstance(m.sw, UnknownConstantSW):
        sw = UnknownSW(reason=f"unknown constant {m.sw.constant_name} spreads under knot surgery")
    else:
        sw = m.sw

    surfaces = []
    for s in m.surfaces:
        meet = abs(m.tracked.pair(s.cls, torus.cls))
        if s.label != torus_label and meet:
            s = s.model_copy(update={"genus": s.genus + meet * knot.genus})
        surfaces.append(s)

    canonical = None
    if m.canonical is not None:
        canonical = add(m.canonical, scale(2 * knot.genus, torus.cls))

    simply_connected = "unknown"
    if m.simply_connected == "asserted" and torus.complement_simply_connected:
        simply_connected = "asserted"

    result = m.with_updates(
        name=name or f"{m.name}_{knot.name}",
        b1=0 if simply_connected == "asserted" else None,
        simply_connected=simply_connected,
        sw=sw,
        canonical=canonical,
        surfaces=tuple(surfaces),
        provenance=Provenance(
            kind="knot_surgery",
            params={"base": m.name, "torus": torus_label, "knot": knot.name, "knot_genus": knot.genus},
            hypotheses=list(m.provenance.hypotheses),
        ),
    )
    logger.debug("knot_surgery", manifold=result.name, sw_kind=sw.kind)
    return result


# -- fiber sum ------------------------------------------------------------------------


def _prefixes_for(m1: FourManifold, m2: FourManifold, surface_name: str) -> Tuple[str, str]:
    names1 = set(m1.tracked.basis_names)
    names2 = set(m2.tracked.basis_names)
    if names1 & names2 - {surface_name}:
        return "L.", "R."
    return "", ""


def _sum_surfaces(
    m1: FourManifold,
    s1: TrackedSurface,
    m2: FourManifold,
    s2: TrackedSurface,
    gl: GluedLattice,
) -> List[TrackedSurface]:
    out = [
        TrackedSurface(label=s1.label, cls=gl.surface, genus=s1.genus, self_int=0),
    ]
    used = {s1.label}

    def fresh(label: str) -> str:
        while label in used:
            label += "'"
        used.add(label)
        return label

    for x in m1.surfaces:
        if x.label == s1.label or m1.tracked.pair(x.cls, s1.cls):
            continue
        out.append(
            x.model_copy(
                update={
                    "label": fresh(x.label),
                    "cls": gl.from_left(x.cls),
                    "complement_simply_connected": False,
                    "normally_generates": False,
                }
            )
        )
    for y in m2.surfaces:
        if y.label == s2.label or m2.tracked.pair(y.cls, s2.cls):
            continue
        out.append(
            y.model_copy(
                update={
                    "label": fresh(y.label),
                    "cls": gl.from_right(y.cls),
                    "complement_simply_connected": False,
                    "normally_generates": False,
                }
            )
        )
    # Surfaces crossing the junction close up with partners meeting the other side equally often.
    for x in m1.surfaces:
        d = m1.tracked.pair(x.cls, s1.cls)
        if x.label == s1.label or d <= 0:
            continue
        for y in m2.surfaces:
            if y.label == s2.label or m2.tracked.pair(y.cls, s2.cls) != d:
                continue
            out.append(
                TrackedSurface(
                    label=fresh(f"{x.label}+{y.label}"),
                    cls=gl.glue(x.cls, y.cls),
                    genus=x.genus + y.genus + d - 1,
                    self_int=x.self_int + y.self_int,
                )
            )
    return out


def _max_classes(
    m: FourManifold, surface: TrackedSurface, degree: int
) -> List[Tuple[ClassVec, int]]:
    part = sw_max_part(m.sw, m.tracked, surface.cls, degree)
    return [(t.exp, t.coeff) for t in part.terms if m.tracked.pair(t.exp, surface.cls) == degree]


def fiber_sum(
    m1: FourManifold,
    s1_label: str,
    m2: FourManifold,
    s2_label: str,
    comp: Optional[ComplementarityHypothesis] = None,
    *,
    name: Optional[str] = None,
    surface_name: Optional[str] = None,
    dual_name: str = "D",
) -> FourManifold:
    """Fiber sum along square-0 surfaces of equal genus ``n``.

    ``e`` picks up ``4n - 4`` and the signature is additive. For ``n >= 2``
    the SW output is the maximal part along the glued surface: classes
    ``glue(k1, k2) + 2C`` for maximal ``k1, k2`` with coefficient product,
    completed by conjugation symmetry. Lower terms stay unknown. Along tori
    the product rule ``SW1 * SW2 * (t_C - t_C^{-1})^2`` is used when both
    inputs are exact.
    """
    s1 = m1.surface(s1_label)
    s2 = m2.surface(s2_label)
    if s1.genus != s2.genus:
        raise ConstructionError(
            f"fiber sum needs surfaces of equal genus: {s1_label} has genus {s1.genus}, {s2_label} has {s2.genus}"
        )
    if s1.self_int != 0 or s2.self_int != 0:
        raise ConstructionError("fiber sum needs surfaces of self-intersection 0")
    n = s1.genus
    if n < 1:
        raise ConstructionError("fiber sums along spheres are not supported")

    surface_name = surface_name or s1_label
    prefixes = _prefixes_for(m1, m2, surface_name)
    gl = glue_lattices(
        m1.tracked,
        m1.basis_name_of(s1),
        m2.tracked,
        m2.basis_name_of(s2),
        surface_name=surface_name,
        prefixes=prefixes,
        dual_name=dual_name,
    )
    lattice = gl.lattice
    C = gl.surface
    name = name or f"{m1.name} #[{s1_label}={s2_label}] {m2.name}"

    e = m1.e + m2.e + 4 * n - 4
    sign = m1.sign + m2.sign
    chi = _chi(e, sign, name)
    conj = -1 if chi % 2 else 1

    canonical: Optional[ClassVec] = None
    if m1.canonical is not None and m2.canonical is not None:
        try:
            canonical = add(gl.glue(m1.canonical, m2.canonical), scale(2, C))
        except ConstructionError:
            canonical = None

    sw: SWValue
    if n == 1:
        if isinstance(m1.sw, ExactSW) and isinstance(m2.sw, ExactSW):
            try:
                left = m1.sw.terms.map_exponents(lattice, gl.from_left)
                right = m2.sw.terms.map_exponents(lattice, gl.from_right)
                tc = t_minus_t_inverse(lattice, C)
                sw = exact(left * right * tc * tc)
            except ConstructionError:
                sw = UnknownSW(reason="SW classes meet the glued torus")
        elif isinstance(m1.sw, ZeroSW) or isinstance(m2.sw, ZeroSW):
            sw = ZeroSW()
        else:
            sw = UnknownSW(reason="torus fiber sum needs exact invariants on both sides")
    else:
        degree = 2 * n - 2
        try:
            tops1 = _max_classes(m1, s1, degree)
            tops2 = _max_classes(m2, s2, degree)
        except InsufficientInformationError as exc:
            sw = UnknownSW(reason=f"maximal part not determined: {exc}")
        else:
            items: List[Tuple[ClassVec, int]] = []
            for k1, c1 in tops1:
                for k2, c2 in tops2:
                    eps = add(gl.glue(k1, k2), scale(2, C))
                    items.append((eps, c1 * c2))
                    items.append((tuple(-v for v in eps), conj * c1 * c2))
            sw = MaxOnlySW(
                surface=C,
                max_degree=degree,
                terms=LaurentElem.from_terms(lattice, items),
                rim_torus_ambiguous=not (comp is not None and comp.holds),
            )

    simply_connected = "unknown"
    if (s1.complement_simply_connected and (s2.normally_generates or s2.complement_simply_connected)) or (
        s2.complement_simply_connected and (s1.normally_generates or s1.complement_simply_connected)
    ):
        simply_connected = "asserted"

    symplectic = "yes" if m1.symplectic == "yes" and m2.symplectic == "yes" else "unknown"
    hypotheses = list(m1.provenance.hypotheses) + list(m2.provenance.hypotheses)
    if comp is not None:
        hypotheses.append(comp.describe())

    result = FourManifold(
        name=name,
        e=e,
        sign=sign,
        b1=0 if simply_connected == "asserted" else None,
        simply_connected=simply_connected,
        symplectic=symplectic,
        tracked=lattice,
        sw=sw,
        canonical=canonical,
        surfaces=tuple(_sum_surfaces(m1, s1, m2, s2, gl)),
        provenance=Provenance(
            kind="fiber_sum",
            params={
                "left": m1.name,
                "left_surface": s1_label,
                "right": m2.name,
                "right_surface": s2_label,
                "genus": n,
            },
            hypotheses=hypotheses,
        ),
    )
    logger.debug("fiber_sum", manifold=name, genus=n, e=e, sign=sign, sw_kind=sw.kind, rank=lattice.rank)
    return result


# -- torus surgery ------------------------------------------------------------------------


def surgery_formula(sw_z: SWValue, sw_zhat_sum: LaurentElem, m: int) -> SWValue:
    """``SW_Z - m * sum_j SW_Zhat(. + j tau)`` applied coefficientwise.

    ``sw_zhat_sum`` is the already summed contribution of the surgered
    manifold with the torus removed and refilled along the dual curve.
    """
    if m == 0:
        return sw_z
    if isinstance(sw_z, UnknownSW):
        return sw_z
    own = sw_lattice(sw_z)
    if own is not None and own != sw_zhat_sum.lattice:
        raise LatticeMismatchError("surgery formula inputs live in different lattices")
    correction = sw_zhat_sum.scale(-m)
    if isinstance(sw_z, ZeroSW):
        return exact(correction)
    if isinstance(sw_z, QuotientSW):
        raise InsufficientInformationError("surgery formula needs expanded SW coefficients")
    base = known_terms(sw_z)
    assert base is not None
    terms = base + correction
    if terms.is_zero():
        return ZeroSW()
    if isinstance(sw_z, MaxOnlySW):
        return MaxOnlySW(
            surface=sw_z.surface,
            max_degree=sw_z.max_degree,
            terms=terms,
            rim_torus_ambiguous=sw_z.rim_torus_ambiguous,
        )
    if isinstance(sw_z, UnknownConstantSW):
        return UnknownConstantSW(terms=terms, constant_name=sw_z.constant_name)
    return ExactSW(terms=terms)


def vanishing_relation(sw: SWValue) -> LaurentElem:
    """``sum_j SW_Zhat(. + j tau) = -SW_Z``, read off from ``SW_{Z(-1)} = 0``."""
    terms = known_terms(sw)
    if terms is None:
        raise InsufficientInformationError(f"SW value of kind {sw.kind} has no known terms")
    return -terms


def surgery_multiplier(m_vec: Sequence[int]) -> int:
    """Scale factor of the maximal SW part after surgeries ``m_vec``, derived by the formula."""
    lattice = IntLattice.trivial("tau")
    sw: SWValue = ExactSW(terms=LaurentElem.one(lattice))
    for m in m_vec:
        sw = surgery_formula(sw, vanishing_relation(sw), m)
    terms = known_terms(sw)
    return 0 if terms is None else terms.coefficient((0,))


def torus_surgery(zp: FourManifold, m_vec: Sequence[int], torus_label: str = "Lambda") -> FourManifold:
    """Surgeries with coefficients ``m_i`` on the nullhomologous tori ``Lambda(a_i)``.

    Characteristic numbers and the intersection form are unchanged; each
    surgery scales the maximal SW part by ``m_i + 1``.
    """
    prov = zp.provenance
    if prov.kind != "zprime" or not any(h.startswith(COMPLEMENTARY) for h in prov.hypotheses):
        raise ConstructionError(
            f"{zp.name}: torus surgery needs a Z' fiber sum built under the complementarity hypothesis"
        )
    if not isinstance(zp.sw, MaxOnlySW) or zp.sw.rim_torus_ambiguous:
        raise ConstructionError(f"{zp.name}: maximal SW part is not determined, cannot apply the surgery formula")
    if any(m < 0 for m in m_vec):
        raise InvalidParameterError(f"surgery coefficients must be nonnegative, got {list(m_vec)}")
    g = prov.params.get("g")
    done = list(prov.surgeries)
    if not isinstance(g, int):
        raise ConstructionError(f"{zp.name}: genus parameter g missing from provenance")
    # m = 0 is the identity and is not recorded
    active = [m for m in m_vec if m]
    if len(m_vec) > 2 * g or len(done) + len(active) > 2 * g:
        raise InvalidParameterError(
            f"at most 2g = {2 * g} tori Lambda(a_i) are available, got {len(done)} done and {list(m_vec)} requested"
        )
    if not active:
        return zp

    sw: SWValue = zp.sw
    for m in active:
        sw = surgery_formula(sw, vanishing_relation(sw), m)

    surgeries = done + active
    base = prov.params.get("base", zp.name)
    symplectic = "no" if any(v >= 1 for v in surgeries) else zp.symplectic
    hypotheses = list(prov.hypotheses)
    note = f"surgery on nullhomologous tori {torus_label}(a_i)"
    if note not in hypotheses:
        hypotheses.append(note)
    result = zp.with_updates(
        name=f"{base}({','.join(str(v) for v in surgeries)})",
        sw=sw,
        symplectic=symplectic,
        provenance=prov.model_copy(update={"surgeries": surgeries, "hypotheses": hypotheses}),
    )
    logger.debug("torus_surgery", manifold=result.name, multiplier=prod(v + 1 for v in active))
    return result


def rim_tori_rank(h1_surface_rank: int, image_rank: int) -> int:
    """Rank of the rim-torus span, ``H^1(S) / im H^1(Y)``."""
    if h1_surface_rank < 0 or image_rank < 0:
        raise InvalidParameterError("ranks must be nonnegative")
    if image_rank > h1_surface_rank:
        raise InvalidParameterError(
            f"image rank {image_rank} exceeds the rank {h1_surface_rank} of H^1 of the surface"
        )
    return h1_surface_rank - image_rank
