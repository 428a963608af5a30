"""Named manifold families.

Each builder assembles an invariant record either directly (elliptic
surfaces, Horikawa surfaces, the fiber sums ``Y`` and ``Y'`` with their full
junction lattices) or by running the generic operations and then upgrading
the SW value with the conclusion known for that family.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

import structlog

from ..algebra.knots import FiberedKnot, alexander_sub_square
from ..algebra.lattice import ClassVec, IntLattice
from ..algebra.laurent import LaurentElem, t_minus_t_inverse, two_term
from ..algebra.normal_form import chain_form, determinant
from ..errors import ConstructionError, InconsistentManifoldError, InvalidParameterError
from ..manifold.invariants import c1_squared, quarter_characteristic
from ..manifold.record import FourManifold, Provenance, TrackedSurface
from ..manifold.sw import (
    ExactSW,
    MaxOnlySW,
    QuotientSW,
    SWValue,
    UnknownConstantSW,
    UnknownSW,
    known_terms,
)
from .closed_forms import (
    check_numbers,
    e_sign_from_numbers,
    elliptic_numbers,
    horikawa_numbers,
    y3_numbers,
    z_numbers,
    zmg_numbers,
    zprime_numbers,
)
from .operations import COMPLEMENTARY, ComplementarityHypothesis, fiber_sum, knot_surgery, torus_surgery

logger = structlog.get_logger(__name__)


def _sign(power: int) -> int:
    return -1 if power % 2 else 1


def _surface(lattice: IntLattice, label: str, basis: str, genus: int, **flags: bool) -> TrackedSurface:
    cls = lattice.unit(basis)
    return TrackedSurface(label=label, cls=cls, genus=genus, self_int=lattice.square(cls), **flags)


def _numbers(m: FourManifold) -> Tuple[int, int]:
    return quarter_characteristic(m), c1_squared(m)


# -- junction lattices --------------------------------------------------------------------


def junction_block(prefix: str, size: int) -> Tuple[List[str], Dict[Tuple[str, str], int]]:
    """Rim tori ``R`` and vanishing classes ``V`` of one fiber-sum junction.

    ``R_j . V_i = a_i . a_j`` for the chain basis ``a`` of H_1 of the fiber,
    ``V_i^2 = 2`` and every other product vanishes.
    """
    chain = chain_form(size)
    if size and determinant(chain) != 1:
        raise ConstructionError(f"chain intersection form of size {size} is not unimodular")
    rims = [f"R{prefix}{i + 1}" for i in range(size)]
    vans = [f"V{prefix}{i + 1}" for i in range(size)]
    products: Dict[Tuple[str, str], int] = {}
    for i, v in enumerate(vans):
        products[(v, v)] = 2
        for j, r in enumerate(rims):
            if chain[i][j]:
                products[(r, v)] = chain[i][j]
    return rims + vans, products


def _junction_surfaces(lattice: IntLattice, names: Sequence[str]) -> List[TrackedSurface]:
    out = []
    for name in names:
        genus = 1 if name.startswith("R") else 2
        out.append(_surface(lattice, name, name, genus))
    return out


# -- S^1 x M_K and elliptic surfaces ----------------------------------------------------------


def build_S1xMK(knot: FiberedKnot) -> FourManifold:
    """``S^1 x M_K``: fibered over T^2 with fiber the capped Seifert surface."""
    lattice = IntLattice.build(["T", "Sigma"], {("T", "Sigma"): 1})
    t = lattice.unit("T")
    numerator = alexander_sub_square(knot, lattice, lattice.index("T"))
    denominator = t_minus_t_inverse(lattice, t) * t_minus_t_inverse(lattice, t)
    g = knot.genus
    return FourManifold(
        name=f"S1xM({knot.name})",
        e=0,
        sign=0,
        b1=2,
        simply_connected="false",
        parity="even",
        spin="yes",
        symplectic="yes",
        tracked=lattice,
        sw=QuotientSW(numerator=numerator, denominator=denominator),
        canonical=lattice.vector({"T": 2 * g - 2}),
        surfaces=(
            _surface(lattice, "T", "T", 1),
            _surface(lattice, "Sigma", "Sigma", g),
        ),
        provenance=Provenance(kind="S1xMK", params={"knot": knot.name, "knot_genus": g}),
    )


def build_En(n: int) -> FourManifold:
    """Simply connected minimal elliptic surface ``E(n)``.

    SW is the documented seed ``(t_T - t_T^{-1})^{n-2}``; ``E(1)`` has
    ``b2+ = 1`` and is left unknown.
    """
    if n < 1:
        raise InvalidParameterError(f"E(n) needs n >= 1, got {n}")
    lattice = IntLattice.build(["T", "Sigma"], {("T", "Sigma"): 2})
    t = lattice.unit("T")
    sw: SWValue
    if n >= 2:
        sw = ExactSW(terms=t_minus_t_inverse(lattice, t) ** (n - 2))
    else:
        sw = UnknownSW(reason="E(1) has b2+ = 1")
    en = FourManifold(
        name=f"E({n})",
        e=12 * n,
        sign=-8 * n,
        b1=0,
        simply_connected="asserted",
        parity="even" if n % 2 == 0 else "odd",
        spin="yes" if n % 2 == 0 else "no",
        symplectic="yes",
        tracked=lattice,
        sw=sw,
        canonical=lattice.vector({"T": n - 2}),
        surfaces=(
            _surface(lattice, "T", "T", 1, complement_simply_connected=True),
            _surface(lattice, "Sigma", "Sigma", n - 1, complement_simply_connected=True),
        ),
        provenance=Provenance(kind="E", params={"n": n}),
    )
    check_numbers(en.name, _numbers(en), elliptic_numbers(n))
    return en


def build_EnK(n: int, knot: FiberedKnot) -> FourManifold:
    """Knot surgery on the elliptic fiber of ``E(n)``; the horizontal fiber gets genus ``2g + n - 1``."""
    x = knot_surgery(build_En(n), "T", knot, name=f"E({n})_{knot.name}")
    return x.with_updates(provenance=Provenance(kind="EK", params={"n": n, "knot": knot.name, "knot_genus": knot.genus}))


def build_K3() -> FourManifold:
    """K3 with an elliptic fiber ``F`` and the torus ``C' = F + section`` (``F . C' = 1``)."""
    lattice = IntLattice.build(["F", "C"], {("F", "C"): 1})
    return FourManifold(
        name="K3",
        e=24,
        sign=-16,
        b1=0,
        simply_connected="asserted",
        parity="even",
        spin="yes",
        symplectic="yes",
        tracked=lattice,
        sw=ExactSW(terms=LaurentElem.one(lattice)),
        canonical=lattice.zero(),
        surfaces=(
            _surface(lattice, "F", "F", 1, complement_simply_connected=True),
            _surface(lattice, "C", "C", 1),
        ),
        provenance=Provenance(kind="K3"),
    )


def build_K3_knot(knot: FiberedKnot) -> FourManifold:
    """Knot surgery on a fiber of K3; ``C`` becomes a genus ``g(K) + 1`` surface with simply connected complement."""
    x = knot_surgery(build_K3(), "F", knot, name=f"K3_{knot.name}")
    surfaces = tuple(
        s.model_copy(update={"complement_simply_connected": True}) if s.label == "C" else s for s in x.surfaces
    )
    return x.with_updates(
        surfaces=surfaces,
        provenance=Provenance(
            kind="K3K",
            params={"knot": knot.name, "knot_genus": knot.genus},
            hypotheses=["pi_1(K3_K - C) = 1"],
        ),
    )


def build_Horikawa(m: int) -> FourManifold:
    """Spin Horikawa surface ``H(m)``: ``chi = 8m - 1``, ``c1^2 = 16m - 8``.

    ``e`` and ``sign`` are back-solved from those two numbers.
    """
    if m < 1:
        raise InvalidParameterError(f"H(m) needs m >= 1, got {m}")
    chi, c1sq = horikawa_numbers(m)
    e, sign = e_sign_from_numbers(chi, c1sq)
    lattice = IntLattice.build(["K", "C"], {("K", "K"): c1sq, ("K", "C"): 2})
    k = lattice.unit("K")
    return FourManifold(
        name=f"H({m})",
        e=e,
        sign=sign,
        b1=0,
        simply_connected="asserted",
        parity="even",
        spin="yes",
        symplectic="yes",
        tracked=lattice,
        sw=ExactSW(terms=two_term(lattice, k, -1)),
        canonical=k,
        surfaces=(_surface(lattice, "C", "C", 2, complement_simply_connected=True),),
        provenance=Provenance(
            kind="H",
            params={"m": m},
            hypotheses=["e and sign back-solved from chi = 8m - 1 and c1^2 = 16m - 8"],
        ),
    )


# -- Y_{n,g} and Y'_{1,g,L} --------------------------------------------------------------------


def build_Y(n: int, g: int) -> FourManifold:
    """The fiber sum ``Y_{n,g}`` of ``n`` copies of ``S^1 x M_K`` (K fibered of genus ``g``).

    Tracked: section ``S`` (genus n), fiber ``Sigma`` (genus g) and, for each
    of the ``n - 1`` junctions, ``2g`` rim tori and ``2g`` vanishing classes.
    """
    if n < 2:
        raise InvalidParameterError(f"Y(n, g) needs n >= 2, got {n}")
    if g < 1:
        raise InvalidParameterError(f"Y(n, g) needs g >= 1, got {g}")
    names = ["S", "Sigma"]
    products: Dict[Tuple[str, str], int] = {("S", "Sigma"): 1}
    junction: List[str] = []
    for j in range(1, n):
        block, block_products = junction_block(f"{j}_", 2 * g)
        junction += block
        products.update(block_products)
    lattice = IntLattice.build(names + junction, products)

    beta = lattice.vector({"S": 2 * g - 2, "Sigma": 2 * n - 2})
    e = (n - 1) * (4 * g - 4)
    sw: SWValue
    if g >= 2:
        sw = ExactSW(terms=two_term(lattice, beta, _sign((g - 1) * (n - 1))))
    elif n == 2:
        sw = UnknownConstantSW(terms=two_term(lattice, beta, 1), constant_name="c")
    else:
        sw = MaxOnlySW(
            surface=lattice.unit("S"),
            max_degree=2 * n - 2,
            terms=two_term(lattice, beta, 1),
        )
    return FourManifold(
        name=f"Y({n},{g})",
        e=e,
        sign=0,
        symplectic="yes",
        tracked=lattice,
        sw=sw,
        canonical=beta,
        surfaces=tuple(
            [
                _surface(lattice, "S", "S", n, normally_generates=True),
                _surface(lattice, "Sigma", "Sigma", g),
            ]
            + _junction_surfaces(lattice, junction)
        ),
        provenance=Provenance(kind="Y", params={"n": n, "g": g}),
    )


def build_Yprime(g: int, ks: Sequence[int]) -> FourManifold:
    """``Y'_{1,g,L}``: ``S^1 x M_{K_g}`` fiber-summed with ``Y(g, k_i)`` for each ``k_i`` in ``L``.

    The sections of the ``Y(g, k_i)`` glue with the torus section into ``S'``
    of genus ``1 + sum k_i``; their rim tori are nullhomologous and dropped.
    """
    ks = list(ks)
    if g < 1:
        raise InvalidParameterError(f"Y'(g, L) needs g >= 1, got {g}")
    if not ks:
        raise InvalidParameterError("Y'(g, L) needs a nonempty list L")
    if any(k < 1 for k in ks):
        raise InvalidParameterError(f"entries of L must be positive, got {ks}")
    total = sum(ks)
    names = ["Sigma_g", "S'"]
    products: Dict[Tuple[str, str], int] = {("Sigma_g", "S'"): 1}
    junction: List[str] = []
    for i, k in enumerate(ks, start=1):
        for j in range(1, g):
            block, block_products = junction_block(f"{i}_{j}_", 2 * k)
            junction += block
            products.update(block_products)
    lattice = IntLattice.build(names + junction, products)

    beta = lattice.vector({"Sigma_g": 2 * total, "S'": 2 * g - 2})
    e = 4 * (g - 1) * total
    sw: SWValue
    if g >= 2:
        sw = ExactSW(terms=two_term(lattice, beta, _sign((g - 1) * total)))
    elif total == 1:
        sw = UnknownConstantSW(terms=two_term(lattice, beta, 1), constant_name="c")
    else:
        sw = MaxOnlySW(surface=lattice.unit("S'"), max_degree=2 * total, terms=two_term(lattice, beta, 1))
    return FourManifold(
        name=f"Y'(1,{g},{ks})",
        e=e,
        sign=0,
        symplectic="yes",
        tracked=lattice,
        sw=sw,
        canonical=beta,
        surfaces=tuple(
            [
                _surface(lattice, "Sigma_g", "Sigma_g", g),
                _surface(lattice, "S'", "S'", 1 + total, normally_generates=True),
            ]
            + _junction_surfaces(lattice, junction)
        ),
        provenance=Provenance(kind="Yprime", params={"g": g, "L": ks}),
    )


# -- Z(X, C, g) ----------------------------------------------------------------------------------

_SECTION_RIM_TORI = "rim tori of the section of Y(n,g) are nullhomologous"


def z_from_parts(x: FourManifold, c_label: str, y: FourManifold, name: Optional[str] = None) -> FourManifold:
    """``X #_{C = S} Y(n, g)`` with both characteristic-number routes checked."""
    c = x.surface(c_label)
    n, g = y.provenance.params.get("n"), y.provenance.params.get("g")
    if y.provenance.kind != "Y" or not isinstance(n, int) or not isinstance(g, int):
        raise ConstructionError(f"{y.name} is not a Y(n, g) record")
    if c.genus != n:
        raise ConstructionError(f"{c_label} has genus {c.genus} but Y({n},{g}) has a genus-{n} section")
    if n < 2:
        raise ConstructionError(f"Z(X, C, g) needs C of genus >= 2, {c_label} has genus {n}")
    if not c.complement_simply_connected:
        raise ConstructionError(f"{x.name}: pi_1({x.name} - {c_label}) = 1 is not asserted")

    z = fiber_sum(
        x,
        c_label,
        y,
        "S",
        ComplementarityHypothesis(holds=True, justification=_SECTION_RIM_TORI),
        name=name or f"Z({x.name},{c_label},{g})",
    )
    chi_x, c1_x = _numbers(x)
    check_numbers(z.name, _numbers(z), z_numbers(chi_x, c1_x, n, g))
    return z.with_updates(
        parity=x.parity,
        provenance=Provenance(
            kind="Z",
            params={"X": x.name, "C": c_label, "n": n, "g": g},
            hypotheses=list(z.provenance.hypotheses),
        ),
    )


def build_Z(x: FourManifold, c_label: str, g: int, name: Optional[str] = None) -> FourManifold:
    if g < 1:
        raise InvalidParameterError(f"Z(X, C, g) needs g >= 1, got {g}")
    c = x.surface(c_label)
    if c.genus < 2:
        raise ConstructionError(f"Z(X, C, g) needs C of genus >= 2, {c_label} has genus {c.genus}")
    return z_from_parts(x, c_label, build_Y(c.genus, g), name=name)


def _upgrade_to_exact(m: FourManifold, why: str) -> FourManifold:
    terms = known_terms(m.sw)
    if not isinstance(m.sw, MaxOnlySW) or terms is None:
        raise ConstructionError(f"{m.name}: expected a maximal-part SW value to upgrade, got {m.sw.kind}")
    logger.info("sw_upgraded", manifold=m.name, reason=why)
    hypotheses = list(m.provenance.hypotheses) + [why]
    return m.with_updates(sw=ExactSW(terms=terms), provenance=m.provenance.model_copy(update={"hypotheses": hypotheses}))


def build_Zmg(m: int, g: int) -> FourManifold:
    """``Z(m, g) = Z(H(m), C, g)``: spin, ``chi = 8m + g - 1``, ``c1^2 = 16m + 8g - 8``."""
    z = build_Z(build_Horikawa(m), "C", g, name=f"Z({m},{g})")
    check_numbers(z.name, _numbers(z), zmg_numbers(m, g))
    z = _upgrade_to_exact(z, "SW_{Z;C,-} = 0: only the maximal classes are basic")
    return z.with_updates(
        spin="yes",
        parity="even",
        provenance=z.provenance.model_copy(update={"kind": "Zmg", "params": {"m": m, "g": g}}),
    )


def build_Z_k3(knot: FiberedKnot, g: int) -> FourManifold:
    """``Z(K3_K, C, g)`` with ``SW = sum over maximal classes`` (lower part vanishes for this ``X``)."""
    if knot.genus < 1:
        raise InvalidParameterError("the knot must have genus >= 1 so that C has genus >= 2")
    z = build_Z(build_K3_knot(knot), "C", g, name=f"Z(K3_{knot.name},C,{g})")
    return _upgrade_to_exact(z, "SW_{Z;C,-} = 0 for knot-surgered K3")


# -- Z'(X, C, g, L) and its torus surgeries ------------------------------------------------------------


def zprime_from_parts(
    x: FourManifold,
    c_label: str,
    yp: FourManifold,
    comp: ComplementarityHypothesis,
    name: Optional[str] = None,
) -> FourManifold:
    g, ks = yp.provenance.params.get("g"), yp.provenance.params.get("L")
    if yp.provenance.kind != "Yprime" or not isinstance(g, int) or not isinstance(ks, list):
        raise ConstructionError(f"{yp.name} is not a Y'(1, g, L) record")
    c = x.surface(c_label)
    if c.genus != 1 + sum(ks):
        raise ConstructionError(
            f"{c_label} has genus {c.genus}, but S' of Y'(1,{g},{ks}) has genus {1 + sum(ks)}"
        )
    base = name or f"Z'({x.name},{c_label},{g},{ks})"
    z = fiber_sum(x, c_label, yp, "S'", comp, name=base)
    chi_x, c1_x = _numbers(x)
    check_numbers(z.name, _numbers(z), zprime_numbers(chi_x, c1_x, g, ks))
    if not comp.holds:
        logger.warning("rim_torus_ambiguity", manifold=base, reason="complementarity not asserted")
    return z.with_updates(
        parity=x.parity,
        provenance=Provenance(
            kind="zprime",
            params={"X": x.name, "C": c_label, "g": g, "L": ks, "base": base},
            hypotheses=list(z.provenance.hypotheses),
        ),
    )


def build_Zprime(
    x: FourManifold,
    c_label: str,
    g: int,
    ks: Sequence[int],
    comp: ComplementarityHypothesis,
    name: Optional[str] = None,
) -> FourManifold:
    c = x.surface(c_label)
    if c.genus != 1 + sum(ks):
        raise ConstructionError(f"{c_label} has genus {c.genus}, but S' would have genus {1 + sum(ks)}")
    return zprime_from_parts(x, c_label, build_Yprime(g, ks), comp, name=name)


def elliptic_complementarity(n: int) -> ComplementarityHypothesis:
    return ComplementarityHypothesis(
        holds=True,
        justification=f"E({n}) with its genus-{n - 1} horizontal fiber, reference loops bound (-1)-disks",
    )


def build_Zprime_En(g: int, ks: Sequence[int]) -> FourManifold:
    """``Z'`` on ``X = E(n)``, ``n = 2 + sum k_i``, glued along the horizontal fiber."""
    n = 2 + sum(ks)
    return build_Zprime(build_En(n), "Sigma", g, ks, elliptic_complementarity(n))


def build_Zprime_m(
    x: FourManifold,
    c_label: str,
    g: int,
    ks: Sequence[int],
    comp: ComplementarityHypothesis,
    m_vec: Sequence[int],
) -> FourManifold:
    """``Z'(m)``: torus surgeries with coefficients ``m_vec`` on ``Z'``."""
    return torus_surgery(build_Zprime(x, c_label, g, ks, comp), m_vec)


# -- Y(n; K1, K2) -------------------------------------------------------------------------------------


def build_Y3(n: int, k1: FiberedKnot, k2: FiberedKnot) -> FourManifold:
    """Fiber sum of ``E(n)_{K1}`` and ``E(n)_{K2}`` along their genus ``2g + n - 1`` horizontal fibers.

    The two knot-surgered elliptic fibers close up into the genus-3 class
    ``tau`` with ``tau . Sigma = 2``; rim tori are Lagrangian and drop out, so
    ``SW = t_K + (-1)^n t_K^{-1}`` with ``K = (2g + n - 2) tau + 2 Sigma``.
    """
    if k1.genus != k2.genus:
        raise ConstructionError(f"knots must have equal genus, got {k1.genus} and {k2.genus}")
    if n < 1:
        raise InvalidParameterError(f"Y(n; K1, K2) needs n >= 1, got {n}")
    g = k1.genus
    x1 = build_EnK(n, k1)
    x2 = build_EnK(n, k2)
    y = fiber_sum(
        x1,
        "Sigma",
        x2,
        "Sigma",
        name=f"Y({n};{k1.name},{k2.name})",
        surface_name="Sigma",
        dual_name="tau",
    )
    check_numbers(y.name, _numbers(y), y3_numbers(n, g))
    lattice = y.tracked
    canonical = lattice.vector({"tau": 2 * g + n - 2, "Sigma": 2})
    if y.canonical is not None and tuple(y.canonical) != canonical:
        raise ConstructionError(f"{y.name}: glued canonical class {y.canonical} differs from {canonical}")
    sw = ExactSW(terms=two_term(lattice, canonical, _sign(n)))
    if isinstance(y.sw, MaxOnlySW) and y.sw.terms != sw.terms:
        raise ConstructionError(f"{y.name}: fiber-sum maximal part {y.sw.terms} disagrees with {sw.terms}")

    surfaces = []
    for s in y.surfaces:
        if s.label == "T+T":
            s = s.model_copy(update={"label": "tau"})
        surfaces.append(s)
    logger.info("sw_upgraded", manifold=y.name, reason="rim tori are Lagrangian")
    y = y.with_updates(
        simply_connected="asserted",
        b1=0,
        sw=sw,
        canonical=canonical,
        surfaces=tuple(surfaces),
        provenance=Provenance(
            kind="Y3",
            params={"n": n, "g": g, "K1": k1.name, "K2": k2.name},
            hypotheses=["pi_1 = 1 via a sphere section", "rim tori are Lagrangian"],
        ),
    )
    if canonical_square(y) != c1_squared(y):
        raise InconsistentManifoldError(f"{y.name}: K^2 = {canonical_square(y)} but c1^2 = {c1_squared(y)}")
    return y


def canonical_square(m: FourManifold) -> Optional[int]:
    if m.canonical is None:
        return None
    return m.tracked.square(m.canonical)


def zprime_canonical(m: FourManifold) -> ClassVec:
    """The maximal class ``eps'`` of a ``Z'`` record (positive side)."""
    if not isinstance(m.sw, MaxOnlySW):
        raise ConstructionError(f"{m.name}: no maximal part recorded")
    for t in m.sw.terms.terms:
        if m.tracked.pair(t.exp, m.sw.surface) == m.sw.max_degree:
            return t.exp
    raise ConstructionError(f"{m.name}: maximal part is empty")


__all__ = [
    "COMPLEMENTARY",
    "build_En",
    "build_EnK",
    "build_Horikawa",
    "build_K3",
    "build_K3_knot",
    "build_S1xMK",
    "build_Y",
    "build_Y3",
    "build_Yprime",
    "build_Z",
    "build_Z_k3",
    "build_Zmg",
    "build_Zprime",
    "build_Zprime_En",
    "build_Zprime_m",
    "canonical_square",
    "elliptic_complementarity",
    "junction_block",
    "z_from_parts",
    "zprime_canonical",
    "zprime_from_parts",
]
