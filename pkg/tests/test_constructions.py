from math import prod

import pytest

from swcalc.algebra import alexander_torus_knot, figure_eight, trefoil, twist_knot_family, two_term, unknot
from swcalc.constructions import (
    ComplementarityHypothesis,
    build_En,
    build_EnK,
    build_Horikawa,
    build_K3_knot,
    build_S1xMK,
    build_Y,
    build_Y3,
    build_Yprime,
    build_Z,
    build_Z_k3,
    build_Zmg,
    build_Zprime,
    build_Zprime_En,
    build_Zprime_m,
    canonical_square,
    elliptic_complementarity,
    fiber_sum,
    knot_surgery,
    rim_tori_rank,
    surgery_formula,
    surgery_multiplier,
    torus_surgery,
    vanishing_relation,
    zmg_numbers,
    zprime_canonical,
    zprime_numbers,
)
from swcalc.constructions.closed_forms import e_sign_from_numbers, elliptic_numbers, y_numbers, yprime_numbers
from swcalc.errors import ConstructionError, InsufficientInformationError, InvalidParameterError
from swcalc.manifold import (
    ExactSW,
    MaxOnlySW,
    QuotientSW,
    UnknownConstantSW,
    UnknownSW,
    ZeroSW,
    c1_squared,
    homeo_compare,
    known_terms,
    quarter_characteristic,
    sw_conjugation_check,
)


def _numbers(m):
    return quarter_characteristic(m), c1_squared(m)


# -- seeds -------------------------------------------------------------------------


def test_elliptic_seed_invariant():
    e4 = build_En(4)
    assert known_terms(e4.sw).as_dict() == {(2, 0): 1, (0, 0): -2, (-2, 0): 1}
    assert e4.spin == "yes"
    assert build_En(3).spin == "no"
    assert isinstance(build_En(1).sw, UnknownSW)
    assert all(_numbers(build_En(n)) == elliptic_numbers(n) for n in range(1, 6))
    with pytest.raises(InvalidParameterError):
        build_En(0)


def test_horikawa_numbers():
    h = build_Horikawa(1)
    assert (h.e, h.sign) == (76, -48)
    assert _numbers(h) == (7, 8)
    assert e_sign_from_numbers(7, 8) == (76, -48)
    assert h.tracked.square(h.canonical) == 8


def test_s1_times_knot_complement_keeps_the_quotient():
    m = build_S1xMK(trefoil())
    assert isinstance(m.sw, QuotientSW)
    assert (m.e, m.sign) == (0, 0)
    assert m.surface("Sigma").genus == 1


# -- knot surgery ------------------------------------------------------------------


def test_knot_surgery_on_elliptic_fiber():
    x = build_EnK(2, trefoil())
    assert known_terms(x.sw).as_dict() == {(2, 0): 1, (0, 0): -1, (-2, 0): 1}
    assert x.surface("Sigma").genus == 3
    assert x.canonical == (2, 0)
    assert x.simply_connected == "asserted"


def test_knot_surgery_with_unknot_is_identity():
    e2 = build_En(2)
    assert knot_surgery(e2, "T", unknot()) is e2


def test_knot_surgery_needs_square_zero_torus():
    with pytest.raises(ConstructionError):
        knot_surgery(build_En(3), "Sigma", trefoil())


def test_knot_surgery_on_k3_fiber_raises_genus_of_section():
    x = build_K3_knot(alexander_torus_knot(2, 5))
    assert x.surface("C").genus == 3
    assert x.surface("C").complement_simply_connected
    assert len(known_terms(x.sw).terms) == 5


def test_knot_surgery_refuses_maximal_part_only():
    y = build_Y(3, 1)
    with pytest.raises(InsufficientInformationError):
        knot_surgery(y, "R1_1", trefoil())


# -- Y(n, g) and Y'(1, g, L) -----------------------------------------------------


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("g", [2, 3, 4])
def test_Y_invariant(n, g):
    y = build_Y(n, g)
    beta = y.tracked.vector({"S": 2 * g - 2, "Sigma": 2 * n - 2})
    sign = -1 if (g - 1) * (n - 1) % 2 else 1
    assert isinstance(y.sw, ExactSW)
    assert y.sw.terms == two_term(y.tracked, beta, sign)
    assert _numbers(y) == y_numbers(n, g)
    assert sw_conjugation_check(y)


def test_Y_genus_one_variants():
    assert isinstance(build_Y(2, 1).sw, UnknownConstantSW)
    assert isinstance(build_Y(3, 1).sw, MaxOnlySW)
    with pytest.raises(InvalidParameterError):
        build_Y(1, 2)


@pytest.mark.parametrize("g,ks", [(1, [1]), (1, [2]), (2, [1]), (3, [1, 1])])
def test_Yprime_records(g, ks):
    yp = build_Yprime(g, ks)
    assert _numbers(yp) == yprime_numbers(g, ks)
    assert yp.surface("S'").genus == 1 + sum(ks)
    assert yp.surface("S'").normally_generates


def test_Yprime_rejects_empty_list():
    with pytest.raises(InvalidParameterError):
        build_Yprime(2, [])
    with pytest.raises(InvalidParameterError):
        build_Yprime(2, [0])


# -- fiber sums ---------------------------------------------------------------------


def test_fiber_sum_along_tori_uses_product_rule():
    e4 = fiber_sum(build_En(2), "T", build_En(2), "T")
    assert (e4.e, e4.sign) == (48, -32)
    assert known_terms(e4.sw).as_dict() == {(2, 0): 1, (0, 0): -2, (-2, 0): 1}
    assert e4.simply_connected == "asserted"


def test_fiber_sum_with_unknown_side():
    e2 = fiber_sum(build_En(1), "T", build_En(1), "T")
    assert (e2.e, e2.sign) == (24, -16)
    assert isinstance(e2.sw, UnknownSW)


def test_fiber_sum_checks_genus_and_square():
    with pytest.raises(ConstructionError):
        fiber_sum(build_En(2), "Sigma", build_Y(2, 2), "S")
    with pytest.raises(ConstructionError):
        fiber_sum(build_En(2), "Nope", build_Y(2, 2), "S")


@pytest.mark.parametrize("m", [1, 2, 5, 8])
@pytest.mark.parametrize("g", [1, 2, 4])
def test_Zmg_numbers_by_two_routes(m, g):
    z = build_Zmg(m, g)
    assert _numbers(z) == zmg_numbers(m, g) == (8 * m + g - 1, 16 * m + 8 * g - 8)
    assert z.spin == "yes"
    assert z.sign % 16 == 0


def test_Z_3_1():
    z = build_Zmg(3, 1)
    assert (z.e, z.sign) == (240, -144)
    assert isinstance(z.sw, ExactSW)
    assert len(z.sw.terms.terms) == 2
    assert z.sw.terms.bar() == z.sw.terms
    assert z.tracked.square(z.sw.terms.terms[0].exp) == 48


def test_Z_over_knot_surgered_K3():
    z = build_Z_k3(trefoil(), 2)
    assert isinstance(z.sw, ExactSW)
    assert _numbers(z) == (4, 16)
    assert z.provenance.hypotheses[-1] == "SW_{Z;C,-} = 0 for knot-surgered K3"
    assert sw_conjugation_check(z)
    with pytest.raises(InvalidParameterError):
        build_Z_k3(unknot(), 1)


def test_Z_needs_a_higher_genus_surface():
    with pytest.raises(ConstructionError):
        build_Z(build_En(2), "Sigma", 1)
    with pytest.raises(InvalidParameterError):
        build_Z(build_En(3), "Sigma", 0)


# -- Z' and torus surgery -------------------------------------------------------------


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("g", [1, 2, 3])
def test_Z_and_Zprime_are_homeomorphic(n, g):
    x = build_En(n + 1)
    z = build_Z(x, "Sigma", g)
    zp = build_Zprime(x, "Sigma", g, [n - 1], elliptic_complementarity(n + 1))
    assert homeo_compare(z, zp).verdict == "homeomorphic"


def test_Zprime_numbers_follow_fiber_sum_arithmetic():
    zp = build_Zprime_En(2, [1])
    assert _numbers(zp) == zprime_numbers(3, 0, 2, [1]) == (5, 16)


def test_Zprime_without_complementarity_is_ambiguous():
    zp = build_Zprime(build_En(3), "Sigma", 2, [1], ComplementarityHypothesis(holds=False))
    assert zp.sw.rim_torus_ambiguous
    with pytest.raises(ConstructionError):
        torus_surgery(zp, [1])


@pytest.mark.parametrize("m", range(0, 7))
def test_surgery_multiplier(m):
    assert surgery_multiplier([m]) == m + 1


@pytest.mark.parametrize("vec", [[1], [2], [3], [1, 2], [3, 3], [1, 2, 3], [2, 0, 1, 3], [1, 1, 1, 1]])
def test_torus_surgery_scales_maximal_part(vec):
    zp = build_Zprime_En(2, [1])
    out = torus_surgery(zp, vec)
    assert known_terms(out.sw) == known_terms(zp.sw).scale(prod(v + 1 for v in vec))
    assert homeo_compare(out, zp).verdict == "homeomorphic"
    assert out.symplectic == "no"
    assert out.provenance.surgeries == [v for v in vec if v]
    assert out.sw.terms.coefficient(zprime_canonical(zp)) == prod(v + 1 for v in vec)


def test_Zprime_m_is_torus_surgery_on_Zprime():
    x, comp = build_En(3), elliptic_complementarity(3)
    out = build_Zprime_m(x, "Sigma", 2, [1], comp, [2])
    base = build_Zprime(x, "Sigma", 2, [1], comp)
    assert known_terms(out.sw) == known_terms(base.sw).scale(3)
    assert out.provenance.surgeries == [2]


def test_torus_surgery_limits():
    zp = build_Zprime_En(2, [1])
    assert torus_surgery(zp, []) is zp
    assert torus_surgery(zp, [0]) is zp
    assert torus_surgery(zp, [0, 0]) == zp
    assert torus_surgery(torus_surgery(zp, [1]), [0]).provenance.surgeries == [1]
    with pytest.raises(InvalidParameterError):
        torus_surgery(zp, [1, 1, 1, 1, 1])
    with pytest.raises(InvalidParameterError):
        torus_surgery(zp, [-1])
    with pytest.raises(ConstructionError):
        torus_surgery(build_En(2), [1])


@pytest.mark.parametrize("u, v", [([1], [2]), ([2, 0], [1]), ([0], [3]), ([1, 1], [2, 3]), ([3], [0, 0])])
def test_torus_surgery_composes_by_concatenation(u, v):
    zp = build_Zprime_En(2, [1])
    assert torus_surgery(torus_surgery(zp, u), v) == torus_surgery(zp, u + v)


@pytest.mark.parametrize(
    "build",
    [
        lambda: build_En(3),
        lambda: build_EnK(3, trefoil()),
        lambda: build_Y(2, 3),
        lambda: build_Zmg(3, 1),
        lambda: build_Zprime_En(2, [1]),
        lambda: build_Y3(2, trefoil(), figure_eight()),
    ],
)
def test_surgery_with_minus_one_kills_the_invariant(build):
    sw = build().sw
    assert isinstance(surgery_formula(sw, vanishing_relation(sw), -1), ZeroSW)


def test_surgery_formula_pieces():
    e3 = build_En(3)
    assert surgery_formula(e3.sw, vanishing_relation(e3.sw), 0) is e3.sw
    assert vanishing_relation(e3.sw) == -known_terms(e3.sw)
    doubled = surgery_formula(e3.sw, vanishing_relation(e3.sw), 1)
    assert known_terms(doubled) == known_terms(e3.sw).scale(2)
    with pytest.raises(InsufficientInformationError):
        vanishing_relation(UnknownSW())


def test_rim_tori_rank():
    assert rim_tori_rank(4, 1) == 3
    with pytest.raises(InvalidParameterError):
        rim_tori_rank(2, 3)


# -- Y(n; K1, K2) ----------------------------------------------------------------------

KNOT_PAIRS = {1: (trefoil(), figure_eight()), 3: (alexander_torus_knot(2, 7), alexander_torus_knot(3, 4))}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("g", [1, 3])
def test_Y3_invariants(n, g):
    k1, k2 = KNOT_PAIRS[g]
    y = build_Y3(n, k1, k1)
    assert c1_squared(y) == 16 * g + 8 * n - 16
    assert y.tracked.square(y.canonical) == c1_squared(y)
    sign = -1 if n % 2 else 1
    assert y.sw.terms == two_term(y.tracked, y.canonical, sign)
    other = build_Y3(n, k1, k2)
    assert other.sw.terms.to_text() == y.sw.terms.to_text()


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("g", range(1, 7))
def test_Y3_canonical_square_is_c1_squared(n, g):
    knot = twist_knot_family(g)
    y = build_Y3(n, knot, knot)
    assert canonical_square(y) == c1_squared(y)


def test_Y3_needs_equal_genus():
    with pytest.raises(ConstructionError):
        build_Y3(2, trefoil(), alexander_torus_knot(2, 5))
