import pytest

from swcalc.algebra import IntLattice, LaurentElem, two_term
from swcalc.constructions import build_En, build_K3, build_Y, build_Zmg, build_Zprime_En, torus_surgery
from swcalc.errors import InconsistentManifoldError, InsufficientInformationError
from swcalc.manifold import (
    ExactSW,
    FourManifold,
    UnknownSW,
    ZeroSW,
    b2_minus,
    b2_plus,
    c1_squared,
    characteristic_numbers,
    homeo_compare,
    known_terms,
    max_part,
    quarter_characteristic,
    render_sw,
    render_text,
    rochlin_check,
    simple_type_check,
    sw_conjugation_check,
    sw_max_part,
    taubes_symplectic_check,
)


def _cp2() -> FourManifold:
    lattice = IntLattice.build(["H"], {("H", "H"): 1})
    return FourManifold(
        name="CP2",
        e=3,
        sign=1,
        b1=0,
        simply_connected="asserted",
        parity="odd",
        spin="no",
        tracked=lattice,
    )


def test_characteristic_numbers_of_elliptic_surface():
    e2 = build_En(2)
    assert quarter_characteristic(e2) == 2
    assert c1_squared(e2) == 0
    assert b2_plus(e2) == 3
    assert b2_minus(e2) == 19
    assert characteristic_numbers(e2) == {
        "name": "E(2)",
        "e": 24,
        "sign": -16,
        "chi": 2,
        "c1_squared": 0,
        "b1": 0,
        "b2_plus": 3,
        "b2_minus": 19,
    }


def test_quarter_characteristic_must_be_integral():
    m = FourManifold(name="odd", e=1, sign=0, tracked=IntLattice.trivial())
    with pytest.raises(InconsistentManifoldError):
        quarter_characteristic(m)
    assert "non-integral" in render_text(m)


def test_record_invariants_are_enforced():
    lattice = IntLattice.build(["H"], {("H", "H"): 1})
    with pytest.raises(ValueError):
        FourManifold(name="x", e=3, sign=1, spin="yes", parity="odd", tracked=lattice)
    with pytest.raises(ValueError):
        FourManifold(name="x", e=3, sign=1, b1=2, simply_connected="asserted", tracked=lattice)
    with pytest.raises(ValueError):
        FourManifold(
            name="x",
            e=3,
            sign=1,
            tracked=lattice,
            surfaces=[{"label": "H", "cls": (1,), "genus": 0, "self_int": 0}],
        )
    with pytest.raises(ValueError):
        FourManifold(name="x", e=3, sign=1, tracked=lattice, sw=ExactSW(terms=two_term(IntLattice.trivial(), (1,), 1)))


def test_exact_sw_must_be_conjugation_symmetric():
    lattice = IntLattice.trivial()
    with pytest.raises(ValueError):
        ExactSW(terms=LaurentElem.from_terms(lattice, [((1,), 1), ((-1,), 2)]))


def test_json_round_trip_is_byte_stable():
    z = build_Zmg(3, 1)
    text = z.to_json()
    again = FourManifold.from_json(text)
    assert again == z
    assert again.to_json() == text


@pytest.mark.parametrize(
    "left,right,verdict",
    [
        (build_En(2), build_K3(), "homeomorphic"),
        (build_En(2), build_En(3), "distinct"),
        (build_En(3), build_En(3), "homeomorphic"),
    ],
)
def test_homeo_compare(left, right, verdict):
    assert homeo_compare(left, right).verdict == verdict


def test_homeo_compare_needs_simple_connectivity_and_indefinite_forms():
    y = build_Y(2, 2)
    result = homeo_compare(y, y)
    assert result.verdict == "undecidable"
    assert any("simple connectivity" in note for note in result.notes)
    assert homeo_compare(_cp2(), _cp2()).verdict == "undecidable"


def test_homeo_compare_parity_difference():
    odd = build_En(3)
    even = odd.with_updates(parity="even", spin="unknown")
    result = homeo_compare(odd, even)
    assert result.verdict == "distinct"
    assert result.left == (36, -24, "odd")


def test_taubes_verdicts():
    zp = build_Zprime_En(2, [1])
    assert taubes_symplectic_check(zp).verdict == "consistent"
    obstructed = taubes_symplectic_check(torus_surgery(zp, [2]))
    assert obstructed.verdict == "obstructed"
    assert obstructed.coefficient == 3
    assert taubes_symplectic_check(build_En(1)).verdict == "inapplicable"
    zero = build_En(2).with_updates(sw=ZeroSW())
    assert taubes_symplectic_check(zero).verdict == "obstructed"
    off_degree = zp.with_updates(canonical=zp.tracked.zero())
    assert taubes_symplectic_check(off_degree).verdict == "inapplicable"


def test_conjugation_rochlin_and_simple_type():
    assert sw_conjugation_check(build_En(3)) is True
    assert sw_conjugation_check(build_En(1)) is None
    z = build_Zmg(3, 1)
    assert sw_conjugation_check(z) is True
    assert rochlin_check(z)
    assert simple_type_check(z) is True
    assert not rochlin_check(build_En(2).with_updates(sign=-8))


def test_max_part_along_tracked_surfaces():
    y = build_Y(2, 2)
    beta = y.tracked.vector({"S": 2, "Sigma": 2})
    assert max_part(y, "S") == two_term(y.tracked, beta, -1)
    with pytest.raises(InsufficientInformationError):
        max_part(build_En(1), "T")
    with pytest.raises(InsufficientInformationError):
        sw_max_part(UnknownSW(reason="test"), y.tracked, y.tracked.unit("S"), 2)


def test_render():
    e3 = build_En(3)
    assert render_sw(e3.sw) == "t^(T) - t^(-T)"
    assert render_sw(UnknownSW(reason="b2+ = 1")) == "unknown (b2+ = 1)"
    text = render_text(build_Zmg(3, 1))
    assert "chi, c1^2     24, 48" in text
    assert "spin          yes" in text
