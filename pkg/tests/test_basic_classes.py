import pytest
from oracles import brute_force_candidates
from pydantic import ValidationError

from swcalc.algebra import IntLattice
from swcalc.basic_classes import (
    AdjunctionScenario,
    Candidates,
    Vanishes,
    adjunction_constraints,
    enumerate_candidates,
    scenario_by_name,
    scenario_from_manifold,
    scenario_Y2g,
    scenario_Yprime_neg1,
)
from swcalc.constructions import build_En, build_Horikawa, build_Y
from swcalc.errors import InsufficientInformationError, InvalidParameterError, UnboundedScenarioError
from swcalc.manifold import TrackedSurface


def _beta(s, g):
    return s.lattice.vector({"tau": 2 * g - 2, "Sigma": 2})


@pytest.mark.parametrize("g", [2, 3, 4, 5, 6])
def test_Y2g_has_only_the_canonical_pair(g):
    s = scenario_Y2g(g)
    result = enumerate_candidates(s)
    beta = _beta(s, g)
    assert isinstance(result, Candidates)
    assert set(result.classes) == {beta, tuple(-v for v in beta)}
    assert s.lattice.square(beta) == s.simple_type_square == 8 * g - 8


@pytest.mark.parametrize("g", [2, 3])
@pytest.mark.parametrize("cross", [1, -1])
def test_Y2g_outcome_ignores_vanishing_cross_products(g, cross):
    assert enumerate_candidates(scenario_Y2g(g, vanishing_cross=cross)) == enumerate_candidates(scenario_Y2g(g))


def test_Y2g_genus_one_leaves_multiples_of_the_fiber():
    s = scenario_Y2g(1)
    result = enumerate_candidates(s)
    sigma = s.lattice.unit("Sigma")
    assert set(result.classes) == {tuple(c * v for v in sigma) for c in range(-2, 3)}
    assert set(result.classes) == brute_force_candidates(s, 2)


@pytest.mark.parametrize("n", [2, 4])
def test_elliptic_scenarios_match_brute_force(n):
    s = scenario_from_manifold(build_En(n))
    result = enumerate_candidates(s)
    assert set(result.classes) == brute_force_candidates(s, 3)


def test_candidates_from_the_Y_record_equal_canonical():
    y = build_Y(2, 3)
    result = enumerate_candidates(scenario_by_name("Y", {"n": 2, "g": 3}))
    assert set(result.classes) == {y.canonical, tuple(-v for v in y.canonical)}
    assert result.describe(y.tracked)[-1] == "4*S + 2*Sigma"


@pytest.mark.parametrize("g", [1, 2, 3, 4])
@pytest.mark.parametrize("ks", [[1], [2], [1, 1]])
def test_Yprime_after_minus_one_surgery_vanishes(g, ks):
    result = enumerate_candidates(scenario_Yprime_neg1(g, ks))
    assert isinstance(result, Vanishes)


def test_Yprime_genus_one_has_an_essential_sphere():
    result = enumerate_candidates(scenario_by_name("Yprime_neg1", {"g": 1, "L": [1]}))
    assert "essential sphere" in result.reason


def test_unbounded_scenario_is_reported():
    s = scenario_from_manifold(build_Horikawa(1))
    with pytest.raises(UnboundedScenarioError) as info:
        enumerate_candidates(s)
    assert info.value.unbounded


def test_enumeration_limit():
    with pytest.raises(InsufficientInformationError, match="over the limit"):
        enumerate_candidates(scenario_Y2g(2), limit=1)


def test_constraints_split_on_zero_bounds():
    equalities, inequalities = adjunction_constraints(scenario_Y2g(2))
    assert {label for label, _, _ in inequalities} == {"tau", "Sigma"}
    assert len(equalities) == 8


def test_negative_square_surfaces_are_ignored():
    lattice = IntLattice.build(["E"], {("E", "E"): -1})
    s = AdjunctionScenario(
        name="blowup",
        lattice=lattice,
        surfaces=[TrackedSurface(label="E", cls=(1,), genus=1, self_int=-1)],
        e=1,
        sign=-1,
    )
    assert adjunction_constraints(s) == ([], [])


def test_scenario_registry_errors():
    with pytest.raises(InvalidParameterError, match="unknown scenario"):
        scenario_by_name("nope", {})
    with pytest.raises(InvalidParameterError):
        scenario_by_name("Y2g", {"g": "three"})
    with pytest.raises(InvalidParameterError):
        scenario_by_name("Yprime_neg1", {"g": 2, "L": 1})
    with pytest.raises(InvalidParameterError):
        scenario_Y2g(0)


def test_scenario_checks_surface_squares():
    lattice = IntLattice.build(["A", "B"], {("A", "B"): 1})
    with pytest.raises(ValidationError):
        AdjunctionScenario(
            name="bad",
            lattice=lattice,
            surfaces=[TrackedSurface(label="A", cls=(1, 1), genus=2, self_int=0)],
            e=0,
            sign=0,
        )
