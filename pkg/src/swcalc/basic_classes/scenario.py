"""Adjunction scenarios: a lattice, the surfaces known to sit in it, and ``(e, sign)``."""

from __future__ import annotations

from typing import Any, Callable, Dict, List, Mapping, Sequence

from pydantic import BaseModel, ConfigDict, model_validator

from ..algebra.lattice import IntLattice
from ..constructions.builders import build_Y, build_Yprime, junction_block
from ..errors import InvalidParameterError
from ..manifold.record import FourManifold, TrackedSurface


class AdjunctionScenario(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    lattice: IntLattice
    surfaces: List[TrackedSurface]
    e: int
    sign: int

    @model_validator(mode="after")
    def _check_surfaces(self) -> "AdjunctionScenario":
        for s in self.surfaces:
            square = self.lattice.square(s.cls)
            if s.self_int != square:
                raise ValueError(f"{s.label}: self_int {s.self_int} but the Gram square is {square}")
        return self

    @property
    def simple_type_square(self) -> int:
        """``k^2`` demanded of every basic class: ``2e + 3 sign``."""
        return 2 * self.e + 3 * self.sign

    def surface(self, label: str) -> TrackedSurface:
        for s in self.surfaces:
            if s.label == label:
                return s
        raise InvalidParameterError(f"{self.name}: no surface labelled {label!r}")


def scenario_from_manifold(m: FourManifold, extra: Sequence[TrackedSurface] = ()) -> AdjunctionScenario:
    return AdjunctionScenario(
        name=m.name,
        lattice=m.tracked,
        surfaces=list(m.surfaces) + list(extra),
        e=m.e,
        sign=m.sign,
    )


def scenario_Y2g(g: int, vanishing_cross: int = 0) -> AdjunctionScenario:
    """``Y_{2,g}`` with basis ``tau, Sigma, R_1..R_2g, V_1..V_2g``.

    ``tau`` is the genus-2 section, ``R_j`` the rim tori and ``V_i`` the
    vanishing classes (square 2, ``R_j . V_i = a_i . a_j``). The products
    ``V_i . V_j`` for ``i != j`` are not determined; ``vanishing_cross`` sets
    them all and never changes the outcome.
    """
    if g < 1:
        raise InvalidParameterError(f"Y(2, g) needs g >= 1, got {g}")
    block, products = junction_block("", 2 * g)
    products = dict(products)
    products[("tau", "Sigma")] = 1
    vans = [name for name in block if name.startswith("V")]
    if vanishing_cross:
        for i, a in enumerate(vans):
            for b in vans[i + 1 :]:
                products[(a, b)] = vanishing_cross
    lattice = IntLattice.build(["tau", "Sigma"] + block, products)

    def surface(label: str, genus: int) -> TrackedSurface:
        cls = lattice.unit(label)
        return TrackedSurface(label=label, cls=cls, genus=genus, self_int=lattice.square(cls))

    surfaces = [surface("tau", 2), surface("Sigma", g)]
    surfaces += [surface(name, 1 if name.startswith("R") else 2) for name in block]
    return AdjunctionScenario(name=f"Y(2,{g})", lattice=lattice, surfaces=surfaces, e=4 * g - 4, sign=0)


def scenario_Y(n: int, g: int) -> AdjunctionScenario:
    return scenario_from_manifold(build_Y(n, g))


def scenario_Yprime_neg1(g: int, ks: Sequence[int]) -> AdjunctionScenario:
    """``Y'_{1,g,L}(-1)``: the Y' record plus the genus ``g - 1`` surface ``Gamma``.

    The -1 surgery caps a Seifert surface of the knot, so ``Gamma`` sits on the
    ``Sigma_g`` class: ``S' . Gamma = 1`` and ``Sigma_g . Gamma = 0``. For
    ``g = 1`` it is a sphere, essential because it meets ``S'`` once.
    """
    yp = build_Yprime(g, ks)
    cls = yp.tracked.unit("Sigma_g")
    gamma = TrackedSurface(label="Gamma", cls=cls, genus=g - 1, self_int=0, essential=g == 1)
    scenario = scenario_from_manifold(yp, [gamma])
    return scenario.model_copy(update={"name": f"{yp.name}(-1)"})


def _int(params: Mapping[str, Any], key: str) -> int:
    value = params.get(key)
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidParameterError(f"scenario parameter {key!r} must be an integer, got {value!r}")
    return value


def _ints(params: Mapping[str, Any], key: str) -> List[int]:
    value = params.get(key)
    if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise InvalidParameterError(f"scenario parameter {key!r} must be a list of integers, got {value!r}")
    return value


SCENARIOS: Dict[str, Callable[[Mapping[str, Any]], AdjunctionScenario]] = {
    "Y2g": lambda p: scenario_Y2g(_int(p, "g")),
    "Y": lambda p: scenario_Y(_int(p, "n"), _int(p, "g")),
    "Yprime_neg1": lambda p: scenario_Yprime_neg1(_int(p, "g"), _ints(p, "L")),
}


def scenario_by_name(name: str, params: Mapping[str, Any]) -> AdjunctionScenario:
    builder = SCENARIOS.get(name)
    if builder is None:
        raise InvalidParameterError(f"unknown scenario {name!r}; built-in scenarios: {sorted(SCENARIOS)}")
    return builder(params)
