"""Basic-class enumeration from the adjunction inequality and simple type."""

from .enumerate import (
    DEFAULT_ENUMERATION_LIMIT,
    Candidates,
    EnumerationResult,
    Vanishes,
    adjunction_constraints,
    enumerate_candidates,
)
from .scenario import (
    SCENARIOS,
    AdjunctionScenario,
    scenario_by_name,
    scenario_from_manifold,
    scenario_Y,
    scenario_Y2g,
    scenario_Yprime_neg1,
)

__all__ = [
    "DEFAULT_ENUMERATION_LIMIT",
    "SCENARIOS",
    "AdjunctionScenario",
    "Candidates",
    "EnumerationResult",
    "Vanishes",
    "adjunction_constraints",
    "enumerate_candidates",
    "scenario_by_name",
    "scenario_from_manifold",
    "scenario_Y",
    "scenario_Y2g",
    "scenario_Yprime_neg1",
]
