"""Candidate basic classes from the adjunction inequality and simple type.

For every tracked surface of genus ``h >= 1`` and square ``S^2 >= 0`` a basic
class ``k`` satisfies ``|k . S| <= 2h - 2 - S^2``. Bounds of zero are solved
exactly on the integer kernel; the remaining inequalities must cut a bounded
polytope out of that kernel, which is checked by rational linear programming
before any lattice point is visited. Survivors are filtered by
``k^2 = 2e + 3 sign``.
"""

from __future__ import annotations

from itertools import product
from math import ceil, floor, prod
from typing import Annotated, List, Literal, Sequence, Tuple, Union

import structlog
from pydantic import BaseModel, ConfigDict, Field
from sympy import Add, Integer, Symbol
from sympy.solvers.simplex import UnboundedLPError, lpmax, lpmin

from ..algebra.lattice import ClassVec, IntLattice
from ..algebra.normal_form import integer_kernel
from ..errors import InsufficientInformationError, UnboundedScenarioError
from .scenario import AdjunctionScenario

logger = structlog.get_logger(__name__)

DEFAULT_ENUMERATION_LIMIT = 2_000_000


class Vanishes(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["vanishes"] = "vanishes"
    reason: str


class Candidates(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["candidates"] = "candidates"
    classes: List[ClassVec]

    def describe(self, lattice: IntLattice) -> List[str]:
        return [lattice.describe(k) for k in self.classes]


EnumerationResult = Annotated[Union[Vanishes, Candidates], Field(discriminator="kind")]

# (label, row of the functional k -> k.S, bound)
Constraint = Tuple[str, ClassVec, int]


def adjunction_constraints(s: AdjunctionScenario) -> Tuple[List[Constraint], List[Constraint]]:
    """Split the applicable adjunction constraints into equalities and inequalities."""
    equalities: List[Constraint] = []
    inequalities: List[Constraint] = []
    for surf in s.surfaces:
        if surf.self_int < 0:
            logger.warning("surface_ignored", scenario=s.name, surface=surf.label, self_int=surf.self_int)
            continue
        if surf.genus == 0:
            continue
        bound = 2 * surf.genus - 2 - surf.self_int
        row = s.lattice.row(surf.cls)
        if not any(row):
            continue
        (equalities if bound == 0 else inequalities).append((surf.label, row, bound))
    return equalities, inequalities


def _dot(x: Sequence[int], y: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(x, y))


def _box(
    s: AdjunctionScenario, basis: List[ClassVec], constraints: List[Constraint]
) -> List[Tuple[int, int]]:
    """Integer bounds on each kernel coordinate, or ``UnboundedScenarioError``."""
    coords = [Symbol(f"c{j}") for j in range(len(basis))]
    system = []
    for _, row, bound in constraints:
        weights = [_dot(row, b) for b in basis]
        if not any(weights):
            continue
        expr = Add(*[w * c for w, c in zip(weights, coords)])
        system += [expr <= Integer(bound), -expr <= Integer(bound)]

    box: List[Tuple[int, int]] = []
    unbounded: List[str] = []
    for j, c in enumerate(coords):
        if not system:
            unbounded.append(s.lattice.describe(basis[j]))
            continue
        try:
            hi, _ = lpmax(c, system)
            lo, _ = lpmin(c, system)
        except UnboundedLPError:
            unbounded.append(s.lattice.describe(basis[j]))
            continue
        box.append((ceil(lo), floor(hi)))
    if unbounded:
        raise UnboundedScenarioError(
            f"{s.name}: adjunction constraints leave the coordinates along {unbounded} unbounded",
            unbounded,
        )
    return box


def enumerate_candidates(
    s: AdjunctionScenario, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> Union[Vanishes, Candidates]:
    """All classes allowed by the adjunction inequalities and the simple-type equation.

    The result is closed under negation and sorted. ``UnboundedScenarioError``
    signals that the tracked surfaces do not pin down a finite set.
    """
    for surf in s.surfaces:
        if surf.genus == 0 and surf.self_int >= 0 and surf.essential:
            return Vanishes(reason=f"{surf.label} is an essential sphere of square {surf.self_int}")

    equalities, inequalities = adjunction_constraints(s)
    for label, _, bound in inequalities:
        if bound < 0:
            return Vanishes(reason=f"no class satisfies the adjunction inequality on {label}")

    basis = [tuple(v) for v in integer_kernel([row for _, row, _ in equalities], s.lattice.rank)]
    if not basis:
        classes = [s.lattice.zero()] if s.simple_type_square == 0 else []
    else:
        box = _box(s, basis, inequalities)
        size = prod(hi - lo + 1 for lo, hi in box)
        if size > limit:
            raise InsufficientInformationError(
                f"{s.name}: the adjunction box holds {size} lattice points, over the limit of {limit}"
            )
        target = s.simple_type_square
        found = set()
        for coeffs in product(*(range(lo, hi + 1) for lo, hi in box)):
            k = tuple(sum(c * b[i] for c, b in zip(coeffs, basis)) for i in range(s.lattice.rank))
            if any(abs(_dot(row, k)) > bound for _, row, bound in inequalities):
                continue
            if s.lattice.square(k) == target:
                found.add(k)
        classes = sorted(found)
        logger.debug("enumerate_candidates", scenario=s.name, kernel_rank=len(basis), box=size, found=len(classes))

    if not classes:
        return Vanishes(reason="no class satisfies the adjunction inequalities and simple type")
    return Candidates(classes=classes)
