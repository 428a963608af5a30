"""Counting for genus ``2g + n - 1`` fibrations on ``E(n)_K`` and its halves ``M(n, g)``.

Only counts and flags are tracked: the genus of the fiber, how many singular
fibers a holomorphic model has, how many Lefschetz fibers they perturb into,
and whether any of those are reducible.
"""

from __future__ import annotations

from typing import Dict, Optional, Tuple

import structlog
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..algebra.lattice import IntLattice
from ..constructions.operations import fiber_sum
from ..errors import InconsistentManifoldError, InvalidParameterError
from ..manifold.record import FourManifold, Provenance, Tristate, TrackedSurface
from ..manifold.sw import UnknownSW

logger = structlog.get_logger(__name__)


def euler_from_fibration(fiber_genus: int, singular_fibers: int) -> int:
    """``e = s - 4G + 4`` for a Lefschetz fibration over the sphere."""
    if fiber_genus < 0 or singular_fibers < 0:
        raise InvalidParameterError(
            f"fiber genus and singular fiber count must be >= 0, got ({fiber_genus}, {singular_fibers})"
        )
    return singular_fibers - 4 * fiber_genus + 4


class Fibration(BaseModel):
    model_config = ConfigDict(frozen=True)

    fiber_genus: int = Field(ge=0)
    base_genus: int = Field(0, ge=0)
    singular_fibers: int = Field(ge=0)
    holomorphic_singular_fibers: Optional[int] = None
    reducible_fibers: Optional[int] = None
    total_e: int
    hyperelliptic: Tristate = "unknown"

    @model_validator(mode="after")
    def _check_euler(self) -> "Fibration":
        if self.base_genus == 0:
            expected = euler_from_fibration(self.fiber_genus, self.singular_fibers)
            if self.total_e != expected:
                raise ValueError(f"total_e = {self.total_e} but s - 4G + 4 = {expected}")
        return self


def singular_fiber_contribution(n: int, g: int) -> int:
    """Lefschetz fibers each holomorphic singular fiber perturbs into."""
    return 4 * n + 2 * g - 2


def enk_fibration(n: int, g: int) -> Fibration:
    """The fibration of ``E(n)_K`` (``K`` fibered of genus ``g``) by the horizontal fiber."""
    if n < 1 or g < 1:
        raise InvalidParameterError(f"E(n)_K fibration needs n, g >= 1, got ({n}, {g})")
    s = 4 * singular_fiber_contribution(n, g)
    fib = Fibration(
        fiber_genus=2 * g + n - 1,
        singular_fibers=s,
        holomorphic_singular_fibers=4,
        reducible_fibers=0 if n >= 2 else None,
        total_e=12 * n,
        hyperelliptic="no" if n >= 2 else "unknown",
    )
    logger.debug("enk_fibration", n=n, g=g, fiber_genus=fib.fiber_genus, singular=s)
    return fib


class VanishingCycleAudit(BaseModel):
    model_config = ConfigDict(frozen=True)

    from_hyperelliptic: int
    extra_per_singular_fiber: int
    extra_total: int
    total: int
    extra_nonseparating: bool


def vanishing_cycle_audit(n: int, g: int) -> VanishingCycleAudit:
    """Split the ``16n + 8g - 8`` vanishing cycles into the ``E(n)`` part and ``2g`` extra per fiber."""
    if n < 2:
        raise InvalidParameterError(f"the vanishing cycle audit needs n >= 2, got {n}")
    if g < 0:
        raise InvalidParameterError(f"knot genus must be >= 0, got {g}")
    base = 16 * n - 8
    extra = 4 * 2 * g
    total = base + extra
    if g >= 1 and total != enk_fibration(n, g).singular_fibers:
        raise InconsistentManifoldError(f"audit total {total} disagrees with the fibration count")
    # No reducible fibers for n >= 2, so every vanishing cycle is nonseparating.
    return VanishingCycleAudit(
        from_hyperelliptic=base,
        extra_per_singular_fiber=2 * g,
        extra_total=extra,
        total=total,
        extra_nonseparating=True,
    )


class FiberComponent(BaseModel):
    model_config = ConfigDict(frozen=True)

    genus: int
    multiplicity: int
    self_int: int
    count: int


class SingularFiberModel(BaseModel):
    """One holomorphic singular fiber: ``2 C + sum S_i`` with ``C . S_i = 1``."""

    model_config = ConfigDict(frozen=True)

    n: int
    g: int
    components: Tuple[FiberComponent, ...]
    fiber_square: int
    fiber_genus: int
    euler_number: int
    lefschetz_fibers: int


def singular_fiber_model(n: int, g: int) -> SingularFiberModel:
    """Multiplicity-2 genus-``g`` curve of square ``-n`` met once by each of ``2n`` (-2)-spheres."""
    if n < 1 or g < 0:
        raise InvalidParameterError(f"singular fiber model needs n >= 1, g >= 0, got ({n}, {g})")
    core = FiberComponent(genus=g, multiplicity=2, self_int=-n, count=1)
    spheres = FiberComponent(genus=0, multiplicity=1, self_int=-2, count=2 * n)
    # F = 2C + sum S_i
    square = 4 * core.self_int + 2 * 2 * spheres.count + spheres.count * spheres.self_int
    # K.C from adjunction on C; K.S_i = 0
    k_dot_f = 2 * (2 * g - 2 - core.self_int)
    genus = (k_dot_f + square) // 2 + 1
    euler = (2 - 2 * g) + spheres.count * 2 - spheres.count
    model = SingularFiberModel(
        n=n,
        g=g,
        components=(core, spheres),
        fiber_square=square,
        fiber_genus=genus,
        euler_number=euler,
        lefschetz_fibers=euler - (2 - 2 * genus),
    )
    if square != 0 or genus != 2 * g + n - 1:
        raise InconsistentManifoldError(f"singular fiber model ({n}, {g}) is not a genus {2 * g + n - 1} fiber")
    return model


def build_Mng(n: int, g: int) -> FourManifold:
    """``M(n, g) = (S^2 x Sigma_g) # 4n CP2-bar`` with its genus ``2g + n - 1`` fiber ``F``.

    Tracked basis ``F, A, B, E_2..E_4n`` where ``A = S^2 x pt``,
    ``B = pt x Sigma_g`` and ``F = nA + 2B - sum E_i`` replaces ``E_1``.
    """
    if n < 1 or g < 0:
        raise InvalidParameterError(f"M(n, g) needs n >= 1, g >= 0, got ({n}, {g})")
    exceptional = [f"E{i}" for i in range(2, 4 * n + 1)]
    products: Dict[Tuple[str, str], int] = {("F", "A"): 2, ("F", "B"): n, ("A", "B"): 1}
    for name in exceptional:
        products[("F", name)] = 1
        products[(name, name)] = -1
    lattice = IntLattice.build(["F", "A", "B"] + exceptional, products)
    fiber_genus = 2 * g + n - 1
    canonical = lattice.vector({"A": 2 * g - 2 + n, "F": -1})
    return FourManifold(
        name=f"M({n},{g})",
        e=4 - 4 * g + 4 * n,
        sign=-4 * n,
        b1=2 * g,
        simply_connected="asserted" if g == 0 else "false",
        parity="odd",
        spin="no",
        symplectic="yes",
        tracked=lattice,
        sw=UnknownSW(reason="b2+ = 1, the invariant depends on a chamber"),
        canonical=canonical,
        surfaces=(
            TrackedSurface(label="F", cls=lattice.unit("F"), genus=fiber_genus, self_int=0),
            TrackedSurface(label="B", cls=lattice.unit("B"), genus=g, self_int=0),
        ),
        provenance=Provenance(kind="Mng", params={"n": n, "g": g, "model_singular_fibers": 2}),
    )


def mng_fibration(n: int, g: int) -> Fibration:
    if n < 1 or g < 0:
        raise InvalidParameterError(f"M(n, g) needs n >= 1, g >= 0, got ({n}, {g})")
    s = 2 * singular_fiber_contribution(n, g)
    fib = Fibration(
        fiber_genus=2 * g + n - 1,
        singular_fibers=s,
        holomorphic_singular_fibers=2,
        total_e=euler_from_fibration(2 * g + n - 1, s),
    )
    if fib.total_e != build_Mng(n, g).e:
        raise InconsistentManifoldError(f"M({n},{g}): fibration Euler number {fib.total_e} disagrees with the record")
    return fib


class TwistedSumReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    g: int
    e: int
    sign: int
    expected_e: int
    expected_sign: int
    verdict: str

    @property
    def consistent(self) -> bool:
        return self.e == self.expected_e and self.sign == self.expected_sign


def twisted_fiber_sum_check(n: int, g: int) -> TwistedSumReport:
    """Fiber-sum two copies of ``M(n, g)`` along ``F`` and compare with ``E(n)_K``.

    Only ``(e, sign)`` are compared, so agreement is reported as
    "consistent with", never as an identification.
    """
    if n < 1 or g < 1:
        raise InvalidParameterError(f"twisted fiber sum check needs n, g >= 1, got ({n}, {g})")
    half = build_Mng(n, g)
    total = fiber_sum(half, "F", half, "F", name=f"M({n},{g}) #_Phi M({n},{g})")
    expected_e, expected_sign = 12 * n, -8 * n
    ok = total.e == expected_e and total.sign == expected_sign
    verdict = f"consistent with E({n})_K" if ok else f"inconsistent with E({n})_K"
    logger.debug("twisted_fiber_sum_check", n=n, g=g, e=total.e, sign=total.sign, verdict=verdict)
    return TwistedSumReport(
        n=n,
        g=g,
        e=total.e,
        sign=total.sign,
        expected_e=expected_e,
        expected_sign=expected_sign,
        verdict=verdict,
    )
