"""The invariant record of a smooth closed 4-manifold."""

from __future__ import annotations

from typing import Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import AliasChoices, BaseModel, ConfigDict, Field, model_validator

from ..algebra.lattice import ClassVec, IntLattice
from ..errors import ConstructionError
from .sw import LAURENT_FIELDS, SWValue, UnknownSW, sw_lattice

SimplyConnected = Literal["asserted", "false", "unknown"]
Parity = Literal["even", "odd", "unknown"]
Tristate = Literal["yes", "no", "unknown"]

ParamValue = Union[int, str, List[int]]


class TrackedSurface(BaseModel):
    """An embedded surface whose homology class lives in the tracked lattice.

    ``complement_simply_connected`` asserts pi_1(M - S) = 1 and
    ``normally_generates`` that pi_1(S) normally generates pi_1(M); both are
    hypotheses carried for the fiber-sum rule, never computed.
    """

    model_config = ConfigDict(frozen=True)

    label: str
    cls: ClassVec
    genus: int = Field(ge=0)
    self_int: int
    essential: bool = False
    complement_simply_connected: bool = False
    normally_generates: bool = False


class Provenance(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: str
    params: Dict[str, ParamValue] = Field(default_factory=dict)
    hypotheses: List[str] = Field(default_factory=list)
    surgeries: List[int] = Field(default_factory=list)


class FourManifold(BaseModel):
    """Characteristic numbers, flags, tracked homology and SW data of one manifold.

    Field order is the JSON order.
    """

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    name: str
    e: int
    sign: int
    b1: Optional[int] = Field(default=None, ge=0)
    simply_connected: SimplyConnected = "unknown"
    parity: Parity = "unknown"
    spin: Tristate = "unknown"
    symplectic: Tristate = "unknown"
    tracked: IntLattice = Field(
        validation_alias=AliasChoices("lattice", "tracked"),
        serialization_alias="lattice",
    )
    sw: SWValue = Field(default_factory=UnknownSW)
    canonical: Optional[ClassVec] = None
    surfaces: Tuple[TrackedSurface, ...] = ()
    provenance: Provenance = Field(default_factory=lambda: Provenance(kind="record"))

    @model_validator(mode="before")
    @classmethod
    def _attach_lattice(cls, data: Any) -> Any:
        # JSON carries the lattice once; Laurent values need it back.
        if not isinstance(data, dict):
            return data
        lattice = data.get("lattice", data.get("tracked"))
        sw = data.get("sw")
        if lattice is None or not isinstance(sw, dict):
            return data
        sw = dict(sw)
        for key in LAURENT_FIELDS:
            value = sw.get(key)
            if isinstance(value, dict) and "lattice" not in value:
                sw[key] = {**value, "lattice": lattice}
        return {**data, "sw": sw}

    @model_validator(mode="after")
    def _consistent(self) -> "FourManifold":
        if self.simply_connected == "asserted" and self.b1 not in (None, 0):
            raise ValueError(f"{self.name}: simply connected but b1 = {self.b1}")
        if self.spin == "yes" and self.parity == "odd":
            raise ValueError(f"{self.name}: spin manifold with odd intersection form")
        own = sw_lattice(self.sw)
        if own is not None and own != self.tracked:
            raise ValueError(f"{self.name}: SW value lives outside the tracked lattice")
        if self.canonical is not None:
            self.tracked.check(self.canonical)
        labels = [s.label for s in self.surfaces]
        if len(set(labels)) != len(labels):
            raise ValueError(f"{self.name}: duplicate surface labels {labels}")
        for s in self.surfaces:
            square = self.tracked.square(s.cls)
            if square != s.self_int:
                raise ValueError(
                    f"{self.name}: surface {s.label} declares self-intersection {s.self_int} "
                    f"but its class squares to {square}"
                )
        return self

    # -- lookups ------------------------------------------------------------------

    def surface(self, label: str) -> TrackedSurface:
        for s in self.surfaces:
            if s.label == label:
                return s
        raise ConstructionError(
            f"{self.name} has no tracked surface {label!r} (known: {[s.label for s in self.surfaces]})"
        )

    def basis_name_of(self, surface: TrackedSurface) -> str:
        """The basis name whose unit vector is ``surface.cls``."""
        nonzero = [(i, c) for i, c in enumerate(surface.cls) if c != 0]
        if len(nonzero) != 1 or nonzero[0][1] != 1:
            raise ConstructionError(
                f"surface {surface.label} of {self.name} is not a basis class of the tracked lattice"
            )
        return self.tracked.basis_names[nonzero[0][0]]

    def with_updates(self, **changes: Any) -> "FourManifold":
        """Copy with changes, re-running every invariant check."""
        data: Dict[str, Any] = {name: getattr(self, name) for name in type(self).model_fields}
        data.update(changes)
        return FourManifold(**data)

    # -- serialization ---------------------------------------------------------------

    def to_json(self, indent: Optional[int] = 2) -> str:
        return self.model_dump_json(by_alias=True, indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "FourManifold":
        return cls.model_validate_json(text)
