"""Manifold expressions: JSON trees of models and construction operators.

    {"op": "torus_surgery",
     "child": {"op": "model", "name": "Zprime_E", "params": {"g": 2, "L": [1]}},
     "m_vector": [2]}

Evaluation is recursive and deterministic; any failure is reported as an
``ExpressionError`` carrying the JSON path of the failing node.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Annotated, Any, Callable, Dict, List, Literal, Mapping, Optional, Union

import structlog
from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, ValidationError

from ..algebra.knots import FiberedKnot, knot_by_name, knot_from_coefficients
from ..errors import ExpressionError, InvalidParameterError, SWCalcError
from ..manifold.record import FourManifold
from .builders import (
    build_En,
    build_EnK,
    build_Horikawa,
    build_K3,
    build_K3_knot,
    build_S1xMK,
    build_Y,
    build_Y3,
    build_Yprime,
    build_Z_k3,
    build_Zmg,
    build_Zprime_En,
    z_from_parts,
    zprime_from_parts,
)
from .operations import ComplementarityHypothesis, fiber_sum, knot_surgery, torus_surgery

logger = structlog.get_logger(__name__)


class KnotSpec(BaseModel):
    """A fibered knot given by its symmetric Alexander coefficients ``{degree: coeff}``."""

    model_config = ConfigDict(extra="forbid")

    name: str
    alexander: Dict[int, int]

    def resolve(self) -> FiberedKnot:
        return knot_from_coefficients(self.name, self.alexander)


KnotRef = Union[str, KnotSpec]


def resolve_knot(ref: KnotRef) -> FiberedKnot:
    return knot_by_name(ref) if isinstance(ref, str) else ref.resolve()


class ModelNode(BaseModel):
    model_config = ConfigDict(extra="forbid")

    op: Literal["model"] = "model"
    name: str
    params: Dict[str, Any] = Field(default_factory=dict)


class KnotSurgeryNode(BaseModel):
    model_config = ConfigDict(extra="forbid")

    op: Literal["knot_surgery"] = "knot_surgery"
    child: "ManifoldExpr"
    torus_label: str
    knot: KnotRef


class FiberSumOptions(BaseModel):
    model_config = ConfigDict(extra="forbid")

    complementary: Optional[bool] = None
    justification: str = ""
    name: Optional[str] = None

    def hypothesis(self) -> Optional[ComplementarityHypothesis]:
        if self.complementary is None:
            return None
        return ComplementarityHypothesis(holds=self.complementary, justification=self.justification)


class FiberSumNode(BaseModel):
    model_config = ConfigDict(extra="forbid")

    op: Literal["fiber_sum"] = "fiber_sum"
    left: "ManifoldExpr"
    left_surface: str
    right: "ManifoldExpr"
    right_surface: str
    options: FiberSumOptions = Field(default_factory=FiberSumOptions)


class TorusSurgeryNode(BaseModel):
    model_config = ConfigDict(extra="forbid")

    op: Literal["torus_surgery"] = "torus_surgery"
    child: "ManifoldExpr"
    torus_label: str = "Lambda"
    m_vector: List[int]


ManifoldExpr = Annotated[
    Union[ModelNode, KnotSurgeryNode, FiberSumNode, TorusSurgeryNode],
    Field(discriminator="op"),
]

for _node in (KnotSurgeryNode, FiberSumNode, TorusSurgeryNode):
    _node.model_rebuild()

_ADAPTER: TypeAdapter[Any] = TypeAdapter(ManifoldExpr)


# -- models ----------------------------------------------------------------------------------


def _int(params: Mapping[str, Any], key: str) -> int:
    if key not in params:
        raise InvalidParameterError(f"missing parameter {key!r}")
    value = params[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidParameterError(f"parameter {key!r} must be an integer, got {value!r}")
    return value


def _int_list(params: Mapping[str, Any], key: str) -> List[int]:
    value = params.get(key)
    if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise InvalidParameterError(f"parameter {key!r} must be a list of integers, got {value!r}")
    return list(value)


def _knot(params: Mapping[str, Any], key: str = "knot") -> FiberedKnot:
    if key not in params:
        raise InvalidParameterError(f"missing parameter {key!r}")
    value = params[key]
    if isinstance(value, dict):
        return KnotSpec.model_validate(value).resolve()
    return knot_by_name(str(value))


MODELS: Dict[str, Callable[[Mapping[str, Any]], FourManifold]] = {
    "E": lambda p: build_En(_int(p, "n")),
    "EK": lambda p: build_EnK(_int(p, "n"), _knot(p)),
    "H": lambda p: build_Horikawa(_int(p, "m")),
    "K3": lambda p: build_K3(),
    "K3K": lambda p: build_K3_knot(_knot(p)),
    "S1xMK": lambda p: build_S1xMK(_knot(p)),
    "Y": lambda p: build_Y(_int(p, "n"), _int(p, "g")),
    "Yprime": lambda p: build_Yprime(_int(p, "g"), _int_list(p, "L")),
    "Zmg": lambda p: build_Zmg(_int(p, "m"), _int(p, "g")),
    "Z_K3": lambda p: build_Z_k3(_knot(p), _int(p, "g")),
    "Zprime_E": lambda p: build_Zprime_En(_int(p, "g"), _int_list(p, "L")),
    "Y3": lambda p: build_Y3(_int(p, "n"), _knot(p, "K1"), _knot(p, "K2")),
}


# -- parsing -----------------------------------------------------------------------------------


def _loc_path(loc: tuple) -> str:
    path = "$"
    for part in loc:
        if isinstance(part, int):
            path += f"[{part}]"
        elif part in ("model", "knot_surgery", "fiber_sum", "torus_surgery", "str", "KnotSpec"):
            continue
        else:
            path += f".{part}"
    return path


def parse_expr(data: Union[str, Mapping[str, Any]]) -> ManifoldExpr:
    """Validate a JSON text or decoded object against the expression schema."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ExpressionError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    try:
        return _ADAPTER.validate_python(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        raise ExpressionError(first["msg"], path=_loc_path(tuple(first["loc"])), cause=exc) from exc


def load_expr(path: Union[str, Path]) -> ManifoldExpr:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ExpressionError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_expr(text)


def expr_to_json(expr: ManifoldExpr, indent: Optional[int] = 2) -> str:
    return json.dumps(_ADAPTER.dump_python(expr, mode="json", exclude_defaults=False), indent=indent)


def expr_schema() -> Dict[str, Any]:
    schema = _ADAPTER.json_schema()
    schema["title"] = "ManifoldExpr"
    return schema


# -- evaluation --------------------------------------------------------------------------------


def _fiber_sum(node: FiberSumNode, left: FourManifold, right: FourManifold) -> FourManifold:
    comp = node.options.hypothesis()
    kind = right.provenance.kind
    if kind == "Y" and node.right_surface == "S":
        return z_from_parts(left, node.left_surface, right, name=node.options.name)
    if kind == "Yprime" and node.right_surface == "S'":
        if comp is None:
            comp = ComplementarityHypothesis(holds=False, justification="not asserted")
        return zprime_from_parts(left, node.left_surface, right, comp, name=node.options.name)
    return fiber_sum(left, node.left_surface, right, node.right_surface, comp, name=node.options.name)


def eval_expr(expr: ManifoldExpr, path: str = "$") -> FourManifold:
    """Evaluate an expression tree bottom-up."""
    try:
        if isinstance(expr, ModelNode):
            builder = MODELS.get(expr.name)
            if builder is None:
                raise InvalidParameterError(f"unknown model {expr.name!r}; known models: {sorted(MODELS)}")
            result = builder(expr.params)
        elif isinstance(expr, KnotSurgeryNode):
            child = eval_expr(expr.child, f"{path}.child")
            result = knot_surgery(child, expr.torus_label, resolve_knot(expr.knot))
        elif isinstance(expr, FiberSumNode):
            left = eval_expr(expr.left, f"{path}.left")
            right = eval_expr(expr.right, f"{path}.right")
            result = _fiber_sum(expr, left, right)
        else:
            child = eval_expr(expr.child, f"{path}.child")
            result = torus_surgery(child, expr.m_vector, expr.torus_label)
    except ExpressionError:
        raise
    except SWCalcError as exc:
        raise ExpressionError(str(exc), path=path, cause=exc) from exc
    except ValidationError as exc:
        raise ExpressionError(f"inconsistent record: {exc.errors()[0]['msg']}", path=path, cause=exc) from exc
    logger.debug("eval_expr", path=path, manifold=result.name)
    return result


def evaluate(data: Union[str, Mapping[str, Any]]) -> FourManifold:
    return eval_expr(parse_expr(data))
