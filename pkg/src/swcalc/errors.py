"""Exception hierarchy for the swcalc engine.

Every error is a ``ValueError`` so callers that only guard against bad
input keep working; the subclasses let the CLI and MCP tools report which
kind of contract was broken.
"""

from __future__ import annotations

from typing import List, Optional, Sequence


class SWCalcError(ValueError):
    """Base class for all engine errors."""


class InvalidParameterError(SWCalcError):
    """A numeric parameter is outside the range an operation accepts."""


class LatticeMismatchError(SWCalcError):
    """Two values live in different homology lattices."""


class InconsistentManifoldError(SWCalcError):
    """A manifold record violates one of its own invariants."""


class ConstructionError(SWCalcError):
    """A construction was asked to glue or surger incompatible data."""


class InsufficientInformationError(SWCalcError):
    """The stored Seiberg-Witten data does not determine the requested value."""


class UnboundedScenarioError(SWCalcError):
    """The adjunction constraints do not cut out a finite candidate set."""

    def __init__(self, message: str, unbounded: Sequence[str]) -> None:
        super().__init__(message)
        self.unbounded: List[str] = list(unbounded)


class ExpressionError(SWCalcError):
    """Evaluation of a manifold expression failed at a given tree path."""

    def __init__(self, message: str, path: str = "$", cause: Optional[Exception] = None) -> None:
        super().__init__(f"{path}: {message}")
        self.path = path
        self.cause = cause
