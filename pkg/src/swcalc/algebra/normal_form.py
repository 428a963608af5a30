"""Exact integer normal-form reductions.

Both reductions go through the Smith decomposition ``S = U * A * V`` with
``U`` and ``V`` unimodular. The columns of ``V`` past the rank of ``A`` span
its integer kernel, and since ``V`` is unimodular that kernel basis is
saturated (a basis of all integer solutions, not just a rational spanning set).
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

import structlog
from sympy import ZZ, Matrix
from sympy.matrices.normalforms import smith_normal_decomp
from sympy.polys.matrices import DM

logger = structlog.get_logger(__name__)

IntMatrix = List[List[int]]


def _as_rows(matrix: Sequence[Sequence[int]]) -> Tuple[IntMatrix, int]:
    rows = [[int(v) for v in row] for row in matrix]
    ncols = len(rows[0]) if rows else 0
    if any(len(row) != ncols for row in rows):
        raise ValueError("matrix rows must all have the same length")
    return rows, ncols


def smith_transform(matrix: Sequence[Sequence[int]]) -> Tuple[IntMatrix, IntMatrix, int]:
    """Return ``(smith, V, rank)`` for a nonempty integer matrix ``A``.

    ``smith`` is the Smith normal form ``U * A * V``; its first ``rank``
    diagonal entries are the nonzero invariant factors.
    """
    rows, width = _as_rows(matrix)
    if not rows or not width:
        raise ValueError("smith_transform needs a nonempty matrix")
    smith, _, v = smith_normal_decomp(Matrix(rows), domain=ZZ)
    rank = sum(1 for i in range(min(smith.shape)) if smith[i, i] != 0)
    return (
        [[int(x) for x in smith.row(i)] for i in range(smith.rows)],
        [[int(x) for x in v.row(i)] for i in range(v.rows)],
        rank,
    )


def integer_kernel(matrix: Sequence[Sequence[int]], ncols: int | None = None) -> List[Tuple[int, ...]]:
    """Return a basis of the lattice ``{v in Z^n : matrix * v = 0}``.

    An empty matrix (no rows) has the full standard basis as its kernel;
    pass ``ncols`` to say how wide it is.
    """
    rows, width = _as_rows(matrix)
    if not rows:
        width = ncols or 0
        return [tuple(1 if i == j else 0 for i in range(width)) for j in range(width)]
    if not width:
        return []
    _, transform, rank = smith_transform(rows)
    basis = [tuple(transform[i][j] for i in range(width)) for j in range(rank, width)]
    logger.debug("integer_kernel", shape=(len(rows), width), kernel_rank=len(basis))
    return basis


def determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix."""
    rows, width = _as_rows(matrix)
    if len(rows) != width:
        raise ValueError(f"determinant needs a square matrix, got {len(rows)}x{width}")
    if width == 0:
        return 1
    return int(DM(rows, ZZ).det())


def chain_form(size: int) -> IntMatrix:
    """Skew tridiagonal intersection form of a chain of loops.

    ``a_i . a_{i+1} = 1`` and ``a_{i+1} . a_i = -1``; for an even size this is
    the intersection form on H_1 of a closed surface in the chain basis.
    """
    form = [[0] * size for _ in range(size)]
    for i in range(size - 1):
        form[i][i + 1] = 1
        form[i + 1][i] = -1
    return form
