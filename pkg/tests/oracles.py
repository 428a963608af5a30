"""Independent reference computations used only by the test suite."""

from __future__ import annotations

from itertools import product
from typing import Dict, List, Sequence, Set, Tuple

from sympy import Matrix, symbols

from swcalc.basic_classes import AdjunctionScenario

_t = symbols("t")


def _variation(n: int) -> List[List[int]]:
    """Seifert form of the A_{n-1} singularity x^n: 1 on the diagonal, -1 just above it."""
    size = n - 1
    return [[1 if i == j else (-1 if j == i + 1 else 0) for j in range(size)] for i in range(size)]


def seifert_matrix(p: int, q: int) -> Matrix:
    """Seifert matrix of T(p, q) as the Kronecker product of the two variation forms."""
    a, b = _variation(abs(p)), _variation(abs(q))
    ra, rb = len(a), len(b)
    rows = [[a[i // rb][k // rb] * b[i % rb][k % rb] for k in range(ra * rb)] for i in range(ra * rb)]
    return Matrix(rows)


def alexander_oracle(p: int, q: int) -> Dict[int, int]:
    """Symmetric Alexander coefficients of T(p, q) from its Seifert matrix.

    ``det(V - t V^T)`` equals ``det(V)`` times the characteristic polynomial
    of ``V^{-1} V^T``; the latter is integral because ``V`` is unimodular.
    """
    v = seifert_matrix(p, q)
    monodromy = v.inv() * v.T
    coeffs = [int(c) for c in monodromy.charpoly(_t).all_coeffs()]
    degree = len(coeffs) - 1
    if sum(coeffs) < 0:
        coeffs = [-c for c in coeffs]
    half = degree // 2
    return {degree - i - half: c for i, c in enumerate(coeffs) if c}


def brute_force_candidates(s: AdjunctionScenario, radius: int) -> Set[Tuple[int, ...]]:
    """Scan the cube ``|k_i| <= radius`` for classes obeying adjunction and simple type."""
    rows = []
    for surf in s.surfaces:
        if surf.genus == 0 or surf.self_int < 0:
            continue
        rows.append((s.lattice.row(surf.cls), 2 * surf.genus - 2 - surf.self_int))
    target = s.simple_type_square
    found = set()
    for k in product(range(-radius, radius + 1), repeat=s.lattice.rank):
        if any(abs(sum(a * b for a, b in zip(row, k))) > bound for row, bound in rows):
            continue
        if s.lattice.square(k) == target:
            found.add(tuple(k))
    return found


def matrix_rank(matrix: Sequence[Sequence[int]]) -> int:
    return Matrix([list(r) for r in matrix]).rank()
