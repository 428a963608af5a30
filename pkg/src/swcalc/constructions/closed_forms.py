"""Closed-form characteristic numbers ``(chi, c1^2)`` of the named families.

Builders compute the same numbers step by step through fiber-sum arithmetic;
these formulas are the second route they are checked against.
"""

from __future__ import annotations

from typing import Sequence, Tuple

from ..errors import InconsistentManifoldError, InvalidParameterError

Numbers = Tuple[int, int]


def e_sign_from_numbers(chi: int, c1sq: int) -> Tuple[int, int]:
    """Invert ``chi = (e + sign)/4`` and ``c1^2 = 2e + 3 sign``."""
    e = 12 * chi - c1sq
    return e, c1sq - 8 * chi


def horikawa_numbers(m: int) -> Numbers:
    return 8 * m - 1, 16 * m - 8


def elliptic_numbers(n: int) -> Numbers:
    return n, 0


def z_numbers(chi_x: int, c1sq_x: int, n: int, g: int) -> Numbers:
    """``Z(X, C, g)`` for ``C`` of genus ``n``."""
    return chi_x + g * (n - 1), c1sq_x + 8 * g * (n - 1)


def zmg_numbers(m: int, g: int) -> Numbers:
    if m < 1 or g < 1:
        raise InvalidParameterError(f"Z(m, g) needs m, g >= 1, got ({m}, {g})")
    return 8 * m + g - 1, 16 * m + 8 * g - 8


def zprime_numbers(chi_x: int, c1sq_x: int, g: int, ks: Sequence[int]) -> Numbers:
    total = sum(ks)
    return chi_x + g * total, c1sq_x + 8 * g * total


def y_numbers(n: int, g: int) -> Numbers:
    return (n - 1) * (g - 1), 8 * (n - 1) * (g - 1)


def yprime_numbers(g: int, ks: Sequence[int]) -> Numbers:
    total = sum(ks)
    return (g - 1) * total, 8 * (g - 1) * total


def y3_numbers(n: int, g: int) -> Numbers:
    return 3 * n + 2 * g - 2, 16 * g + 8 * n - 16


def check_numbers(name: str, computed: Numbers, expected: Numbers) -> None:
    if computed != expected:
        raise InconsistentManifoldError(
            f"{name}: the record gives (chi, c1^2) = {computed}, closed form gives {expected}"
        )
