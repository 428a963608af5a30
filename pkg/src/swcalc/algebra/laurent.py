"""Laurent polynomials in the integral group ring of a tracked lattice.

A ``LaurentElem`` is a finite sum of monomials ``c * t_k`` whose exponents
``k`` are classes of one ``IntLattice``. Multiplication adds exponents, the
bar involution negates them. Terms are kept sorted in descending
lexicographic order of the exponent with no zero coefficients.
"""

from __future__ import annotations

import re
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..errors import LatticeMismatchError
from .lattice import ClassVec, IntLattice


class Term(BaseModel):
    """One monomial ``coeff * t_exp``."""

    model_config = ConfigDict(frozen=True)

    exp: ClassVec
    coeff: int


def _normalize(items: Iterable[Tuple[ClassVec, int]]) -> Tuple[Term, ...]:
    acc: Dict[ClassVec, int] = {}
    for exp, coeff in items:
        acc[exp] = acc.get(exp, 0) + coeff
    return tuple(Term(exp=e, coeff=c) for e, c in sorted(acc.items(), reverse=True) if c != 0)


class LaurentElem(BaseModel):
    """Element of ``Z[H]`` for the tracked lattice ``H``.

    ``lattice`` is carried for mismatch checks only and is left out of dumps;
    the JSON form is ``{"terms": [{"exp": [...], "coeff": n}, ...]}``.
    """

    model_config = ConfigDict(frozen=True)

    lattice: IntLattice = Field(exclude=True)
    terms: Tuple[Term, ...] = ()

    @model_validator(mode="after")
    def _canonical(self) -> "LaurentElem":
        for term in self.terms:
            self.lattice.check(term.exp)
        canonical = _normalize((t.exp, t.coeff) for t in self.terms)
        if canonical != self.terms:
            object.__setattr__(self, "terms", canonical)
        return self

    # -- constructors ----------------------------------------------------------

    @classmethod
    def from_terms(cls, lattice: IntLattice, items: Iterable[Tuple[Sequence[int], int]]) -> "LaurentElem":
        return cls(lattice=lattice, terms=_normalize((tuple(e), c) for e, c in items))

    @classmethod
    def zero(cls, lattice: IntLattice) -> "LaurentElem":
        return cls(lattice=lattice, terms=())

    @classmethod
    def one(cls, lattice: IntLattice) -> "LaurentElem":
        return cls.monomial(lattice, lattice.zero())

    @classmethod
    def monomial(cls, lattice: IntLattice, exp: Sequence[int], coeff: int = 1) -> "LaurentElem":
        return cls.from_terms(lattice, [(lattice.check(exp), coeff)])

    # -- inspection --------------------------------------------------------------

    def as_dict(self) -> Dict[ClassVec, int]:
        return {t.exp: t.coeff for t in self.terms}

    def coefficient(self, exp: Sequence[int]) -> int:
        return self.as_dict().get(tuple(exp), 0)

    def support(self) -> List[ClassVec]:
        return [t.exp for t in self.terms]

    def is_zero(self) -> bool:
        return not self.terms

    def augmentation(self) -> int:
        """Sum of coefficients, i.e. the value at ``t = 1``."""
        return sum(t.coeff for t in self.terms)

    def degree_along(self, surface: Sequence[int]) -> Tuple[int, int]:
        """Range ``(min, max)`` of ``k . surface`` over the support."""
        if self.is_zero():
            raise ValueError("zero element has no degree")
        values = [self.lattice.pair(t.exp, surface) for t in self.terms]
        return min(values), max(values)

    def max_part(self, surface: Sequence[int], degree: Optional[int] = None) -> "LaurentElem":
        """Terms whose exponent pairs with ``surface`` to +/- ``degree``.

        ``degree`` defaults to the largest ``|k . surface|`` in the support.
        """
        if self.is_zero():
            return self
        values = [abs(self.lattice.pair(t.exp, surface)) for t in self.terms]
        top = max(values) if degree is None else degree
        return self.from_terms(
            self.lattice,
            [(t.exp, t.coeff) for t, v in zip(self.terms, values) if v == top],
        )

    # -- ring structure ----------------------------------------------------------

    def _same_lattice(self, other: "LaurentElem") -> None:
        if self.lattice != other.lattice:
            raise LatticeMismatchError(
                f"Laurent elements live in different lattices: {self.lattice.basis_names} vs {other.lattice.basis_names}"
            )

    def __add__(self, other: "LaurentElem") -> "LaurentElem":
        self._same_lattice(other)
        items = [(t.exp, t.coeff) for t in self.terms] + [(t.exp, t.coeff) for t in other.terms]
        return self.from_terms(self.lattice, items)

    def __neg__(self) -> "LaurentElem":
        return self.scale(-1)

    def __sub__(self, other: "LaurentElem") -> "LaurentElem":
        return self + (-other)

    def __mul__(self, other: "LaurentElem") -> "LaurentElem":
        return laurent_mul(self, other)

    def __pow__(self, n: int) -> "LaurentElem":
        if n < 0:
            raise ValueError("only nonnegative powers are defined in the group ring")
        result = self.one(self.lattice)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, k: int) -> "LaurentElem":
        return self.from_terms(self.lattice, [(t.exp, k * t.coeff) for t in self.terms])

    def bar(self) -> "LaurentElem":
        return laurent_bar(self)

    def shift(self, exp: Sequence[int]) -> "LaurentElem":
        """Multiply by the monomial ``t_exp``."""
        exp = self.lattice.check(exp)
        return self.from_terms(
            self.lattice,
            [(tuple(a + b for a, b in zip(t.exp, exp)), t.coeff) for t in self.terms],
        )

    def map_exponents(self, target: IntLattice, fn: Callable[[ClassVec], Sequence[int]]) -> "LaurentElem":
        """Push forward along a homomorphism of lattices given on exponents."""
        return self.from_terms(target, [(target.check(fn(t.exp)), t.coeff) for t in self.terms])

    def bar_sign(self) -> Optional[int]:
        """``+1`` or ``-1`` when ``bar(self) = +/- self``; ``None`` otherwise."""
        flipped = self.bar()
        if flipped == self:
            return 1
        if flipped == -self:
            return -1
        return None

    # -- text form -------------------------------------------------------------------

    def to_text(self) -> str:
        """Canonical form such as ``1*t[2,0] - 2*t[0,0] + 1*t[-2,0]``."""
        if self.is_zero():
            return "0"
        chunks: List[str] = []
        for i, t in enumerate(self.terms):
            exp = ",".join(str(v) for v in t.exp)
            mono = f"{abs(t.coeff)}*t[{exp}]"
            if i == 0:
                chunks.append(mono if t.coeff > 0 else f"-{mono}")
            else:
                chunks.append(f"{'+' if t.coeff > 0 else '-'} {mono}")
        return " ".join(chunks)

    def pretty(self) -> str:
        """Human form using basis names, e.g. ``t^(2*S + 2*Sigma) + t^(-2*S - 2*Sigma)``."""
        if self.is_zero():
            return "0"
        chunks: List[str] = []
        for i, t in enumerate(self.terms):
            if any(t.exp):
                mono = f"t^({self.lattice.describe(t.exp)})"
                body = mono if abs(t.coeff) == 1 else f"{abs(t.coeff)}*{mono}"
            else:
                body = str(abs(t.coeff))
            if i == 0:
                chunks.append(body if t.coeff > 0 else f"-{body}")
            else:
                chunks.append(f"{'+' if t.coeff > 0 else '-'} {body}")
        return " ".join(chunks)

    def __str__(self) -> str:
        return self.to_text()

    @classmethod
    def parse(cls, text: str, lattice: IntLattice) -> "LaurentElem":
        """Inverse of :meth:`to_text`."""
        body = text.replace(" ", "")
        if body in ("", "0"):
            return cls.zero(lattice)
        matches = list(_TERM_RE.finditer(body))
        if not matches or "".join(m.group(0) for m in matches) != body:
            raise ValueError(f"not a canonical Laurent expression: {text!r}")
        items: List[Tuple[ClassVec, int]] = []
        for m in matches:
            sign = -1 if m.group("sign") == "-" else 1
            exp = tuple(int(v) for v in m.group("exp").split(",")) if m.group("exp") else ()
            items.append((lattice.check(exp), sign * int(m.group("coeff"))))
        return cls.from_terms(lattice, items)


_TERM_RE = re.compile(r"(?P<sign>[+-]?)(?P<coeff>\d+)\*t\[(?P<exp>-?\d+(?:,-?\d+)*)?\]")


def laurent_mul(a: LaurentElem, b: LaurentElem) -> LaurentElem:
    """Group-ring product; exponents add componentwise."""
    a._same_lattice(b)
    items = [
        (tuple(x + y for x, y in zip(s.exp, t.exp)), s.coeff * t.coeff)
        for s in a.terms
        for t in b.terms
    ]
    return LaurentElem.from_terms(a.lattice, items)


def laurent_bar(a: LaurentElem) -> LaurentElem:
    """The involution ``t_k -> t_{-k}``."""
    return LaurentElem.from_terms(a.lattice, [(tuple(-v for v in t.exp), t.coeff) for t in a.terms])


def laurent_sum(elems: Iterable[LaurentElem], lattice: IntLattice) -> LaurentElem:
    total = LaurentElem.zero(lattice)
    for e in elems:
        total = total + e
    return total


def t_minus_t_inverse(lattice: IntLattice, exp: Sequence[int]) -> LaurentElem:
    """``t_k - t_k^{-1}``, the building block of elliptic-surface invariants."""
    k = lattice.check(exp)
    return LaurentElem.from_terms(lattice, [(k, 1), (tuple(-v for v in k), -1)])


def two_term(lattice: IntLattice, exp: Sequence[int], sign: int) -> LaurentElem:
    """``t_k + sign * t_k^{-1}``."""
    k = lattice.check(exp)
    return LaurentElem.from_terms(lattice, [(k, 1), (tuple(-v for v in k), sign)])


def univariate(lattice: IntLattice, coeffs: Mapping[int, int], index: int = 0) -> LaurentElem:
    """Polynomial in a single basis direction ``{degree: coeff}``."""
    if not 0 <= index < lattice.rank:
        raise LatticeMismatchError(f"basis index {index} out of range for rank {lattice.rank}")
    items = []
    for d, c in coeffs.items():
        exp = [0] * lattice.rank
        exp[index] = d
        items.append((tuple(exp), c))
    return LaurentElem.from_terms(lattice, items)
