"""Integer lattices with an intersection pairing, and the gluing of two of them.

An ``IntLattice`` houses a tracked part of H_2(X; Z): named basis classes and
their Gram (intersection) matrix. Homology classes are plain integer tuples
(``ClassVec``) of coordinates in that basis.
"""

from __future__ import annotations

from math import gcd
from typing import List, Mapping, Optional, Sequence, Tuple

import structlog
from pydantic import BaseModel, ConfigDict, computed_field, model_validator
from sympy import Matrix

from ..errors import ConstructionError, LatticeMismatchError
from .normal_form import smith_transform

logger = structlog.get_logger(__name__)

ClassVec = Tuple[int, ...]


class IntLattice(BaseModel):
    """A free abelian group with a symmetric integral bilinear form."""

    model_config = ConfigDict(frozen=True)

    basis_names: Tuple[str, ...]
    gram: Tuple[Tuple[int, ...], ...]

    @model_validator(mode="after")
    def _check_form(self) -> "IntLattice":
        n = len(self.basis_names)
        if len(set(self.basis_names)) != n:
            raise ValueError(f"basis names must be unique: {self.basis_names}")
        if len(self.gram) != n or any(len(row) != n for row in self.gram):
            raise ValueError(f"gram matrix must be {n}x{n}")
        for i in range(n):
            for j in range(i + 1, n):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError(
                        f"gram matrix not symmetric at ({self.basis_names[i]}, {self.basis_names[j]})"
                    )
        return self

    @computed_field  # type: ignore[prop-decorator]
    @property
    def rank(self) -> int:
        return len(self.basis_names)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def build(cls, names: Sequence[str], products: Mapping[Tuple[str, str], int]) -> "IntLattice":
        """Assemble a lattice from the nonzero products ``{(a, b): a.b}``.

        Unlisted products are 0; each unordered pair may be listed once.
        """
        index = {name: i for i, name in enumerate(names)}
        gram = [[0] * len(names) for _ in names]
        for (a, b), value in products.items():
            i, j = index[a], index[b]
            gram[i][j] = value
            gram[j][i] = value
        return cls(basis_names=tuple(names), gram=tuple(tuple(row) for row in gram))

    @classmethod
    def trivial(cls, name: str = "t") -> "IntLattice":
        """Rank-one lattice with zero form, the home of one-variable polynomials."""
        return cls(basis_names=(name,), gram=((0,),))

    def renamed(self, mapping: Mapping[str, str]) -> "IntLattice":
        names = tuple(mapping.get(name, name) for name in self.basis_names)
        return IntLattice(basis_names=names, gram=self.gram)

    # -- classes ---------------------------------------------------------------

    def index(self, name: str) -> int:
        try:
            return self.basis_names.index(name)
        except ValueError:
            raise LatticeMismatchError(f"no basis class named {name!r} in {self.basis_names}") from None

    def unit(self, name: str) -> ClassVec:
        i = self.index(name)
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def zero(self) -> ClassVec:
        return (0,) * self.rank

    def vector(self, coeffs: Mapping[str, int]) -> ClassVec:
        out = [0] * self.rank
        for name, value in coeffs.items():
            out[self.index(name)] += value
        return tuple(out)

    def check(self, x: Sequence[int]) -> ClassVec:
        if len(x) != self.rank:
            raise LatticeMismatchError(f"class of length {len(x)} does not live in a rank-{self.rank} lattice")
        return tuple(int(v) for v in x)

    def row(self, x: Sequence[int]) -> ClassVec:
        """The functional ``y -> x.y`` as a coordinate row."""
        x = self.check(x)
        return tuple(sum(x[i] * self.gram[i][j] for i in range(self.rank)) for j in range(self.rank))

    def pair(self, x: Sequence[int], y: Sequence[int]) -> int:
        return sum(a * b for a, b in zip(self.row(x), self.check(y)))

    def square(self, x: Sequence[int]) -> int:
        return self.pair(x, x)

    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def describe(self, x: Sequence[int]) -> str:
        """Render a class as ``2*S + 2*Sigma``."""
        x = self.check(x)
        parts: List[str] = []
        for name, c in zip(self.basis_names, x):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            parts.append(f"{sign} {mag}{name}")
        if not parts:
            return "0"
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def add(x: Sequence[int], y: Sequence[int]) -> ClassVec:
    if len(x) != len(y):
        raise LatticeMismatchError("classes of different rank")
    return tuple(a + b for a, b in zip(x, y))


def scale(k: int, x: Sequence[int]) -> ClassVec:
    return tuple(k * a for a in x)


def negate(x: Sequence[int]) -> ClassVec:
    return tuple(-a for a in x)


def direct_sum(left: IntLattice, right: IntLattice, prefixes: Tuple[str, str] = ("", "")) -> IntLattice:
    """Orthogonal sum with optionally prefixed basis names."""
    names = tuple(prefixes[0] + n for n in left.basis_names) + tuple(prefixes[1] + n for n in right.basis_names)
    r1, r2 = left.rank, right.rank
    gram = [list(row) + [0] * r2 for row in left.gram] + [[0] * r1 + list(row) for row in right.gram]
    return IntLattice(basis_names=names, gram=tuple(tuple(row) for row in gram))


class _SideBasis:
    """Adapted basis ``{d, s, o_1, ...}`` of one side of a gluing.

    ``s`` is the gluing surface, ``d`` (if any) pairs with ``s`` to the gcd
    ``g`` of all products with ``s``, and every ``o_k`` is orthogonal to ``s``.
    """

    def __init__(self, lattice: IntLattice, surface: str, prefix: str) -> None:
        self.lattice = lattice
        self.prefix = prefix
        j = lattice.index(surface)
        if lattice.gram[j][j] != 0:
            raise ConstructionError(f"gluing surface {surface!r} must have self-intersection 0")
        self.surface_index = j
        others = [i for i in range(lattice.rank) if i != j]
        row = [lattice.gram[j][i] for i in others]
        if others:
            _, transform, pivots = smith_transform([row])
        else:
            transform, pivots = [], 0
        if pivots and sum(a * b[0] for a, b in zip(row, transform)) < 0:
            for t in transform:
                t[0] = -t[0]

        def lift(col: int) -> ClassVec:
            vec = [0] * lattice.rank
            for k, i in enumerate(others):
                vec[i] = transform[k][col]
            return tuple(vec)

        self.g = sum(a * b[0] for a, b in zip(row, transform)) if pivots else 0
        self.dual: Optional[ClassVec] = lift(0) if pivots else None
        self.orthogonal: List[ClassVec] = [lift(c) for c in range(pivots, len(others))]

        columns = ([self.dual] if self.dual is not None else []) + [lattice.unit(surface)] + self.orthogonal
        self._inverse = Matrix([list(col) for col in columns]).T.inv()

    def coordinates(self, x: Sequence[int]) -> Tuple[int, int, List[int]]:
        """Split ``x`` as ``alpha*d + sigma*s + sum omega_k o_k``."""
        x = self.lattice.check(x)
        coords = [int(v) for v in self._inverse * Matrix(list(x))]
        if self.dual is None:
            return 0, coords[0], coords[1:]
        return coords[0], coords[1], coords[2:]

    def name(self, vec: ClassVec) -> str:
        return self.prefix + self.lattice.describe(vec).replace(" ", "")


class GluedLattice:
    """The tracked lattice of a fiber sum ``M1 #_{S1=S2} M2``.

    Classes of the sum are pairs ``(x1, x2)`` with ``x1.S1 = x2.S2`` taken
    modulo ``(S1, -S2)``; the pairing is ``x1.y1 + x2.y2``. The explicit basis
    is ``[C, D?, o1..., o2...]``: the identified surface, a glued dual class
    when both sides meet their surface, and each side's orthogonal part.
    Rim tori and vanishing classes of the junction are not tracked here.
    """

    def __init__(
        self,
        left: IntLattice,
        left_surface: str,
        right: IntLattice,
        right_surface: str,
        surface_name: str,
        prefixes: Tuple[str, str] = ("", ""),
        dual_name: str = "D",
    ) -> None:
        self.left = _SideBasis(left, left_surface, prefixes[0])
        self.right = _SideBasis(right, right_surface, prefixes[1])
        self.surface_name = surface_name

        g1, g2 = self.left.g, self.right.g
        self.has_dual = g1 > 0 and g2 > 0
        self.lcm = g1 * g2 // gcd(g1, g2) if self.has_dual else 0

        pairs: List[Tuple[ClassVec, ClassVec]] = [(left.unit(left_surface), right.zero())]
        names: List[str] = [surface_name]
        if self.has_dual:
            assert self.left.dual is not None and self.right.dual is not None
            d1 = tuple((self.lcm // g1) * v for v in self.left.dual)
            d2 = tuple((self.lcm // g2) * v for v in self.right.dual)
            pairs.append((d1, d2))
            names.append(dual_name)
        for o in self.left.orthogonal:
            pairs.append((o, right.zero()))
            names.append(self.left.name(o))
        for o in self.right.orthogonal:
            pairs.append((left.zero(), o))
            names.append(self.right.name(o))

        gram = [
            [left.pair(a1, b1) + right.pair(a2, b2) for (b1, b2) in pairs]
            for (a1, a2) in pairs
        ]
        self.lattice = IntLattice(basis_names=tuple(names), gram=tuple(tuple(r) for r in gram))
        logger.debug(
            "glued_lattice",
            surface=surface_name,
            rank=self.lattice.rank,
            left_gcd=g1,
            right_gcd=g2,
        )

    @property
    def surface(self) -> ClassVec:
        return self.lattice.unit(self.surface_name)

    def glue(self, x1: Sequence[int], x2: Sequence[int]) -> ClassVec:
        """The class of the sum represented by ``x1`` on the left and ``x2`` on the right."""
        a1, s1, w1 = self.left.coordinates(x1)
        a2, s2, w2 = self.right.coordinates(x2)
        if a1 * self.left.g != a2 * self.right.g:
            raise ConstructionError(
                "classes meet the gluing surface differently on the two sides "
                f"({a1 * self.left.g} vs {a2 * self.right.g})"
            )
        dual: List[int] = []
        if self.has_dual:
            dual = [a1 * self.left.g // self.lcm]
        return tuple([s1 + s2] + dual + list(w1) + list(w2))

    def from_left(self, x1: Sequence[int]) -> ClassVec:
        return self.glue(x1, self.right.lattice.zero())

    def from_right(self, x2: Sequence[int]) -> ClassVec:
        return self.glue(self.left.lattice.zero(), x2)


def glue_lattices(
    left: IntLattice,
    left_surface: str,
    right: IntLattice,
    right_surface: str,
    surface_name: str = "C",
    prefixes: Tuple[str, str] = ("", ""),
    dual_name: str = "D",
) -> GluedLattice:
    return GluedLattice(left, left_surface, right, right_surface, surface_name, prefixes, dual_name)
