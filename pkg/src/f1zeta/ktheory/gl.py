"""``GL_n(A)``: monomial matrices with unit entries, i.e. ``(A^x)^n`` semidirect ``Per(n)``."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from typing import Iterator

from ..monoid import FiniteMonoid, inverse, unit_elements

MAX_ENUMERATION_RANK = 8


@dataclass(frozen=True)
class MonomialMatrix:
    """Row ``i`` has its single nonzero entry ``diag[i]`` in column ``perm[i]``."""

    perm: tuple[int, ...]
    diag: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.perm)


class GeneralLinearGroup:
    def __init__(self, A: FiniteMonoid, n: int):
        if n < 0:
            raise ValueError("n must be non-negative")
        self.monoid = A
        self.n = n
        self.units = unit_elements(A)
        self._unit_set = set(self.units)

    def identity(self) -> MonomialMatrix:
        return MonomialMatrix(tuple(range(self.n)), (self.monoid.identity,) * self.n)

    def check(self, g: MonomialMatrix) -> None:
        if sorted(g.perm) != list(range(self.n)) or len(g.diag) != self.n:
            raise ValueError(f"{g} is not an {self.n}x{self.n} monomial matrix")
        if any(d not in self._unit_set for d in g.diag):
            raise ValueError(f"{g} has a non-unit entry")

    def multiply(self, g: MonomialMatrix, h: MonomialMatrix) -> MonomialMatrix:
        # (gh)[i][h.perm[g.perm[i]]] = g.diag[i] * h.diag[g.perm[i]]
        mul = self.monoid.cayley
        return MonomialMatrix(
            tuple(h.perm[g.perm[i]] for i in range(self.n)),
            tuple(mul[g.diag[i]][h.diag[g.perm[i]]] for i in range(self.n)),
        )

    def invert(self, g: MonomialMatrix) -> MonomialMatrix:
        perm = [0] * self.n
        diag = [0] * self.n
        for i, j in enumerate(g.perm):
            perm[j] = i
            diag[j] = inverse(self.monoid, g.diag[i])
        return MonomialMatrix(tuple(perm), tuple(diag))

    def order(self) -> int:
        return len(self.units) ** self.n * factorial(self.n)

    def enumerate(self) -> Iterator[MonomialMatrix]:
        if self.n > MAX_ENUMERATION_RANK:
            raise ValueError(f"enumeration is limited to n <= {MAX_ENUMERATION_RANK}")
        for perm in permutations(range(self.n)):
            for diag in product(self.units, repeat=self.n):
                yield MonomialMatrix(perm, diag)

    def to_dense(self, g: MonomialMatrix) -> list[list[int | None]]:
        """Entries as element indices, ``None`` for a zero entry."""
        rows = [[None] * self.n for _ in range(self.n)]
        for i, (j, d) in enumerate(zip(g.perm, g.diag)):
            rows[i][j] = d
        return rows


def gl_n(A: FiniteMonoid, n: int) -> GeneralLinearGroup:
    return GeneralLinearGroup(A, n)
