"""Integer matrices, Smith normal form and finitely generated abelian groups."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from typing import Callable, Hashable, Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("IntMatrix entries do not match its shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [tuple(int(v) for v in r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cols must be given for a matrix without rows")
            cols = len(rows[0])
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        cols_other = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return IntMatrix(
            self.rows,
            other.cols,
            tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols_other) for r in self.entries),
        )

    def diagonal(self) -> list[int]:
        return [self.entries[i][i] for i in range(min(self.rows, self.cols))]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def smith_normal_form(M: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(U, D, V)`` with ``U @ M @ V == D``.

    ``U`` and ``V`` are unimodular and ``D`` is diagonal with non-negative
    entries forming a divisibility chain.  The pivot is always the nonzero
    entry of least absolute value in the active submatrix, ties going to the
    lowest (row, col), so the transforms are reproducible.
    """
    m, n = M.rows, M.cols
    A = [list(r) for r in M.entries]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):
        # row[dst] += c * row[src]
        A[dst] = [x + c * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, c):
        for row in A:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    for t in range(min(m, n)):
        while True:
            pivot = None
            for i in range(t, m):
                for j in range(t, n):
                    v = A[i][j]
                    if v and (pivot is None or abs(v) < abs(A[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                return (
                    IntMatrix.from_rows(U, m),
                    IntMatrix.from_rows(A, n),
                    IntMatrix.from_rows(V, n),
                )
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
            if any(A[i][t] for i in range(t + 1, m)) or any(A[t][j] for j in range(t + 1, n)):
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    return IntMatrix.from_rows(U, m), IntMatrix.from_rows(A, n), IntMatrix.from_rows(V, n)


def is_divisibility_chain(factors: Sequence[int]) -> bool:
    return all(d >= 2 for d in factors) and all(b % a == 0 for a, b in zip(factors, factors[1:]))


@dataclass(frozen=True)
class FgAbelianGroup:
    """``Z^rank x Z/d1 x ... x Z/dt`` with ``d1 | d2 | ... | dt``, each ``>= 2``."""

    rank: int = 0
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "invariant_factors", tuple(int(d) for d in self.invariant_factors))
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        if not is_divisibility_chain(self.invariant_factors):
            raise ValueError(f"not an invariant-factor chain: {list(self.invariant_factors)}")

    @classmethod
    def from_cyclic_orders(cls, orders: Iterable[int], rank: int = 0) -> FgAbelianGroup:
        """Normalise an arbitrary product of cyclic groups (0 means ``Z``)."""
        orders = [int(o) for o in orders]
        rank += sum(1 for o in orders if o == 0)
        finite = [o for o in orders if o not in (0, 1)]
        if not finite:
            return cls(rank, ())
        D = smith_normal_form(IntMatrix.from_rows([[o if i == j else 0 for j in range(len(finite))] for i, o in enumerate(finite)]))[1]
        return cls(rank, tuple(d for d in D.diagonal() if d >= 2))

    @property
    def exponent(self) -> int:
        return exponent(self)

    @property
    def torsion_order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.invariant_factors

    def product(self, other: FgAbelianGroup) -> FgAbelianGroup:
        return FgAbelianGroup.from_cyclic_orders(
            self.invariant_factors + other.invariant_factors, self.rank + other.rank
        )

    def __str__(self) -> str:
        parts = [] if self.rank == 0 else ["Z"] if self.rank == 1 else [f"Z^{self.rank}"]
        parts += [f"C{d}" for d in self.invariant_factors]
        return " x ".join(parts) if parts else "1"


def row_echelon(rows: Sequence[Sequence[int]], cols: int) -> list[list[int]]:
    """Integer row echelon form by Euclidean row operations.

    Only unimodular row operations are used, so the row lattice (and hence
    the cokernel) is unchanged; zero rows are dropped.
    """
    rows = [list(r) for r in rows if any(r)]
    out = []
    for c in range(cols):
        live = [r for r in rows if r[c]]
        if not live:
            continue
        rest = [r for r in rows if not r[c]]
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[c]))
            pivot = live[0]
            nxt = [pivot]
            for r in live[1:]:
                q = r[c] // pivot[c]
                r = [x - q * y for x, y in zip(r, pivot)]
                (nxt if r[c] else rest).append(r)
            live = nxt
        out.append(live[0])
        rows = [r for r in rest if any(r)]
    return out


def group_from_presentation(M: IntMatrix) -> FgAbelianGroup:
    """Abelian group on ``M.cols`` generators modulo the rows of ``M``."""
    if M.rows > M.cols:
        reduced = row_echelon(M.entries, M.cols)
        M = IntMatrix.from_rows(reduced, M.cols) if reduced else IntMatrix.zeros(0, M.cols)
    D = smith_normal_form(M)[1].diagonal()
    nonzero = [d for d in D if d]
    return FgAbelianGroup(M.cols - len(nonzero), tuple(d for d in nonzero if d >= 2))


def exponent(g: FgAbelianGroup) -> int:
    return g.invariant_factors[-1] if g.invariant_factors else 1


def hom_count_cyclic(g: FgAbelianGroup, m: int) -> int:
    """Number of homomorphisms from ``g`` to the cyclic group of order ``m``."""
    if m < 1:
        raise ValueError("m must be positive")
    return m ** g.rank * prod(gcd(d, m) for d in g.invariant_factors)


def finite_group_invariants(
    elements: Sequence[Hashable],
    mul: Callable[[Hashable, Hashable], Hashable],
    identity: Hashable,
) -> FgAbelianGroup:
    """Invariant factors of a finite abelian group given by its multiplication.

    Generators are picked greedily, largest order first.  Each new generator
    ``x`` contributes the relation ``x^j = w`` where ``j`` is the least power
    landing in the subgroup already generated and ``w`` its word there; the
    resulting square relation matrix is reduced by SNF.
    """
    elements = list(elements)

    def order(x):
        k, y = 1, x
        while y != identity:
            y = mul(y, x)
            k += 1
        return k

    orders = {x: order(x) for x in elements}
    ranked = sorted(range(len(elements)), key=lambda i: (-orders[elements[i]], i))
    words = {identity: ()}  # element -> exponent vector over the generators so far
    relations: list[list[int]] = []
    for idx in ranked:
        x = elements[idx]
        if x in words:
            continue
        s = len(relations)
        for w in words:
            words[w] = words[w] + (0,)
        new = dict(words)
        j, y = 1, x
        while y not in words:
            for h, vec in words.items():
                new[mul(h, y)] = tuple(v + (j if i == s else 0) for i, v in enumerate(vec))
            y = mul(y, x)
            j += 1
        for row in relations:
            row.append(0)
        relations.append([-v for v in words[y]])
        relations[-1][s] += j
        words = new
    if len(words) != len(elements):
        raise ValueError("multiplication does not close on the given elements")
    if not relations:
        return FgAbelianGroup()
    return group_from_presentation(IntMatrix.from_rows(relations))
