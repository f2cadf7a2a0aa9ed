"""Finitely generated commutative monoids.

Two concrete carriers are supported: :class:`FiniteMonoid` (a Cayley table)
and :class:`SplitMonoid` (``Z^a x N^b x T``, optionally with an adjoined
zero).  Arbitrary presentations enter through :func:`saturate`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence, Union

from .abelian import FgAbelianGroup, finite_group_invariants, is_divisibility_chain
from .errors import CapExceeded

ZERO_NAME = "0"


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relations: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...] = ()
    has_zero: bool = False

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        rels = tuple((tuple(l), tuple(r)) for l, r in self.relations)
        object.__setattr__(self, "relations", rels)
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("duplicate generator names")
        n = len(self.generators)
        for l, r in rels:
            if len(l) != n or len(r) != n or min(l + r, default=0) < 0:
                raise ValueError(f"relation {l} = {r} is not indexed by {self.generators}")

    def with_explicit_zero(self) -> Presentation:
        """Replace ``has_zero`` by a generator ``0`` with absorbing relations."""
        if not self.has_zero:
            return self
        n = len(self.generators) + 1
        z = tuple(int(i == n - 1) for i in range(n))
        rels = [(l + (0,), r + (0,)) for l, r in self.relations]
        for i in range(n):
            rels.append((tuple(a + b for a, b in zip(z, _unit(n, i))), z))
        return Presentation(self.generators + (ZERO_NAME,), tuple(rels), False)

    def word_name(self, vec: Sequence[int]) -> str:
        return format_word(self.generators, vec)


def _unit(n: int, i: int) -> tuple[int, ...]:
    return tuple(int(j == i) for j in range(n))


def format_word(generators: Sequence[str], vec: Sequence[int]) -> str:
    parts = [g if e == 1 else f"{g}^{e}" for g, e in zip(generators, vec) if e]
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class FiniteMonoid:
    size: int
    cayley: tuple[tuple[int, ...], ...]
    identity: int = 0
    zero: int | None = None
    element_names: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "cayley", tuple(tuple(int(v) for v in row) for row in self.cayley))
        if not self.element_names:
            object.__setattr__(self, "element_names", tuple(str(i) for i in range(self.size)))
        else:
            object.__setattr__(self, "element_names", tuple(self.element_names))
        if len(self.cayley) != self.size or any(len(r) != self.size for r in self.cayley):
            raise ValueError("Cayley table must be size x size")
        if any(not 0 <= v < self.size for r in self.cayley for v in r):
            raise ValueError("Cayley table entry out of range")
        if not 0 <= self.identity < self.size:
            raise ValueError("identity index out of range")
        if self.zero is not None and not 0 <= self.zero < self.size:
            raise ValueError("zero index out of range")
        if len(self.element_names) != self.size:
            raise ValueError("element_names must have one label per element")

    def mul(self, x: int, y: int) -> int:
        return self.cayley[x][y]

    def power(self, x: int, k: int) -> int:
        y = self.identity
        for _ in range(k):
            y = self.cayley[y][x]
        return y

    def index(self, name: str) -> int:
        return self.element_names.index(name)

    def __str__(self):
        return "{" + ", ".join(self.element_names) + "}"


@dataclass(frozen=True)
class SplitMonoid:
    """``Z^free_rank x N^cone_rank x T`` with ``T`` given by invariant factors."""

    free_rank: int = 0
    cone_rank: int = 0
    torsion: tuple[int, ...] = ()
    has_zero: bool = False

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.free_rank < 0 or self.cone_rank < 0:
            raise ValueError("ranks must be non-negative")
        if not is_divisibility_chain(self.torsion):
            raise ValueError(f"torsion {list(self.torsion)} is not a divisibility chain of entries >= 2")

    @property
    def unit_group(self) -> FgAbelianGroup:
        return FgAbelianGroup(self.free_rank, self.torsion)

    def __str__(self):
        return (
            f"split(free={self.free_rank}, cone={self.cone_rank}, "
            f"torsion={list(self.torsion)}, zero={str(self.has_zero).lower()})"
        )


MonoidChart = Union[FiniteMonoid, SplitMonoid]


# -- saturation ---------------------------------------------------------------


@dataclass
class _Enumeration:
    table: list[list[int | None]] = field(default_factory=list)
    parent: list[int] = field(default_factory=list)
    active: int = 0

    def new(self, ngens: int) -> int:
        self.table.append([None] * ngens)
        self.parent.append(len(self.parent))
        self.active += 1
        return len(self.parent) - 1

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root


def _expand(vec: Sequence[int]) -> list[int]:
    return [g for g, e in enumerate(vec) for _ in range(e)]


def saturate(p: Presentation, cap: int = 4096) -> FiniteMonoid:
    """Enumerate the monoid presented by ``p`` as a Cayley table."""
    return saturate_with_generators(p, cap)[0]


def saturate_with_generators(p: Presentation, cap: int = 4096) -> tuple[FiniteMonoid, tuple[int, ...]]:
    """Like :func:`saturate`, also returning the element index of each generator.

    The explicit-zero generator (if ``p.has_zero``) comes last.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    p = p.with_explicit_zero()
    ngens = len(p.generators)
    rels = [(_expand(l), _expand(r)) for l, r in p.relations]
    rels += [([i, j], [j, i]) for i in range(ngens) for j in range(i + 1, ngens)]

    E = _Enumeration()
    E.new(ngens)

    def coincide(a: int, b: int) -> None:
        queue = deque([(a, b)])
        while queue:
            a, b = (E.find(x) for x in queue.popleft())
            if a == b:
                continue
            if b < a:
                a, b = b, a
            E.parent[b] = a
            E.active -= 1
            for g in range(ngens):
                tb = E.table[b][g]
                if tb is None:
                    continue
                ta = E.table[a][g]
                if ta is None:
                    E.table[a][g] = tb
                else:
                    queue.append((ta, tb))

    def trace(node: int, word: list[int]) -> int:
        for g in word:
            node = E.find(node)
            nxt = E.table[node][g]
            if nxt is None:
                nxt = E.new(ngens)
                E.table[node][g] = nxt
            node = nxt
        return E.find(node)

    i = 0
    while i < len(E.parent):
        if E.find(i) == i:
            for l, r in rels:
                a = trace(i, l)
                b = trace(i, r)
                if a != b:
                    coincide(a, b)
                if E.find(i) != i:
                    break
            if E.find(i) == i:
                for g in range(ngens):
                    if E.table[i][g] is None:
                        E.table[i][g] = E.new(ngens)
        if E.active > cap:
            raise CapExceeded(f"saturation produced more than {cap} elements; the monoid may be infinite")
        i += 1

    # Breadth-first relabelling gives shortlex words for element names.
    start = E.find(0)
    order = [start]
    words = {start: (0,) * ngens}
    k = 0
    while k < len(order):
        node = order[k]
        for g in range(ngens):
            nxt = E.find(E.table[node][g])
            if nxt not in words:
                words[nxt] = tuple(e + (j == g) for j, e in enumerate(words[node]))
                order.append(nxt)
        k += 1
    index = {node: n for n, node in enumerate(order)}
    table = [[index[trace(x, _expand(words[y]))] for y in order] for x in order]
    gen_elems = tuple(index[E.find(E.table[start][g])] for g in range(ngens))
    zero = gen_elems[-1] if ZERO_NAME in p.generators and p.generators[-1] == ZERO_NAME else None
    names = []
    for node in order:
        if zero is not None and index[node] == zero:
            names.append(ZERO_NAME)
        else:
            names.append(format_word(p.generators, words[node]))
    return FiniteMonoid(len(order), table, 0, zero, tuple(names)), gen_elems


# -- finite monoid operations ------------------------------------------------------


def verify_monoid(m: FiniteMonoid) -> list[str]:
    """Every violated monoid law, each with a witness; empty iff valid."""
    report = []
    T, n, e = m.cayley, m.size, m.identity
    for x in range(n):
        if T[e][x] != x or T[x][e] != x:
            report.append(f"identity: {m.element_names[e]} * {m.element_names[x]} != {m.element_names[x]}")
    for x in range(n):
        for y in range(x + 1, n):
            if T[x][y] != T[y][x]:
                report.append(f"commutativity: ({m.element_names[x]}, {m.element_names[y]})")
    for x in range(n):
        for y in range(n):
            xy = T[x][y]
            for z in range(n):
                if T[xy][z] != T[x][T[y][z]]:
                    report.append(
                        "associativity: "
                        f"({m.element_names[x]}, {m.element_names[y]}, {m.element_names[z]})"
                    )
    if m.zero is not None:
        for x in range(n):
            if T[m.zero][x] != m.zero or T[x][m.zero] != m.zero:
                report.append(f"zero: {m.element_names[m.zero]} * {m.element_names[x]} != zero")
    return report


def unit_elements(m: FiniteMonoid) -> list[int]:
    return [x for x in range(m.size) if m.identity in m.cayley[x]]


def inverse(m: FiniteMonoid, x: int) -> int:
    for y in range(m.size):
        if m.cayley[x][y] == m.identity:
            return y
    raise ValueError(f"{m.element_names[x]} is not a unit")


def units(m: FiniteMonoid) -> FgAbelianGroup:
    return finite_group_invariants(unit_elements(m), m.mul, m.identity)


def idempotents(m: FiniteMonoid) -> list[int]:
    return [x for x in range(m.size) if m.cayley[x][x] == x]


def minimal_idempotent(m: FiniteMonoid, subset: Sequence[int] | None = None) -> int:
    elems = range(m.size) if subset is None else subset
    e = m.identity
    for x in elems:
        if m.cayley[x][x] == x:
            e = m.cayley[e][x]
    return e


def completion_of_subset(m: FiniteMonoid, subset: Sequence[int]) -> FgAbelianGroup:
    """Quotient group of the submonoid ``subset`` (which must contain 1)."""
    e = minimal_idempotent(m, subset)
    group = sorted({m.cayley[e][x] for x in subset})
    return finite_group_invariants(group, m.mul, e)


def group_completion_finite(m: FiniteMonoid) -> FgAbelianGroup:
    """``Quot(m)``: the group ``e*m`` for the product ``e`` of all idempotents."""
    return completion_of_subset(m, range(m.size))


# -- standard monoids ------------------------------------------------------------


def trivial_monoid() -> FiniteMonoid:
    return FiniteMonoid(1, ((0,),), 0, None, ("1",))


def cyclic_group(n: int) -> FiniteMonoid:
    if n < 1:
        raise ValueError("n must be positive")
    names = ["1", "g"] + [f"g^{i}" for i in range(2, n)]
    return FiniteMonoid(n, [[(i + j) % n for j in range(n)] for i in range(n)], 0, None, names[:n])


def d_monoid(k: int) -> FiniteMonoid:
    """``D_k``: the cyclic group of order ``k-1`` with an absorbing zero (index ``k-1``)."""
    if k < 2:
        raise ValueError("D_k needs k >= 2")
    c = k - 1
    table = [[(i + j) % c for j in range(c)] + [c] for i in range(c)] + [[c] * k]
    names = list(cyclic_group(c).element_names) + [ZERO_NAME]
    return FiniteMonoid(k, table, 0, c, names)


def idempotent_monoid() -> FiniteMonoid:
    """The two-element monoid ``{1, a}`` with ``a^2 = a`` (no declared zero)."""
    return FiniteMonoid(2, ((0, 1), (1, 1)), 0, None, ("1", "a"))


def group_product(m1: FiniteMonoid, m2: FiniteMonoid) -> FiniteMonoid:
    n2 = m2.size
    table = [
        [m1.cayley[x1][y1] * n2 + m2.cayley[x2][y2] for y1 in range(m1.size) for y2 in range(n2)]
        for x1 in range(m1.size)
        for x2 in range(n2)
    ]
    names = [f"({a},{b})" for a in m1.element_names for b in m2.element_names]
    return FiniteMonoid(m1.size * n2, table, m1.identity * n2 + m2.identity, None, names)


# -- presentations ---------------------------------------------------------------


def presentation_of(s: SplitMonoid) -> Presentation:
    """Presentation of a split monoid by generators and relations.

    ``Z`` coordinates become pairs ``u_i, v_i`` with ``u_i v_i = 1``, cone
    coordinates free generators ``t_j``, torsion factors ``g_k`` with
    ``g_k^d = 1``, and the zero an explicit generator ``0`` absorbing every
    generator including itself.
    """
    gens = []
    for i in range(s.free_rank):
        gens += [f"u{i}", f"v{i}"]
    gens += [f"t{j}" for j in range(s.cone_rank)]
    gens += [f"g{k}" for k in range(len(s.torsion))]
    if s.has_zero:
        gens.append(ZERO_NAME)
    n = len(gens)
    one = (0,) * n
    rels = []
    for i in range(s.free_rank):
        rels.append((tuple(int(j in (2 * i, 2 * i + 1)) for j in range(n)), one))
    base = 2 * s.free_rank + s.cone_rank
    for k, d in enumerate(s.torsion):
        rels.append((tuple(d if j == base + k else 0 for j in range(n)), one))
    if s.has_zero:
        z = n - 1
        for j in range(n):
            lhs = [0] * n
            lhs[z] += 1
            lhs[j] += 1
            rels.append((tuple(lhs), _unit(n, z)))
    return Presentation(tuple(gens), tuple(rels), False)


def generating_set(m: FiniteMonoid) -> list[int]:
    """A greedy generating set: scan elements in index order, keep those not yet generated."""
    generated = {m.identity}
    gens = []
    for x in range(m.size):
        if x in generated:
            continue
        gens.append(x)
        frontier = list(generated)
        while frontier:
            nxt = []
            for y in frontier:
                for g in gens:
                    z = m.cayley[y][g]
                    if z not in generated:
                        generated.add(z)
                        nxt.append(z)
            frontier = nxt
    return gens


def finite_presentation(m: FiniteMonoid) -> tuple[Presentation, tuple[int, ...]]:
    """Presentation of a Cayley-table monoid read off its Cayley graph.

    Returns the presentation and the element index of each generator.  With
    BFS words ``w(x)`` over the generators, the relations ``w(x) g = w(xg)``
    generate the full congruence.
    """
    gens = generating_set(m)
    n = len(gens)
    words = {m.identity: (0,) * n}
    queue = deque([m.identity])
    while queue:
        x = queue.popleft()
        for i, g in enumerate(gens):
            y = m.cayley[x][g]
            if y not in words:
                words[y] = tuple(e + (j == i) for j, e in enumerate(words[x]))
                queue.append(y)
    rels = []
    for x, w in sorted(words.items()):
        for i, g in enumerate(gens):
            lhs = tuple(e + (j == i) for j, e in enumerate(w))
            rhs = words[m.cayley[x][g]]
            if lhs != rhs:
                rels.append((lhs, rhs))
    names = tuple(f"x{g}" for g in gens)
    return Presentation(names, tuple(rels), False), tuple(gens)
