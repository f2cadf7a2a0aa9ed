"""Finite pointed modules over a finite commutative monoid.

Carriers are ``0..size-1`` with ``0`` the basepoint.  ``action[a][x]`` is
``a . x``.  When the monoid has a declared zero it acts as the basepoint,
which is what makes ``A`` itself (pointed at its zero) the free module of
rank one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..errors import BaseMismatch, NotEquivariant
from ..monoid import FiniteMonoid


@dataclass(frozen=True)
class PointedModule:
    monoid: FiniteMonoid
    size: int
    action: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "action", tuple(tuple(r) for r in self.action))
        if not self.labels:
            object.__setattr__(self, "labels", ("*",) + tuple(f"m{i}" for i in range(1, self.size)))
        problems = module_violations(self)
        if problems:
            raise ValueError("not a pointed module: " + "; ".join(problems[:3]))

    def act(self, a: int, x: int) -> int:
        return self.action[a][x]

    def orbit(self, x: int) -> set[int]:
        return {row[x] for row in self.action}

    def __str__(self):
        return "{" + ", ".join(self.labels) + "}"


def module_violations(M: PointedModule) -> list[str]:
    A = M.monoid
    out = []
    if M.size < 1:
        return ["carrier must contain the basepoint"]
    if len(M.action) != A.size or any(len(r) != M.size for r in M.action):
        return ["action table has the wrong shape"]
    if any(not 0 <= v < M.size for r in M.action for v in r):
        return ["action value out of range"]
    for a in range(A.size):
        if M.action[a][0] != 0:
            out.append(f"{A.element_names[a]} moves the basepoint")
    for x in range(M.size):
        if M.action[A.identity][x] != x:
            out.append(f"1 . {x} != {x}")
        if A.zero is not None and M.action[A.zero][x] != 0:
            out.append(f"0 . {x} is not the basepoint")
    for a in range(A.size):
        for b in range(A.size):
            ab = A.cayley[a][b]
            for x in range(M.size):
                if M.action[a][M.action[b][x]] != M.action[ab][x]:
                    out.append(f"a(bx) != (ab)x at a={a}, b={b}, x={x}")
    return out


@dataclass(frozen=True)
class ModuleMap:
    source: PointedModule
    target: PointedModule
    table: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))
        if self.source.monoid != self.target.monoid:
            raise BaseMismatch("source and target are modules over different monoids")
        if len(self.table) != self.source.size or any(not 0 <= v < self.target.size for v in self.table):
            raise ValueError("map table does not match source and target")
        if self.table[0] != 0:
            raise NotEquivariant("map does not preserve the basepoint")
        for a in range(self.source.monoid.size):
            for x in range(self.source.size):
                if self.table[self.source.action[a][x]] != self.target.action[a][self.table[x]]:
                    raise NotEquivariant(f"f(a.x) != a.f(x) at a={a}, x={x}")

    def __call__(self, x: int) -> int:
        return self.table[x]

    def image(self) -> set[int]:
        return set(self.table)

    def is_injective(self) -> bool:
        return len(set(self.table)) == len(self.table)

    def is_surjective(self) -> bool:
        return len(set(self.table)) == self.target.size


def identity_map(M: PointedModule) -> ModuleMap:
    return ModuleMap(M, M, tuple(range(M.size)))


def compose(g: ModuleMap, f: ModuleMap) -> ModuleMap:
    """``g . f``."""
    if f.target != g.source:
        raise ValueError("maps are not composable")
    return ModuleMap(f.source, g.target, tuple(g.table[y] for y in f.table))


def _check_base(*modules: PointedModule) -> None:
    if any(M.monoid != modules[0].monoid for M in modules):
        raise BaseMismatch("modules over different monoids")


def zero_module(A: FiniteMonoid) -> PointedModule:
    return PointedModule(A, 1, tuple((0,) for _ in range(A.size)), ("*",))


def _free_elements(A: FiniteMonoid) -> list[int]:
    return [a for a in range(A.size) if a != A.zero]


def free_module(A: FiniteMonoid, n: int) -> PointedModule:
    """Wedge of ``n`` copies of ``A+`` (``A`` pointed at its zero, if it has one)."""
    if n < 0:
        raise ValueError("rank must be non-negative")
    elems = _free_elements(A)
    pos = {a: k for k, a in enumerate(elems)}
    size = n * len(elems) + 1
    action = []
    for b in range(A.size):
        row = [0]
        for i in range(n):
            for a in elems:
                ba = A.cayley[b][a]
                row.append(0 if ba == A.zero else 1 + i * len(elems) + pos[ba])
        action.append(tuple(row))
    labels = ["*"]
    for i in range(n):
        labels += [A.element_names[a] if n == 1 else f"{A.element_names[a]}@{i}" for a in elems]
    return PointedModule(A, size, tuple(action), tuple(labels))


def free_generator(A: FiniteMonoid, n: int, i: int) -> int:
    """Index of the ``i``-th basis element (``1`` in copy ``i``) of ``free_module(A, n)``."""
    return 1 + i * len(_free_elements(A)) + _free_elements(A).index(A.identity)


def submodule(M: PointedModule, elements) -> tuple[PointedModule, ModuleMap]:
    """The submodule on an action-closed set (the basepoint is added)."""
    keep = sorted(set(elements) | {0})
    new = {x: k for k, x in enumerate(keep)}
    try:
        action = tuple(tuple(new[row[x]] for x in keep) for row in M.action)
    except KeyError:
        raise ValueError("subset is not closed under the action") from None
    S = PointedModule(M.monoid, len(keep), action, tuple(M.labels[x] for x in keep))
    return S, ModuleMap(S, M, tuple(keep))


def wedge_maps(M: PointedModule, N: PointedModule):
    """``M v N`` with its two inclusions and two projections."""
    _check_base(M, N)
    shift = M.size - 1

    def n_index(y):
        return 0 if y == 0 else y + shift

    size = M.size + N.size - 1
    action = tuple(
        tuple(M.action[a]) + tuple(n_index(y) for y in N.action[a][1:]) for a in range(M.monoid.size)
    )
    labels = tuple(M.labels) + tuple(N.labels[1:])
    W = PointedModule(M.monoid, size, action, labels)
    inc_m = ModuleMap(M, W, tuple(range(M.size)))
    inc_n = ModuleMap(N, W, tuple(n_index(y) for y in range(N.size)))
    pr_m = ModuleMap(W, M, tuple(x if x < M.size else 0 for x in range(size)))
    pr_n = ModuleMap(W, N, tuple(0 if x < M.size else x - shift for x in range(size)))
    return W, inc_m, inc_n, pr_m, pr_n


def wedge(M: PointedModule, N: PointedModule) -> PointedModule:
    return wedge_maps(M, N)[0]


def wedge_all(A: FiniteMonoid, modules: Sequence[PointedModule]) -> PointedModule:
    out = zero_module(A)
    for M in modules:
        out = wedge(out, M)
    return out


def components(M: PointedModule) -> list[list[int]]:
    """Finest partition of the non-basepoint elements into action-closed blocks."""
    parent = list(range(M.size))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for row in M.action:
        for x in range(1, M.size):
            y = row[x]
            if y:
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
    blocks: dict[int, list[int]] = {}
    for x in range(1, M.size):
        blocks.setdefault(find(x), []).append(x)
    return [blocks[r] for r in sorted(blocks)]


def kernel(f: ModuleMap) -> tuple[PointedModule, ModuleMap]:
    return submodule(f.source, [x for x in range(f.source.size) if f.table[x] == 0])


def cokernel(f: ModuleMap) -> tuple[PointedModule, ModuleMap]:
    """Collapse the image of ``f`` to the basepoint."""
    Y = f.target
    image = f.image()
    rest = [y for y in range(Y.size) if y not in image]
    new = {y: 0 for y in image}
    new.update({y: k for k, y in enumerate(rest, start=1)})
    action = tuple(tuple([0] + [new[row[y]] for y in rest]) for row in Y.action)
    C = PointedModule(Y.monoid, len(rest) + 1, action, ("*",) + tuple(Y.labels[y] for y in rest))
    return C, ModuleMap(Y, C, tuple(new[y] for y in range(Y.size)))


def pullback(f: ModuleMap, g: ModuleMap):
    """Fiber product of ``f: M -> P`` and ``g: N -> P`` with its two projections."""
    if f.target != g.target:
        raise ValueError("pullback needs maps into the same module")
    M, N = f.source, g.source
    pairs = [(m, n) for m in range(M.size) for n in range(N.size) if f.table[m] == g.table[n]]
    index = {pr: k for k, pr in enumerate(pairs)}  # (0, 0) comes first
    action = tuple(
        tuple(index[(M.action[a][m], N.action[a][n])] for m, n in pairs) for a in range(M.monoid.size)
    )
    labels = tuple("*" if pr == (0, 0) else f"({M.labels[pr[0]]},{N.labels[pr[1]]})" for pr in pairs)
    Pb = PointedModule(M.monoid, len(pairs), action, labels)
    return (
        Pb,
        ModuleMap(Pb, M, tuple(m for m, _ in pairs)),
        ModuleMap(Pb, N, tuple(n for _, n in pairs)),
    )


def _bijective(table: Sequence[int], size: int) -> bool:
    return len(table) == size and len(set(table)) == size


def strong_exact_check(i: ModuleMap, j: ModuleMap) -> bool:
    """True iff ``i`` is a kernel of ``j`` and ``j`` a cokernel of ``i``.

    Both universal properties are tested through the canonical comparison
    maps ``X -> ker j`` and ``coker i -> Z``, which must be isomorphisms.
    """
    if i.target != j.source:
        return False
    if any(j.table[y] for y in i.table):
        return False
    K, k_in = kernel(j)
    pos = {y: k for k, y in enumerate(k_in.table)}
    to_kernel = [pos.get(y) for y in i.table]
    if None in to_kernel or not _bijective(to_kernel, K.size):
        return False
    C, c_pr = cokernel(i)
    from_coker = [None] * C.size
    for y in range(j.source.size):
        c = c_pr.table[y]
        if from_coker[c] is None:
            from_coker[c] = j.table[y]
        elif from_coker[c] != j.table[y]:
            return False
    return _bijective(from_coker, j.target.size)


def is_split_kernel(i: ModuleMap) -> bool:
    """``i`` is injective and its image is a wedge summand of the target."""
    if not i.is_injective():
        return False
    image = i.image()
    for y in range(i.target.size):
        if y in image:
            continue
        for row in i.target.action:
            if row[y] != 0 and row[y] in image:
                return False
    return True


def is_split_cokernel(j: ModuleMap) -> bool:
    """``j`` collapses a wedge summand and is bijective on the rest."""
    if not j.is_surjective():
        return False
    K, k_in = kernel(j)
    return strong_exact_check(k_in, j) and is_split_kernel(k_in)


# -- isomorphism -------------------------------------------------------------------


def _signature(M: PointedModule, x: int) -> tuple[int, ...]:
    """For each ``a``: the first ``a'`` with ``a'.x == a.x`` (``-1`` if ``a.x`` is the basepoint)."""
    first: dict[int, int] = {}
    out = []
    for a, row in enumerate(M.action):
        y = row[x]
        if y == 0:
            out.append(-1)
        else:
            out.append(first.setdefault(y, a))
    return tuple(out)


def _generators(M: PointedModule) -> list[int]:
    order = sorted(range(1, M.size), key=lambda x: (-len(M.orbit(x)), x))
    covered: set[int] = {0}
    gens = []
    for x in order:
        if x not in covered:
            gens.append(x)
            covered |= M.orbit(x)
    return gens


def find_isomorphism(M: PointedModule, N: PointedModule) -> ModuleMap | None:
    """An equivariant pointed bijection ``M -> N``, by backtracking over generator images."""
    _check_base(M, N)
    if M.size != N.size:
        return None
    sig_m = [_signature(M, x) for x in range(M.size)]
    sig_n = [_signature(N, y) for y in range(N.size)]
    if sorted(sig_m) != sorted(sig_n):
        return None
    gens = _generators(M)
    phi: list[int | None] = [None] * M.size
    phi[0] = 0
    used = {0}

    def extend(x, y):
        added = []
        for a in range(M.monoid.size):
            u, v = M.action[a][x], N.action[a][y]
            if phi[u] is None:
                if v in used:
                    return added, False
                phi[u] = v
                used.add(v)
                added.append(u)
            elif phi[u] != v:
                return added, False
        return added, True

    def undo(added):
        for u in added:
            used.discard(phi[u])
            phi[u] = None

    def search(k):
        if k == len(gens):
            return True
        x = gens[k]
        if phi[x] is not None:
            return search(k + 1)
        for y in range(1, N.size):
            if y in used or sig_n[y] != sig_m[x]:
                continue
            added, ok = extend(x, y)
            if ok and search(k + 1):
                return True
            undo(added)
        return False

    if not search(0):
        return None
    return ModuleMap(M, N, tuple(phi))


def is_isomorphic(M: PointedModule, N: PointedModule) -> bool:
    return find_isomorphism(M, N) is not None


def invariant_key(M: PointedModule) -> tuple:
    """Cheap isomorphism invariant used to bucket modules before a full search."""
    return (M.size, tuple(sorted(_signature(M, x) for x in range(M.size))))
