"""Projective pointed modules and the Grothendieck group of the split exact structure.

A module is projective here when it is a retract of a finite free module,
i.e. the image of an idempotent endomorphism of some ``free_module(A, n)``.
Endomorphisms of a free module are determined by the images of its basis,
so idempotents are scanned exhaustively at small rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from ..abelian import FgAbelianGroup, IntMatrix, group_from_presentation
from ..errors import CapExceeded
from ..monoid import FiniteMonoid
from .modules import (
    ModuleMap,
    PointedModule,
    cokernel,
    components,
    free_generator,
    free_module,
    invariant_key,
    is_isomorphic,
    strong_exact_check,
    submodule,
    wedge,
    wedge_all,
)

DEFAULT_SIZE_CAP = 12
DEFAULT_SCAN_BUDGET = 20_000


@dataclass(frozen=True)
class Retract:
    """An idempotent endomorphism of ``free_module(A, rank)``, by basis images."""

    rank: int
    images: tuple[int, ...]

    def endomorphism(self, A: FiniteMonoid) -> ModuleMap:
        F = free_module(A, self.rank)
        return _endomorphism(F, A, self.rank, self.images)

    def image_module(self, A: FiniteMonoid) -> PointedModule:
        f = self.endomorphism(A)
        return submodule(f.target, f.image())[0]


def _endomorphism(F: PointedModule, A: FiniteMonoid, n: int, images) -> ModuleMap:
    table = [0] * F.size
    for i in range(n):
        e = free_generator(A, n, i)
        for a in range(A.size):
            table[F.action[a][e]] = F.action[a][images[i]]
    return ModuleMap(F, F, tuple(table))


def is_idempotent(f: ModuleMap) -> bool:
    return all(f.table[y] == y for y in f.table)


@dataclass(frozen=True)
class ProjectiveEntry:
    module: PointedModule
    multiplicities: tuple[int, ...]  # count of each indecomposable
    witness: Retract

    @property
    def label(self) -> str:
        return str(self.module)


@dataclass(frozen=True)
class ProjectiveInventory:
    monoid: FiniteMonoid
    size_cap: int
    indecomposables: tuple[PointedModule, ...]
    entries: tuple[ProjectiveEntry, ...]
    scanned_ranks: tuple[int, ...]
    unique_decomposition: bool

    @cached_property
    def _entry_keys(self) -> dict:
        return _bucket([e.module for e in self.entries])

    @cached_property
    def _indecomposable_keys(self) -> dict:
        return _bucket(self.indecomposables)

    def decompose(self, M: PointedModule) -> tuple[int, ...]:
        """Multiplicity of each indecomposable among the wedge components of ``M``."""
        counts = [0] * len(self.indecomposables)
        for block in components(M):
            C = submodule(M, block)[0]
            k = _find(C, self.indecomposables, self._indecomposable_keys)
            if k is None:
                raise ValueError(f"component {C} is not an enumerated indecomposable projective")
            counts[k] += 1
        return tuple(counts)

    def find(self, M: PointedModule) -> int | None:
        """Index of the entry isomorphic to ``M``, if any."""
        return _find(M, [e.module for e in self.entries], self._entry_keys)


def _bucket(modules) -> dict:
    buckets: dict = {}
    for k, M in enumerate(modules):
        buckets.setdefault(invariant_key(M), []).append(k)
    return buckets


def _find(M: PointedModule, modules, buckets=None) -> int | None:
    key = invariant_key(M)
    if buckets is None:
        candidates = [k for k, N in enumerate(modules) if invariant_key(N) == key]
    else:
        candidates = buckets.get(key, [])
    for k in candidates:
        if is_isomorphic(M, modules[k]):
            return k
    return None


def scan_idempotents(A: FiniteMonoid, n: int):
    """Every idempotent endomorphism of ``free_module(A, n)``.

    Yields ``(Retract, image, inclusion of the image)``.
    """
    F = free_module(A, n)
    for images in product(range(F.size), repeat=n):
        f = _endomorphism(F, A, n, images)
        if is_idempotent(f):
            yield (Retract(n, tuple(images)), *submodule(F, f.image()))


def _component_retract(r: Retract, inclusion: ModuleMap, block) -> Retract:
    # Follow the idempotent by the retraction of its image onto one component.
    keep = {inclusion.table[x] for x in block}
    return Retract(r.rank, tuple(y if y in keep else 0 for y in r.images))


def _embed(A: FiniteMonoid, r: Retract, offset: int) -> tuple[int, ...]:
    """Basis images of ``r`` moved into copies ``offset..`` of a larger free module."""
    k = len([a for a in range(A.size) if a != A.zero])
    return tuple(0 if y == 0 else y + offset * k for y in r.images)


def enumerate_projectives(
    A: FiniteMonoid,
    size_cap: int = DEFAULT_SIZE_CAP,
    scan_budget: int = DEFAULT_SCAN_BUDGET,
) -> ProjectiveInventory:
    """Projectives with at most ``size_cap`` elements, up to isomorphism.

    Rank one is always scanned; it already yields every indecomposable,
    because a connected retract of a wedge of copies of ``A+`` is a retract
    of a single copy.  Higher ranks are scanned while the search space stays
    within ``scan_budget`` and serve as a consistency check.
    """
    F1 = free_module(A, 1)
    if F1.size > size_cap:
        raise CapExceeded(f"free module of rank 1 has {F1.size} elements, above the cap {size_cap}")

    indecomposables: list[PointedModule] = []
    indec_witness: list[Retract] = []
    scanned: list[tuple[Retract, PointedModule]] = []
    ranks = []
    n = 1
    while True:
        F = free_module(A, n)
        if n > 1 and (F.size > size_cap or F.size**n > scan_budget):
            break
        ranks.append(n)
        for r, image, inclusion in scan_idempotents(A, n):
            scanned.append((r, image))
            for block in components(image):
                C = submodule(image, block)[0]
                if _find(C, indecomposables) is None:
                    indecomposables.append(C)
                    indec_witness.append(_component_retract(r, inclusion, block))
        n += 1

    order = sorted(range(len(indecomposables)), key=lambda k: (indecomposables[k].size, k))
    indecomposables = [indecomposables[k] for k in order]
    indec_witness = [indec_witness[k] for k in order]

    entries = []
    weights = [P.size - 1 for P in indecomposables]
    budget = size_cap - 1

    def multisets(k, room):
        if k == len(weights):
            yield ()
            return
        for c in range(room // weights[k] + 1):
            for rest in multisets(k + 1, room - c * weights[k]):
                yield (c,) + rest

    for mult in sorted(multisets(0, budget), key=lambda m: (sum(c * w for c, w in zip(m, weights)), m)):
        parts = [k for k, c in enumerate(mult) for _ in range(c)]
        module = wedge_all(A, [indecomposables[k] for k in parts])
        rank = sum(indec_witness[k].rank for k in parts)
        images: list[int] = []
        offset = 0
        for k in parts:
            images += _embed(A, indec_witness[k], offset)
            offset += indec_witness[k].rank
        entries.append(ProjectiveEntry(module, mult, Retract(rank, tuple(images))))

    inventory = ProjectiveInventory(A, size_cap, tuple(indecomposables), tuple(entries), tuple(ranks), True)
    unique = all(_decomposition_agrees(inventory, image) for _, image in scanned)
    return ProjectiveInventory(A, size_cap, tuple(indecomposables), tuple(entries), tuple(ranks), unique)


def _decomposition_agrees(inv: ProjectiveInventory, image: PointedModule) -> bool:
    if image.size > inv.size_cap:
        return True
    key = invariant_key(image)
    matches = [k for k in inv._entry_keys.get(key, []) if is_isomorphic(inv.entries[k].module, image)]
    return len(matches) == 1 and inv.entries[matches[0]].multiplicities == inv.decompose(image)


@dataclass(frozen=True)
class K0Result:
    group: FgAbelianGroup  # cokernel of the relation matrix
    generator_labels: tuple[str, ...]  # indecomposable projective classes
    free_on_indecomposables: FgAbelianGroup
    agree: bool
    object_count: int
    relation_count: int
    inventory: ProjectiveInventory

    def class_of(self, M: PointedModule) -> tuple[int, ...]:
        return self.inventory.decompose(M)


def k0_q(A: FiniteMonoid, size_cap: int = DEFAULT_SIZE_CAP) -> K0Result:
    """Grothendieck group of the enumerated projectives under split exact sequences.

    Relations ``[X v Y] = [X] + [Y]`` for every pair of objects whose wedge
    fits in the cap, plus ``[Y] = [X] + [Z]`` for every split strong exact
    sequence ``X -> Y -> Z`` obtained by including a sub-wedge of ``Y``'s
    components.  The cokernel is computed by SNF and compared with the free
    group on the indecomposables.
    """
    inv = enumerate_projectives(A, size_cap)
    objects = [e.module for e in inv.entries]
    n = len(objects)
    rows: set[tuple[int, ...]] = set()

    def relation(total, *parts):
        row = [0] * n
        row[total] += 1
        for p in parts:
            row[p] -= 1
        if any(row):
            rows.add(tuple(row))

    def locate(M):
        k = inv.find(M)
        if k is None:
            raise ValueError(f"{M} is not among the enumerated projectives")
        return k

    for i in range(n):
        for j in range(i, n):
            if objects[i].size + objects[j].size - 1 <= size_cap:
                relation(locate(wedge(objects[i], objects[j])), i, j)
    for y, Y in enumerate(objects):
        blocks = components(Y)
        by_class: dict[int, list[list[int]]] = {}
        for block in blocks:
            k = inv.decompose(submodule(Y, block)[0]).index(1)
            by_class.setdefault(k, []).append(block)
        classes = sorted(by_class)
        for counts in product(*(range(len(by_class[k]) + 1) for k in classes)):
            chosen = [x for k, c in zip(classes, counts) for block in by_class[k][:c] for x in block]
            X, inc = submodule(Y, chosen)
            Z, proj = cokernel(inc)
            if not strong_exact_check(inc, proj):
                raise AssertionError(f"sub-wedge inclusion into {Y} is not strong exact")
            relation(y, locate(X), locate(Z))

    matrix = IntMatrix.from_rows(sorted(rows), n) if rows else IntMatrix.zeros(0, n)
    group = group_from_presentation(matrix)
    free = FgAbelianGroup(len(inv.indecomposables))
    return K0Result(
        group,
        tuple(str(P) for P in inv.indecomposables),
        free,
        group == free,
        n,
        len(rows),
        inv,
    )
