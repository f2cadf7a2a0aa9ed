"""Every commutative monoid of size <= 4, up to isomorphism, by direct search."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product

from f1zeta.monoid import FiniteMonoid


def _tables(n):
    # Element 0 is the identity; fill the upper triangle of the rest freely.
    others = range(1, n)
    pairs = [(i, j) for i in others for j in others if i <= j]
    for values in product(range(n), repeat=len(pairs)):
        t = [[0] * n for _ in range(n)]
        for x in range(n):
            t[0][x] = t[x][0] = x
        for (i, j), v in zip(pairs, values):
            t[i][j] = t[j][i] = v
        if all(t[t[x][y]][z] == t[x][t[y][z]] for x in range(n) for y in range(n) for z in range(n)):
            yield t


def _canonical(t):
    n = len(t)
    best = None
    for rest in permutations(range(1, n)):
        perm = (0,) + rest
        inv = {p: i for i, p in enumerate(perm)}
        key = tuple(inv[t[perm[x]][perm[y]]] for x in range(n) for y in range(n))
        if best is None or key < best:
            best = key
    return best


def _zero(t):
    n = len(t)
    for z in range(n):
        if all(t[z][x] == z for x in range(n)):
            return z
    return None


@lru_cache(maxsize=None)
def small_commutative_monoids(max_size: int = 4) -> tuple[FiniteMonoid, ...]:
    out = []
    for n in range(1, max_size + 1):
        seen = set()
        for t in _tables(n):
            key = _canonical(t)
            if key in seen:
                continue
            seen.add(key)
            table = [list(key[i * n:(i + 1) * n]) for i in range(n)]
            zero = _zero(table) if n > 1 else None
            names = ["1"] + [f"x{i}" for i in range(1, n)]
            out.append(FiniteMonoid(n, table, 0, zero, names))
    return tuple(out)


def isomorphic(m1: FiniteMonoid, m2: FiniteMonoid) -> bool:
    """Brute-force Cayley-table isomorphism (identity fixed)."""
    if m1.size != m2.size:
        return False
    n = m1.size
    rest1 = [x for x in range(n) if x != m1.identity]
    rest2 = [x for x in range(n) if x != m2.identity]
    for perm in permutations(rest2):
        f = dict(zip(rest1, perm))
        f[m1.identity] = m2.identity
        if all(f[m1.cayley[x][y]] == m2.cayley[f[x]][f[y]] for x in range(n) for y in range(n)):
            return True
    return False
