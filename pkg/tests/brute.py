"""Brute-force helpers shared by the K-theory tests and the acceptance suite."""

from __future__ import annotations

from itertools import product

from f1zeta.monoid import FiniteMonoid, cyclic_group, d_monoid, group_product, idempotent_monoid, trivial_monoid


def nonzero_elements(A: FiniteMonoid) -> list[int]:
    return [x for x in range(A.size) if x != A.zero]


def acts_bijectively(A: FiniteMonoid, n: int, rows) -> bool:
    """Does right multiplication by the matrix permute the free pointed module of rank n?

    ``rows[i] = (column, entry)``; the module is ``{*} u {e_i a}`` and
    ``e_i a`` is sent to ``e_col (a * entry)``, or to ``*`` when that product is zero.
    """
    images = set()
    for i in range(n):
        col, entry = rows[i]
        for a in nonzero_elements(A):
            b = A.cayley[a][entry]
            image = None if b == A.zero else (col, b)
            if image is None or image in images:
                return False
            images.add(image)
    return True


def dense_gl_count(A: FiniteMonoid, n: int) -> int:
    """Count matrices with one nonzero entry per row that act invertibly on the free module."""
    choices = [(c, e) for c in range(n) for e in nonzero_elements(A)]
    return sum(1 for rows in product(choices, repeat=n) if acts_bijectively(A, n, rows))


def gl_test_monoids() -> list[FiniteMonoid]:
    """Small monoids whose unit group has order at most 4."""
    return [
        trivial_monoid(),
        cyclic_group(2),
        cyclic_group(3),
        cyclic_group(4),
        group_product(cyclic_group(2), cyclic_group(2)),
        idempotent_monoid(),
        d_monoid(3),
        d_monoid(5),
        group_product(idempotent_monoid(), cyclic_group(2)),
    ]
