from __future__ import annotations

import random

import pytest

from brute import dense_gl_count, gl_test_monoids
from f1zeta.ktheory.gl import MonomialMatrix, gl_n
from f1zeta.monoid import cyclic_group, d_monoid, idempotent_monoid, trivial_monoid, unit_elements


def test_gl_examples():
    assert gl_n(d_monoid(3), 2).order() == 8
    assert gl_n(trivial_monoid(), 3).order() == 6
    for A in gl_test_monoids():
        assert gl_n(A, 1).order() == len(unit_elements(A))
    assert gl_n(idempotent_monoid(), 0).order() == 1


@pytest.mark.parametrize("A", gl_test_monoids(), ids=lambda m: str(m.cayley))
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_order_matches_dense_enumeration(A, n):
    G = gl_n(A, n)
    assert len(unit_elements(A)) <= 4
    assert G.order() == dense_gl_count(A, n)
    if n <= 3:
        assert sum(1 for _ in G.enumerate()) == G.order()


def test_group_laws_on_samples():
    rnd = random.Random(7)
    for A in (cyclic_group(3), d_monoid(5), idempotent_monoid()):
        G = gl_n(A, 3)
        elems = list(G.enumerate())
        e = G.identity()
        for _ in range(200):
            g, h, k = (rnd.choice(elems) for _ in range(3))
            assert G.multiply(g, e) == g == G.multiply(e, g)
            assert G.multiply(g, G.invert(g)) == e == G.multiply(G.invert(g), g)
            assert G.multiply(G.multiply(g, h), k) == G.multiply(g, G.multiply(h, k))


def dense_product(A, x, y):
    n = len(x)
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for k in range(n):
            terms = [A.cayley[x[i][j]][y[j][k]] for j in range(n) if x[i][j] is not None and y[j][k] is not None]
            assert len(terms) <= 1
            out[i][k] = terms[0] if terms else None
    return out


def test_multiply_matches_dense_product():
    A = cyclic_group(4)
    G = gl_n(A, 3)
    rnd = random.Random(3)
    elems = list(G.enumerate())
    for _ in range(100):
        g, h = rnd.choice(elems), rnd.choice(elems)
        assert G.to_dense(G.multiply(g, h)) == dense_product(A, G.to_dense(g), G.to_dense(h))


def test_check_rejects_bad_matrices():
    G = gl_n(idempotent_monoid(), 2)
    a = idempotent_monoid().element_names.index("a")
    with pytest.raises(ValueError):
        G.check(MonomialMatrix((0, 0), (0, 0)))
    with pytest.raises(ValueError):
        G.check(MonomialMatrix((0, 1), (0, a)))
    G.check(G.identity())


def test_enumeration_limit():
    with pytest.raises(ValueError):
        next(gl_n(cyclic_group(2), 9).enumerate())
    with pytest.raises(ValueError):
        gl_n(cyclic_group(2), -1)
