from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from f1zeta.abelian import FgAbelianGroup
from f1zeta.errors import IncompatibleGluing, NotPrime, SizeExceeded
from f1zeta.monoid import (
    FiniteMonoid,
    SplitMonoid,
    cyclic_group,
    d_monoid,
    group_completion_finite,
    group_product,
    idempotent_monoid,
    idempotents,
    trivial_monoid,
)
from f1zeta.scheme import (
    F1Scheme,
    affine_space,
    glue,
    mu,
    proj_space,
    scheme_exponent,
    scheme_rank,
    spec,
    torus,
)
from f1zeta.spectrum import (
    FinitePrime,
    SplitPrime,
    spectrum,
    spectrum_finite,
    spectrum_split,
    stalk_units,
)
from small_monoids import small_commutative_monoids


def names(m, primes):
    return [[m.element_names[x] for x in p.elements()] for p in primes]


def test_spectrum_finite_examples():
    assert names(trivial_monoid(), spectrum_finite(trivial_monoid())) == [[]]
    assert names(d_monoid(5), spectrum_finite(d_monoid(5))) == [[], ["0"]]
    m = idempotent_monoid()
    assert names(m, spectrum_finite(m)) == [[], ["a"]]


def test_spectrum_split_examples():
    assert spectrum_split(SplitMonoid(0, 1)) == [SplitPrime(), SplitPrime({0})]
    assert len(spectrum_split(SplitMonoid(0, 2))) == 4
    assert spectrum_split(SplitMonoid(0, 0, (4,), True)) == [SplitPrime(), SplitPrime(zero=True)]


def test_stalk_units_examples():
    line = SplitMonoid(0, 1)
    assert stalk_units(line, SplitPrime()) == FgAbelianGroup(1)
    assert stalk_units(line, SplitPrime({0})) == FgAbelianGroup()
    d5 = d_monoid(5)
    assert stalk_units(d5, spectrum_finite(d5)[1]) == FgAbelianGroup(0, (4,))


def test_stalk_units_rejects_non_prime():
    m = group_product(idempotent_monoid(), idempotent_monoid())
    with pytest.raises(NotPrime):
        # {a, b} without ab is not an ideal
        stalk_units(m, FinitePrime(0b0110))


def test_spectrum_finite_size_cap():
    with pytest.raises(SizeExceeded):
        spectrum_finite(cyclic_group(17))


def definitional_faces(m: FiniteMonoid) -> set[int]:
    """Complement masks that contain 1, are product-closed and divisor-closed."""
    out = set()
    for face in range(1 << m.size):
        elems = [x for x in range(m.size) if face >> x & 1]
        if not face >> m.identity & 1:
            continue
        if any(not face >> m.cayley[x][y] & 1 for x in elems for y in elems):
            continue
        if any(face >> m.cayley[x][y] & 1 and not (face >> x & 1 and face >> y & 1) for x in range(m.size) for y in range(m.size)):
            continue
        out.add(face)
    return out


def idempotent_faces(m: FiniteMonoid) -> set[int]:
    """Faces of a finite monoid are exactly the divisor sets of its idempotents."""
    out = set()
    for e in idempotents(m):
        out.add(sum(1 << x for x in range(m.size) if e in m.cayley[x]))
    return out


def monoids_up_to_eight():
    ms = list(small_commutative_monoids(4))
    ms += [d_monoid(k) for k in range(2, 9)] + [cyclic_group(n) for n in range(5, 9)]
    ms.append(group_product(idempotent_monoid(), idempotent_monoid()))
    ms.append(group_product(idempotent_monoid(), cyclic_group(2)))
    ms.append(group_product(idempotent_monoid(), cyclic_group(4)))
    ms.append(group_product(group_product(idempotent_monoid(), idempotent_monoid()), idempotent_monoid()))
    return ms


def test_face_duality():
    for m in monoids_up_to_eight():
        assert m.size <= 8
        full = (1 << m.size) - 1
        got = {full & ~p.mask for p in spectrum_finite(m)}
        assert got == definitional_faces(m) == idempotent_faces(m)


@pytest.mark.parametrize("k", range(2, 11))
def test_d_k_representations_agree(k):
    finite = d_monoid(k)
    split = SplitMonoid(0, 0, (k - 1,) if k > 2 else (), True)
    fp, sp = spectrum(finite), spectrum(split)
    assert len(fp) == len(sp) == 2
    assert [stalk_units(finite, p) for p in fp] == [stalk_units(split, p) for p in sp]


def test_empty_prime_and_generic_stalk():
    for m in small_commutative_monoids(4):
        primes = spectrum_finite(m)
        assert primes[0] == FinitePrime(0)
        if m.zero is None:
            assert stalk_units(m, primes[0]) == group_completion_finite(m)
    for s in [SplitMonoid(2, 1, (2, 4)), SplitMonoid(0, 3), SplitMonoid(1, 0, (3,))]:
        assert stalk_units(s, SplitPrime()) == FgAbelianGroup(s.free_rank + s.cone_rank, s.torsion)


def test_group_spectrum_is_a_point():
    for n in range(1, 9):
        assert len(spectrum(cyclic_group(n))) == 1
    assert len(spectrum(group_product(cyclic_group(2), cyclic_group(6)))) == 1
    assert len(spectrum(SplitMonoid(3, 0, (2,)))) == 1


def test_glue_single_chart():
    x = spec(SplitMonoid(0, 2))
    assert [p.rank for p in glue(x)] == [2, 1, 1, 0]


def test_proj_line_points():
    pts = glue(proj_space(1))
    assert len(pts) == 3 and sorted(p.rank for p in pts) == [0, 0, 1]


def test_proj_space_points():
    assert sorted(p.rank for p in glue(proj_space(2))) == [0, 0, 0, 1, 1, 1, 2]
    assert [p.rank for p in glue(proj_space(0))] == [0]
    assert len(glue(proj_space(3))) == 15


def test_builders():
    assert [p.rank for p in glue(affine_space(1))] == [1, 0]
    assert [p.rank for p in glue(torus(1))] == [1]
    pts = glue(mu(2))
    assert len(pts) == 1 and pts[0].rank == 0 and pts[0].stalk_units.invariant_factors == (2,)


def test_rank_and_exponent():
    assert (scheme_rank(affine_space(2)), scheme_exponent(affine_space(2))) == (2, 1)
    assert (scheme_rank(mu(6)), scheme_exponent(mu(6))) == (0, 6)
    assert (scheme_rank(proj_space(1)), scheme_exponent(proj_space(1))) == (1, 1)


def test_glue_incompatible_stalks():
    line = SplitMonoid(0, 1)
    x = F1Scheme((line, line), (((0, SplitPrime()), (1, SplitPrime({0}))),))
    with pytest.raises(IncompatibleGluing):
        glue(x)


def test_glue_same_chart_points_rejected():
    plane = SplitMonoid(0, 2)
    x = F1Scheme((plane,), (((0, SplitPrime({0})), (0, SplitPrime({1}))),))
    with pytest.raises(IncompatibleGluing):
        glue(x)


def test_glue_unknown_point():
    line = SplitMonoid(0, 1)
    x = F1Scheme((line, line), (((0, SplitPrime({3})), (1, SplitPrime())),))
    with pytest.raises(ValueError):
        glue(x)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.randoms(use_true_random=False))
def test_gluing_order_independent(n, rnd):
    x = proj_space(n)
    idents = list(x.identifications)
    rnd.shuffle(idents)
    flipped = [(b, a) if rnd.random() < 0.5 else (a, b) for a, b in idents]
    y = F1Scheme(x.charts, tuple(flipped), x.name)
    assert glue(y) == glue(x)
