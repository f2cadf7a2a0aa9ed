from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from f1zeta.abelian import FgAbelianGroup
from f1zeta.errors import CapExceeded
from f1zeta.monoid import (
    FiniteMonoid,
    Presentation,
    SplitMonoid,
    cyclic_group,
    d_monoid,
    finite_presentation,
    group_completion_finite,
    group_product,
    idempotent_monoid,
    idempotents,
    inverse,
    minimal_idempotent,
    presentation_of,
    saturate,
    saturate_with_generators,
    trivial_monoid,
    unit_elements,
    units,
    verify_monoid,
)
from small_monoids import isomorphic, small_commutative_monoids


def test_saturate_idempotent():
    m = saturate(Presentation(("a",), (((2,), (1,)),)))
    assert m.size == 2 and m.element_names == ("1", "a")


def test_saturate_cyclic():
    m = saturate(Presentation(("g",), (((3,), (0,)),)))
    assert m.size == 3 and isomorphic(m, cyclic_group(3))


def test_saturate_free_is_capped():
    with pytest.raises(CapExceeded):
        saturate(Presentation(("t",), ()), cap=100)


def test_saturate_with_zero_names_zero():
    m, gens = saturate_with_generators(Presentation(("g",), (((4,), (0,)),), has_zero=True))
    assert m.size == 5 and m.zero is not None and m.element_names[m.zero] == "0"
    assert isomorphic(m, d_monoid(5))
    assert gens[-1] == m.zero


def test_saturate_two_generators():
    # a^2 = a, b^2 = 1: {1, a, b, ab}
    m = saturate(Presentation(("a", "b"), (((2, 0), (1, 0)), ((0, 2), (0, 0)))))
    assert m.size == 4 and not verify_monoid(m)
    assert units(m) == FgAbelianGroup(0, (2,))


def test_saturate_relation_collapse():
    # a^2 = a and a*b = 1 forces a = 1 and then b = 1
    m = saturate(Presentation(("a", "b"), (((2, 0), (1, 0)), ((1, 1), (0, 0)))))
    assert m.size == 1


def test_verify_monoid_examples():
    assert verify_monoid(cyclic_group(2)) == []
    assert verify_monoid(d_monoid(5)) == []
    # a*a = b, a*b = a, b*b = a: (a*a)*b = a but a*(a*b) = b
    bad = FiniteMonoid(3, [[0, 1, 2], [1, 2, 1], [2, 1, 1]], 0)
    report = verify_monoid(bad)
    assert report and any("associativity" in line for line in report)


def test_verify_monoid_reports_noncommutative():
    bad = FiniteMonoid(3, [[0, 1, 2], [1, 1, 1], [2, 2, 2]], 0)
    assert any("commutativity" in line for line in verify_monoid(bad))


def test_units_examples():
    assert units(d_monoid(7)) == FgAbelianGroup(0, (6,))
    assert units(idempotent_monoid()) == FgAbelianGroup()
    assert units(group_product(cyclic_group(2), cyclic_group(4))) == FgAbelianGroup(0, (2, 4))


def test_idempotents_examples():
    assert idempotents(idempotent_monoid()) == [0, 1]
    assert idempotents(cyclic_group(3)) == [0]
    m = d_monoid(5)
    assert [m.element_names[x] for x in idempotents(m)] == ["1", "0"]


def test_group_completion_examples():
    assert group_completion_finite(idempotent_monoid()) == FgAbelianGroup()
    assert group_completion_finite(cyclic_group(6)) == FgAbelianGroup(0, (6,))
    for k in range(2, 11):
        assert group_completion_finite(d_monoid(k)) == FgAbelianGroup()


def test_inverse():
    m = cyclic_group(5)
    for x in range(5):
        assert m.cayley[x][inverse(m, x)] == m.identity
    with pytest.raises(ValueError):
        inverse(idempotent_monoid(), 1)


def test_presentation_of_examples():
    p = presentation_of(SplitMonoid(1, 0))
    assert p.generators == ("u0", "v0") and p.relations == (((1, 1), (0, 0)),)
    p = presentation_of(SplitMonoid(0, 2))
    assert p.generators == ("t0", "t1") and p.relations == ()
    p = presentation_of(SplitMonoid(0, 0, (3,), True))
    assert p.generators == ("g0", "0")
    m = saturate(p)
    assert m.size == 4 and isomorphic(m, d_monoid(4))


def test_split_monoid_validation():
    with pytest.raises(ValueError):
        SplitMonoid(0, 0, (4, 2))
    with pytest.raises(ValueError):
        SplitMonoid(-1, 0)
    assert SplitMonoid(2, 1, (2,)).unit_group == FgAbelianGroup(2, (2,))


@pytest.mark.parametrize(
    "torsion, zero, expected",
    [
        ((), False, trivial_monoid()),
        ((), True, d_monoid(2)),
        ((5,), False, cyclic_group(5)),
        ((6,), True, d_monoid(7)),
        ((2, 4), False, group_product(cyclic_group(2), cyclic_group(4))),
        ((2, 2), False, group_product(cyclic_group(2), cyclic_group(2))),
    ],
)
def test_saturate_presentation_of_finite_split(torsion, zero, expected):
    m = saturate(presentation_of(SplitMonoid(0, 0, torsion, zero)))
    assert isomorphic(m, expected)


def test_group_completion_trivial_with_zero_and_identity_on_groups():
    for m in small_commutative_monoids(4):
        g = group_completion_finite(m)
        if m.zero is not None:
            assert g == FgAbelianGroup()
        if len(unit_elements(m)) == m.size:
            assert g == units(m)


def is_cancellative(m: FiniteMonoid) -> bool:
    return all(len(set(row)) == m.size for row in m.cayley)


def units_survive(m: FiniteMonoid) -> bool:
    e = minimal_idempotent(m)
    return len({m.cayley[e][u] for u in unit_elements(m)}) == len(unit_elements(m))


def test_units_survive_group_completion_when_cancellative():
    for m in small_commutative_monoids(4):
        if is_cancellative(m):
            assert units_survive(m)


def test_units_can_die_without_a_zero():
    # u = 1 is a unit of order 2; {2, 3} is a group with identity 2 and 2 * 1 = 2.
    m = FiniteMonoid(4, [[0, 1, 2, 3], [1, 0, 2, 3], [2, 2, 2, 3], [3, 3, 3, 2]], 0)
    assert not verify_monoid(m) and m.zero is None
    assert units(m) == FgAbelianGroup(0, (2,))
    assert group_completion_finite(m) == FgAbelianGroup(0, (2,))
    assert not units_survive(m)


def test_finite_presentation_round_trip():
    for m in small_commutative_monoids(4):
        p, gens = finite_presentation(m)
        m2, gens2 = saturate_with_generators(p)
        assert isomorphic(m, m2)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 8), st.integers(1, 8))
def test_cyclic_products_saturate(a, b):
    p = Presentation(("x", "y"), (((a, 0), (0, 0)), ((0, b), (0, 0))))
    m = saturate(p)
    assert m.size == a * b
    assert units(m) == FgAbelianGroup.from_cyclic_orders([a, b])
