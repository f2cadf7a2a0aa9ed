"""Prime spectra of monoid charts and the unit groups of their stalks."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Union

from .abelian import FgAbelianGroup
from .errors import NotPrime, SizeExceeded
from .monoid import FiniteMonoid, MonoidChart, SplitMonoid, completion_of_subset

MAX_FINITE_SIZE = 16
MAX_CONE_RANK = 20


@dataclass(frozen=True)
class FinitePrime:
    """Prime of a Cayley-table chart, as a bitset of element indices."""

    mask: int

    def elements(self) -> list[int]:
        return [i for i in range(self.mask.bit_length()) if self.mask >> i & 1]

    def sort_key(self):
        return (bin(self.mask).count("1"), self.mask)

    def label(self, chart: FiniteMonoid | None = None) -> str:
        names = chart.element_names if chart is not None else None
        items = [names[i] if names else str(i) for i in self.elements()]
        return "{" + ", ".join(items) + "}"


@dataclass(frozen=True)
class SplitPrime:
    """Prime of a split chart: the cone coordinates it contains, plus the zero flag."""

    cone: frozenset = frozenset()
    zero: bool = False

    def __post_init__(self):
        object.__setattr__(self, "cone", frozenset(self.cone))

    def sort_key(self):
        return (int(self.zero) + len(self.cone), sum(1 << j for j in self.cone))

    def label(self, chart: SplitMonoid | None = None) -> str:
        items = ([ZERO_LABEL] if self.zero else []) + [f"t{j}" for j in sorted(self.cone)]
        return "{" + ", ".join(items) + "}"


ZERO_LABEL = "0"
PrimeIdeal = Union[FinitePrime, SplitPrime]


def _masks(m: FiniteMonoid):
    n = m.size
    divisors = [0] * n  # divisors[x]: mask of y with y*z = x for some z
    for y in range(n):
        for z in range(n):
            divisors[m.cayley[y][z]] |= 1 << y
    return divisors


def is_face(m: FiniteMonoid, face_mask: int) -> bool:
    """``face_mask`` contains 1 and is closed under products and divisors."""
    if not face_mask >> m.identity & 1:
        return False
    members = [i for i in range(m.size) if face_mask >> i & 1]
    divisors = _masks(m)
    if any(divisors[x] & ~face_mask for x in members):
        return False
    return all(face_mask >> m.cayley[a][b] & 1 for a in members for b in members)


def spectrum_finite(m: FiniteMonoid, max_size: int = MAX_FINITE_SIZE) -> list[FinitePrime]:
    """All primes of a Cayley-table monoid, by direct subset enumeration."""
    n = m.size
    if n > max_size:
        raise SizeExceeded(f"spectrum enumeration is limited to {max_size} elements, got {n}")
    full = (1 << n) - 1
    divisors = _masks(m)
    e_bit = 1 << m.identity
    others = [i for i in range(n) if i != m.identity]
    primes = []
    for bits in range(1 << len(others)):
        face = e_bit
        for k, x in enumerate(others):
            if bits >> k & 1:
                face |= 1 << x
        members = [i for i in range(n) if face >> i & 1]
        if any(divisors[x] & ~face for x in members):
            continue
        if all(face >> m.cayley[a][b] & 1 for a in members for b in members):
            primes.append(FinitePrime(full & ~face))
    return sorted(primes, key=FinitePrime.sort_key)


def spectrum_split(s: SplitMonoid, max_cone: int = MAX_CONE_RANK) -> list[SplitPrime]:
    if s.cone_rank > max_cone:
        raise SizeExceeded(f"split spectra are limited to {max_cone} cone coordinates")
    subsets = [frozenset(c) for k in range(s.cone_rank + 1) for c in combinations(range(s.cone_rank), k)]
    if s.has_zero:
        primes = [SplitPrime()] + [SplitPrime(c, True) for c in subsets]
    else:
        primes = [SplitPrime(c) for c in subsets]
    return sorted(primes, key=SplitPrime.sort_key)


def spectrum(chart: MonoidChart) -> list[PrimeIdeal]:
    if isinstance(chart, FiniteMonoid):
        return spectrum_finite(chart)
    return spectrum_split(chart)


def stalk_units(chart: MonoidChart, p: PrimeIdeal) -> FgAbelianGroup:
    """``Quot(S_p)``, the unit group of the stalk at ``p``."""
    if isinstance(chart, FiniteMonoid):
        if not isinstance(p, FinitePrime):
            raise NotPrime(f"{p!r} is not a prime of a Cayley-table chart")
        face = ((1 << chart.size) - 1) & ~p.mask
        if p.mask >> chart.size or not is_face(chart, face):
            raise NotPrime(f"{p.label(chart)} is not a prime ideal of {chart}")
        return completion_of_subset(chart, [i for i in range(chart.size) if face >> i & 1])
    if not isinstance(p, SplitPrime) or any(not 0 <= j < chart.cone_rank for j in p.cone):
        raise NotPrime(f"{p!r} is not a prime of {chart}")
    if p.zero and not chart.has_zero:
        raise NotPrime(f"{chart} has no zero")
    if chart.has_zero and not p.zero:
        if p.cone:
            raise NotPrime("a prime containing cone coordinates must contain the zero")
        return FgAbelianGroup()
    return FgAbelianGroup(chart.free_rank + chart.cone_rank - len(p.cone), chart.torsion)
