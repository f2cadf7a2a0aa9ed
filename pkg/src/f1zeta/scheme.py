"""F1-schemes of finite type glued from monoid charts at the level of points."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import lcm

from .abelian import FgAbelianGroup
from .errors import IncompatibleGluing
from .monoid import (
    MonoidChart,
    Presentation,
    SplitMonoid,
    cyclic_group,
    d_monoid,
    idempotent_monoid,
)
from .spectrum import PrimeIdeal, SplitPrime, spectrum, stalk_units


@dataclass(frozen=True)
class ChartPoint:
    chart: int
    prime: PrimeIdeal
    stalk_units: FgAbelianGroup


@dataclass(frozen=True)
class GlobalPoint:
    members: tuple[ChartPoint, ...]
    stalk_units: FgAbelianGroup

    @property
    def rank(self) -> int:
        return self.stalk_units.rank

    @property
    def charts(self) -> frozenset:
        return frozenset(p.chart for p in self.members)


PointRef = tuple  # (chart index, prime)


@dataclass(frozen=True)
class F1Scheme:
    charts: tuple[MonoidChart, ...]
    identifications: tuple[tuple[PointRef, PointRef], ...] = ()
    name: str = "X"
    chart_names: tuple[str, ...] = ()
    # Optional presentation per chart, used only by the brute-force oracle.
    presentations: tuple[Presentation | None, ...] = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "charts", tuple(self.charts))
        object.__setattr__(self, "identifications", tuple((tuple(a), tuple(b)) for a, b in self.identifications))
        if not self.chart_names:
            object.__setattr__(self, "chart_names", tuple(f"U{i}" for i in range(len(self.charts))))
        if len(self.chart_names) != len(self.charts):
            raise ValueError("one chart name per chart")


def chart_points(x: F1Scheme) -> list[ChartPoint]:
    """Every point of every chart, in canonical order (chart id, then prime)."""
    return [
        ChartPoint(i, p, stalk_units(chart, p))
        for i, chart in enumerate(x.charts)
        for p in spectrum(chart)
    ]


def glue(x: F1Scheme) -> list[GlobalPoint]:
    """Union-find closure of the identifications; one global point per class."""
    points = chart_points(x)
    index = {(p.chart, p.prime): k for k, p in enumerate(points)}
    parent = list(range(len(points)))

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    for a, b in x.identifications:
        try:
            ka, kb = index[a], index[b]
        except KeyError as exc:
            raise ValueError(f"identification references an unknown point: {exc.args[0]!r}") from None
        if points[ka].stalk_units != points[kb].stalk_units:
            raise IncompatibleGluing(
                f"cannot glue {_describe(x, points[ka])} ({points[ka].stalk_units}) "
                f"to {_describe(x, points[kb])} ({points[kb].stalk_units})",
                pair=(a, b),
            )
        ra, rb = find(ka), find(kb)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    classes: dict[int, list[ChartPoint]] = {}
    for k, p in enumerate(points):
        classes.setdefault(find(k), []).append(p)
    result = []
    for root in sorted(classes):
        members = classes[root]
        seen = {}
        for p in members:
            if p.chart in seen:
                raise IncompatibleGluing(
                    f"two distinct points of chart {x.chart_names[p.chart]} are identified: "
                    f"{_describe(x, seen[p.chart])} and {_describe(x, p)}",
                    pair=((p.chart, seen[p.chart].prime), (p.chart, p.prime)),
                )
            seen[p.chart] = p
        result.append(GlobalPoint(tuple(members), members[0].stalk_units))
    return result


def _describe(x: F1Scheme, p: ChartPoint) -> str:
    return f"{x.chart_names[p.chart]}.p{p.prime.label(x.charts[p.chart])}"


def scheme_rank(x: F1Scheme) -> int:
    return max((p.rank for p in glue(x)), default=0)


def scheme_exponent(x: F1Scheme) -> int:
    return lcm(1, *(p.stalk_units.exponent for p in glue(x)))


# -- builders ----------------------------------------------------------------------


def affine_space(n: int) -> F1Scheme:
    return F1Scheme((SplitMonoid(0, n),), name=f"A{n}")


def point() -> F1Scheme:
    """``spec F1``, the spectrum of the trivial monoid."""
    return F1Scheme((SplitMonoid(),), name="spec F1")


def torus(k: int) -> F1Scheme:
    return F1Scheme((SplitMonoid(k, 0),), name=f"Gm{k}" if k != 1 else "Gm")


def mu(n: int) -> F1Scheme:
    return F1Scheme((cyclic_group(n),), name=f"mu{n}")


def d_scheme(k: int) -> F1Scheme:
    return F1Scheme((d_monoid(k),), name=f"spec D{k}")


def spec(chart: MonoidChart, name: str = "X", presentation: Presentation | None = None) -> F1Scheme:
    return F1Scheme((chart,), name=name, presentations=(presentation,))


def proj_space(n: int) -> F1Scheme:
    """Projective ``n``-space from its ``n+1`` affine charts.

    Chart ``i`` has coordinates ``x_j/x_i`` for ``j != i``, listed in
    increasing ``j``.  The point with non-vanishing homogeneous coordinates
    ``J`` (``i`` in ``J``) is the prime of chart ``i`` containing exactly the
    coordinates outside ``J``.
    """
    if not 0 <= n <= 6:
        raise ValueError("proj_space supports 0 <= n <= 6")
    coords = [[j for j in range(n + 1) if j != i] for i in range(n + 1)]

    def prime_for(i, J):
        return SplitPrime(frozenset(k for k, j in enumerate(coords[i]) if j not in J))

    idents = []
    for size in range(2, n + 2):
        for J in combinations(range(n + 1), size):
            for a, b in zip(J, J[1:]):
                idents.append(((a, prime_for(a, J)), (b, prime_for(b, J))))
    return F1Scheme(
        tuple(SplitMonoid(0, n) for _ in range(n + 1)),
        tuple(idents),
        name=f"P{n}",
    )


def idempotent_scheme() -> F1Scheme:
    return F1Scheme((idempotent_monoid(),), name="spec{1,a}")


def zoo() -> list[F1Scheme]:
    """The reference collection of schemes used by the sweeps."""
    schemes = [point()]
    schemes += [affine_space(n) for n in range(1, 5)]
    schemes += [proj_space(n) for n in range(1, 4)]
    schemes += [torus(1), torus(2)]
    schemes += [mu(n) for n in (2, 3, 4, 6)]
    schemes += [d_scheme(k) for k in range(2, 11)]
    schemes.append(idempotent_scheme())
    return schemes
