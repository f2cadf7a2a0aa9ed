"""Brute-force morphism counts, independent of any spectral theory.

A morphism from a presented monoid to ``D_k`` is an assignment of an element
of ``D_k`` to every generator that satisfies each relation.  Elements of
``D_k`` are coded ``0`` (the zero) and ``1..k-1`` (``g^(c-1)`` for a
generator ``g`` of the cyclic group of order ``k-1``), so a word evaluates
to zero iff one of its letters does and otherwise to a sum of exponents
modulo ``k-1``.  All assignments are checked exhaustively with numpy.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import SearchSpaceExceeded
from .monoid import (
    MonoidChart,
    Presentation,
    SplitMonoid,
    finite_presentation,
    presentation_of,
    saturate_with_generators,
)
from .scheme import F1Scheme, glue
from .spectrum import FinitePrime, PrimeIdeal, SplitPrime

MAX_GENERATORS = 8
MAX_K = 64
MAX_SEARCH_SPACE = 1 << 26


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("F1_THREADS", "1")))
    except ValueError:
        return 1


def _check_bounds(p: Presentation, k: int, max_gens: int, max_space: int) -> None:
    n = len(p.generators)
    if k < 2:
        raise ValueError("k must be at least 2")
    if n > max_gens:
        raise SearchSpaceExceeded(f"{n} generators exceed the oracle bound of {max_gens}")
    if k > MAX_K:
        raise SearchSpaceExceeded(f"k = {k} exceeds the oracle bound of {MAX_K}")
    if k**n > max_space:
        raise SearchSpaceExceeded(f"search space {k}^{n} exceeds {max_space}")


def _partition_counts(p: Presentation, k: int, first: int) -> np.ndarray:
    """Zero-pattern histogram of the valid assignments whose first generator has code ``first``."""
    n = len(p.generators)
    rest = k ** (n - 1)
    idx = np.arange(rest, dtype=np.int64)
    codes = [np.full(rest, first, dtype=np.int64)]
    for j in range(1, n):
        codes.append((idx // k ** (j - 1)) % k)
    is_zero = [c == 0 for c in codes]
    mod = k - 1

    def evaluate(vec):
        zero = np.zeros(rest, dtype=bool)
        expo = np.zeros(rest, dtype=np.int64)
        for j, e in enumerate(vec):
            if e:
                zero |= is_zero[j]
                expo += e * (codes[j] - 1)
        return zero, expo % mod

    valid = np.ones(rest, dtype=bool)
    for lhs, rhs in p.relations:
        zl, el = evaluate(lhs)
        zr, er = evaluate(rhs)
        valid &= (zl & zr) | (~zl & ~zr & (el == er))
    pattern = np.zeros(rest, dtype=np.int64)
    for j in range(n):
        pattern |= is_zero[j].astype(np.int64) << j
    return np.bincount(pattern[valid], minlength=1 << n)


def hom_counts_by_zero_pattern(
    p: Presentation,
    k: int,
    max_gens: int = MAX_GENERATORS,
    max_space: int = MAX_SEARCH_SPACE,
) -> dict[frozenset, int]:
    """Valid assignments grouped by the set of generators sent to zero."""
    p = p.with_explicit_zero()
    _check_bounds(p, k, max_gens, max_space)
    n = len(p.generators)
    if n == 0:
        return {frozenset(): 1}
    threads = _threads()
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            parts = list(pool.map(lambda c: _partition_counts(p, k, c), range(k)))
    else:
        parts = [_partition_counts(p, k, c) for c in range(k)]
    total = np.sum(parts, axis=0)
    return {
        frozenset(j for j in range(n) if mask >> j & 1): int(c)
        for mask, c in enumerate(total)
        if c
    }


def hom_count_oracle(p: Presentation, k: int, **bounds) -> int:
    """``#Hom(A, D_k)`` for the monoid ``A`` presented by ``p``, by exhaustion."""
    return sum(hom_counts_by_zero_pattern(p, k, **bounds).values())


# -- schemes -------------------------------------------------------------------------


@dataclass(frozen=True)
class ChartOracle:
    """A chart presentation plus the rule turning a zero pattern into a prime."""

    presentation: Presentation
    chart: MonoidChart
    generator_elements: tuple[int, ...] = ()

    def prime(self, zero_gens: frozenset) -> PrimeIdeal:
        if isinstance(self.chart, SplitMonoid):
            names = self.presentation.generators
            cone = frozenset(int(names[j][1:]) for j in zero_gens if names[j].startswith("t"))
            has_zero = any(names[j] == "0" for j in zero_gens)
            return SplitPrime(cone, has_zero)
        # The kernel of a map to D_k is the ideal generated by the generators
        # sent to zero, since D_k has no zero divisors.
        m = self.chart
        mask = 0
        for j in zero_gens:
            g = self.generator_elements[j]
            for a in range(m.size):
                mask |= 1 << m.cayley[a][g]
        return FinitePrime(mask)


def chart_oracle(chart: MonoidChart, presentation: Presentation | None = None) -> ChartOracle:
    if isinstance(chart, SplitMonoid):
        return ChartOracle(presentation_of(chart), chart)
    if presentation is not None:
        m, gens = saturate_with_generators(presentation)
        if m != chart:
            raise ValueError("presentation does not saturate to the chart's Cayley table")
        return ChartOracle(presentation.with_explicit_zero(), chart, gens)
    p, gens = finite_presentation(chart)
    return ChartOracle(p, chart, gens)


def scheme_oracle_count(x: F1Scheme, k: int, **bounds) -> int:
    """``#Hom(spec D_k, X)`` from chart-wise brute force.

    Each morphism is attributed to the first chart containing the image of
    the closed point, so no morphism is counted twice and no stalk data is
    used.
    """
    home: dict[tuple[int, PrimeIdeal], int] = {}
    for gp in glue(x):
        first = min(p.chart for p in gp.members)
        for p in gp.members:
            home[(p.chart, p.prime)] = first
    total = 0
    presentations = x.presentations or (None,) * len(x.charts)
    for i, chart in enumerate(x.charts):
        orc = chart_oracle(chart, presentations[i])
        for zero_gens, count in hom_counts_by_zero_pattern(orc.presentation, k, **bounds).items():
            if home[(i, orc.prime(zero_gens))] == i:
                total += count
    return total
