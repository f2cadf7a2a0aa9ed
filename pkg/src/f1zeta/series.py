"""Truncated power series with exact rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence


@dataclass(frozen=True)
class RationalSeries:
    """``c_0 + c_1 T + ... + c_M T^M``, known exactly up to order ``M``."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series needs at least the constant term")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, c, order: int) -> RationalSeries:
        return cls((Fraction(c),) + (Fraction(0),) * order)

    def __mul__(self, other: RationalSeries) -> RationalSeries:
        M = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return RationalSeries(tuple(sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(M + 1)))

    def __add__(self, other: RationalSeries) -> RationalSeries:
        M = min(self.order, other.order)
        return RationalSeries(tuple(self.coeffs[n] + other.coeffs[n] for n in range(M + 1)))

    def exp(self) -> RationalSeries:
        """``exp`` of a series with zero constant term.

        Uses ``n f_n = sum_{k=1}^n k l_k f_{n-k}``, which follows from ``F' = L' F``.
        """
        if self.coeffs[0] != 0:
            raise ValueError("exp needs a zero constant term")
        l = self.coeffs
        f = [Fraction(1)]
        for n in range(1, self.order + 1):
            f.append(sum(k * l[k] * f[n - k] for k in range(1, n + 1)) / n)
        return RationalSeries(tuple(f))

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if n == 0 else "T" if n == 1 else f"T^{n}"
            coef = str(c) if (c != 1 or n == 0) else ""
            terms.append(coef + mono)
        return " + ".join(terms) + f" + O(T^{self.order + 1})" if terms else f"O(T^{self.order + 1})"


def log_generating_series(counts: Sequence[int]) -> RationalSeries:
    """``sum_{n>=1} counts[n-1] T^n / n`` truncated at ``len(counts)``."""
    return RationalSeries((Fraction(0),) + tuple(Fraction(c, n) for n, c in enumerate(counts, start=1)))


def binomial_power(c: int, a: int, order: int) -> RationalSeries:
    """``(1 - cT)^(-a)`` for any integer ``a``, by direct expansion.

    Positive ``a``: coefficients ``C(a+n-1, n) c^n``.  Negative ``a``: the
    polynomial ``(1 - cT)^|a|``.
    """
    if a >= 0:
        coeffs = [Fraction(comb(a + n - 1, n) * c**n) if a else Fraction(int(n == 0)) for n in range(order + 1)]
    else:
        b = -a
        coeffs = [Fraction(comb(b, n) * (-c) ** n) if n <= b else Fraction(0) for n in range(order + 1)]
    return RationalSeries(tuple(coeffs))


def product(series: Iterable[RationalSeries], order: int) -> RationalSeries:
    out = RationalSeries.constant(1, order)
    for s in series:
        out = out * s
    return out
