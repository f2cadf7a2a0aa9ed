"""Zeta-polynomials, point counts and the zeta functions built from them.

Every morphism ``spec D_k -> X`` sends the closed point to a point ``p`` of
``X`` and is then a homomorphism from the stalk unit group at ``p`` to the
cyclic group of order ``k-1``.  Counting those per point gives both the
exact count for every ``k`` and, when ``k-1`` is prime to the exponent,
the zeta-polynomial ``N(x) = sum_p (x-1)^rank(p)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb, gcd

from .abelian import hom_count_cyclic
from .errors import InvalidPrime, NumericDomain
from .scheme import F1Scheme, glue, scheme_exponent
from .series import RationalSeries, binomial_power, log_generating_series, product


@dataclass(frozen=True)
class ZetaPolynomial:
    coeffs_monomial: tuple[int, ...]
    coeffs_shifted: tuple[int, ...]  # one rank per global point, sorted

    @classmethod
    def from_ranks(cls, ranks) -> ZetaPolynomial:
        ranks = tuple(sorted(ranks))
        deg = max(ranks, default=0)
        coeffs = [0] * (deg + 1)
        for r in ranks:
            # (x - 1)^r = sum_i C(r, i) x^i (-1)^(r-i)
            for i in range(r + 1):
                coeffs[i] += comb(r, i) * (-1) ** (r - i)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        return cls(tuple(coeffs), ranks)

    @property
    def degree(self) -> int:
        return len(self.coeffs_monomial) - 1 if any(self.coeffs_monomial) else -1

    def __call__(self, x):
        return sum(a * x**i for i, a in enumerate(self.coeffs_monomial))

    def __str__(self) -> str:
        return render_polynomial(self.coeffs_monomial)

    def shifted_str(self) -> str:
        counts: dict[int, int] = {}
        for r in self.coeffs_shifted:
            counts[r] = counts.get(r, 0) + 1
        coeffs = [counts.get(r, 0) for r in range(max(counts, default=0) + 1)]
        return render_polynomial(coeffs, var="(x-1)")


def render_polynomial(coeffs, var: str = "x") -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        a = coeffs[i]
        if a == 0:
            continue
        mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
        mag = abs(a)
        body = str(mag) if i == 0 else (mono if mag == 1 else f"{mag}{mono}")
        if not terms:
            terms.append(body if a > 0 else f"-{body}")
        else:
            terms.append(("+ " if a > 0 else "- ") + body)
    return " ".join(terms) if terms else "0"


@dataclass(frozen=True)
class ZetaFactored:
    factors: tuple[tuple[int, int], ...]  # (root k, exponent a_k): prod (s-k)^a_k

    def __call__(self, s: float) -> float:
        return math.prod((s - k) ** a for k, a in self.factors)

    def __str__(self) -> str:
        out = []
        for k, a in self.factors:
            base = "s" if k == 0 else f"(s-{k})"
            out.append(base if a == 1 else f"{base}^{a}")
        return "".join(out) if out else "1"


@dataclass(frozen=True)
class LocalZeta:
    prime: int
    factors: tuple[tuple[int, int], ...]  # (level k, multiplicity a_k): prod (1 - p^k T)^(-a_k)

    def series(self, order: int) -> RationalSeries:
        return product((binomial_power(self.prime**k, a, order) for k, a in self.factors), order)

    def __str__(self) -> str:
        out = []
        for k, a in self.factors:
            c = self.prime**k
            base = "(1-T)" if c == 1 else f"(1-{c}T)"
            e = -a
            out.append(base if e == 1 else f"{base}^{e}")
        return "".join(out) if out else "1"


def zeta_polynomial(x: F1Scheme) -> ZetaPolynomial:
    return ZetaPolynomial.from_ranks(p.rank for p in glue(x))


def exact_count(x: F1Scheme, q: int) -> int:
    """``#Hom(spec D_q, X)``; the number of ``F_q``-points when ``q`` is a prime power."""
    if q < 2:
        raise ValueError("q must be at least 2")
    return sum(hom_count_cyclic(p.stalk_units, q - 1) for p in glue(x))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = next(d for d in range(2, q + 1) if q % d == 0)
    while q % p == 0:
        q //= p
    return q == 1


def prime_powers(bound: int, start: int = 2) -> list[int]:
    return [q for q in range(start, bound + 1) if is_prime_power(q)]


def power_of_two_witnesses(e: int, count: int = 5) -> list[int]:
    """Powers ``2^n`` with ``2^n = 2 (mod m)``, ``m`` the odd part of ``e``.

    ``2^n - 1`` is then odd and ``1 (mod m)``, hence prime to ``e``.
    """
    if e < 1:
        raise ValueError("e must be positive")
    m = e
    while m % 2 == 0:
        m //= 2
    out, n = [], 1
    while len(out) < count:
        if pow(2, n, m) == 2 % m:
            out.append(2**n)
        n += 1
    return out


def coprime_qs(e: int, bound: int) -> list[int]:
    """Prime powers ``q <= bound`` with ``gcd(q-1, e) = 1``, plus the least ``2^n`` witness."""
    if e < 1:
        raise ValueError("e must be positive")
    qs = {q for q in prime_powers(bound) if gcd(q - 1, e) == 1}
    qs.add(power_of_two_witnesses(e, 1)[0])
    return sorted(qs)


def euler_char(x: F1Scheme) -> int:
    return zeta_polynomial(x)(1)


def zeta_factored(x: F1Scheme) -> ZetaFactored:
    a = zeta_polynomial(x).coeffs_monomial
    return ZetaFactored(tuple((k, ak) for k, ak in enumerate(a) if ak))


def betti(x: F1Scheme) -> list[int]:
    """Formal Betti numbers ``[a_0, 0, a_1, 0, ..., a_n]``.

    Meaningful only when the ascended scheme is smooth and projective; that
    is not checked.
    """
    out = []
    for ak in zeta_polynomial(x).coeffs_monomial:
        out += [ak, 0]
    return out[:-1]


def weil_local_zeta(x: F1Scheme, p: int) -> LocalZeta:
    if not is_prime(p):
        raise InvalidPrime(f"{p} is not prime")
    a = zeta_polynomial(x).coeffs_monomial
    return LocalZeta(p, tuple((k, ak) for k, ak in enumerate(a) if ak))


def weil_series(x: F1Scheme, p: int, M: int) -> RationalSeries:
    """``exp(sum_{n=1}^M T^n/n * #X(F_{p^n}))`` with exact counts."""
    counts = [exact_count(x, p**n) for n in range(1, M + 1)]
    return log_generating_series(counts).exp()


@dataclass(frozen=True)
class WeilReport:
    status: str  # "Pass", "Fail" or "Skipped"
    n: int | None = None  # failing order, or the n that broke coprimality
    series: RationalSeries | None = None
    expected: RationalSeries | None = None

    @property
    def passed(self) -> bool:
        return self.status == "Pass"


def weil_consistency(x: F1Scheme, p: int, M: int) -> WeilReport:
    e = scheme_exponent(x)
    for n in range(1, M + 1):
        if gcd(p**n - 1, e) != 1:
            return WeilReport("Skipped", n)
    got = weil_series(x, p, M)
    want = weil_local_zeta(x, p).series(M)
    for n, (a, b) in enumerate(zip(got.coeffs, want.coeffs)):
        if a != b:
            return WeilReport("Fail", n, got, want)
    return WeilReport("Pass", None, got, want)


def soule_limit(x: F1Scheme, s: float, eps: float = 1e-4) -> float:
    """Numerical ``lim_{p->1} Z(p, p^-s)^-1 / (p-1)^N(1)``.

    Evaluated at ``p = 1 + eps`` and ``1 + eps/2`` and combined with one
    Richardson step, which cancels the linear error term.
    """
    if not 0 < eps <= 0.01:
        raise ValueError("eps must lie in (0, 0.01]")
    a = zeta_polynomial(x).coeffs_monomial
    chi = sum(a)

    def f(h):
        lp = math.log1p(h)
        value = 1.0
        try:
            for k, ak in enumerate(a):
                if ak:
                    # 1 - p^(k-s), computed without cancellation
                    value *= (-math.expm1((k - s) * lp)) ** ak
            value /= h**chi
        except (ZeroDivisionError, OverflowError) as exc:
            raise NumericDomain(f"zeta quotient undefined at s={s}: {exc}") from None
        if not math.isfinite(value):
            raise NumericDomain(f"non-finite zeta quotient at s={s}")
        return value

    return 2 * f(eps / 2) - f(eps)


def count_table(x: F1Scheme, qs) -> list[dict]:
    N = zeta_polynomial(x)
    e = scheme_exponent(x)
    return [
        {"q": q, "count": exact_count(x, q), "N(q)": N(q), "coprime": gcd(q - 1, e) == 1}
        for q in qs
    ]

