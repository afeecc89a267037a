"""Projective Schur Q-functions and their combinatorial companions.

Builds the q_k from the generating series prod(1+x_i t)/prod(1-x_i t),
the pairs Q_{k,l}, the Pfaffian construction of Q_lambda, power sums,
the characteristic map on odd cycle types, odd-power-sum expansions,
the cancellation (supersymmetry) test, and shifted tableau counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterator

from . import linalg
from .algebra import (
    Polynomial,
    T_MINUS,
    T_PLUS,
    pfaffian,
    substitute,
)


@dataclass(frozen=True)
class StrictPartition:
    """Strictly decreasing positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        p = tuple(self.parts)
        object.__setattr__(self, "parts", p)
        if any(x <= 0 for x in p):
            raise ValueError(f"parts must be positive: {p}")
        if any(p[i] <= p[i + 1] for i in range(len(p) - 1)):
            raise ValueError(f"parts must strictly decrease: {p}")

    @staticmethod
    def parse(text: str) -> "StrictPartition":
        text = text.strip()
        if not text:
            return StrictPartition(())
        return StrictPartition(tuple(int(s) for s in text.split(",")))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.parts)


@dataclass(frozen=True)
class OddCycleType:
    """Weakly decreasing odd positive parts (cycle type with odd cycles)."""

    parts: tuple[int, ...]

    def __post_init__(self):
        p = tuple(sorted(self.parts, reverse=True))
        object.__setattr__(self, "parts", p)
        if any(x <= 0 or x % 2 == 0 for x in p):
            raise ValueError(f"parts must be odd and positive: {p}")

    @staticmethod
    def parse(text: str) -> "OddCycleType":
        text = text.strip()
        if not text:
            return OddCycleType(())
        return OddCycleType(tuple(int(s) for s in text.split(",")))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.parts)


def strict_partitions(weight: int, max_length: int | None = None) -> Iterator[StrictPartition]:
    """Strict partitions of the given weight, decreasing lexicographic."""

    def rec(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        if max_length is not None and len(prefix) >= max_length:
            return
        for part in range(min(cap, remaining), 0, -1):
            yield from rec(remaining - part, part - 1, prefix + (part,))

    for parts in rec(weight, weight, ()):
        yield StrictPartition(parts)


def partitions(weight: int, max_length: int | None = None) -> Iterator[tuple[int, ...]]:
    """Ordinary partitions of the given weight (weakly decreasing parts)."""

    def rec(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        if max_length is not None and len(prefix) >= max_length:
            return
        for part in range(min(cap, remaining), 0, -1):
            yield from rec(remaining - part, part, prefix + (part,))

    yield from rec(weight, weight, ())


def odd_cycle_types(weight: int, max_length: int | None = None) -> Iterator[OddCycleType]:
    for parts in partitions(weight, max_length):
        if all(p % 2 for p in parts):
            yield OddCycleType(parts)


# ---------------------------------------------------------------------------
# q_k and Q_lambda
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def q_series(n: int, maxdeg: int) -> tuple[Polynomial, ...]:
    """Coefficients q_0..q_maxdeg of prod(1+x_i t)/prod(1-x_i t)."""
    if n < 1 or maxdeg < 0:
        raise ValueError("need n >= 1 and maxdeg >= 0")
    coeffs = [Polynomial.constant(n, 1)] + [Polynomial.zero(n) for _ in range(maxdeg)]
    for i in range(1, n + 1):
        xi = Polynomial.variable(n, i)
        # multiply by (1 + x_i t)
        for k in range(maxdeg, 0, -1):
            coeffs[k] = coeffs[k] + xi * coeffs[k - 1]
        # multiply by 1/(1 - x_i t): c_k <- c_k + x_i * c_{k-1} (updated)
        for k in range(1, maxdeg + 1):
            coeffs[k] = coeffs[k] + xi * coeffs[k - 1]
    return tuple(coeffs)


def q_poly(k: int, n: int) -> Polynomial:
    return q_series(n, k)[k]


@lru_cache(maxsize=None)
def q_two(k: int, l: int, n: int) -> Polynomial:
    """Q_{k,l} = q_k q_l + 2 sum_p (-1)^p q_{k+p} q_{l-p}; Q_{k,0} = q_k.

    The alternating sign is what makes Q_{k,l} = -Q_{l,k} for k+l > 0.
    Q_{0,0} is 0, the value the skew Pfaffian matrices need.
    """
    if k < 0 or l < 0:
        raise ValueError("indices must be non-negative")
    if k == 0 and l == 0:
        return Polynomial.zero(n)
    if l == 0:
        return q_poly(k, n)
    if k == 0:
        return -q_poly(l, n)
    qs = q_series(n, k + l)
    total = qs[k] * qs[l]
    for p in range(1, l + 1):
        term = (qs[k + p] * qs[l - p]).scale(2)
        total = total + (term if p % 2 == 0 else -term)
    return total


@lru_cache(maxsize=None)
def schur_q(lam: StrictPartition, n: int) -> Polynomial:
    """Q_lambda via the Pfaffian of the matrix (Q_{lambda_i lambda_j}).

    Odd length is handled by bordering with a zero part, which turns the
    last column into (q_{lambda_i}) and keeps the matrix skew.
    """
    parts = list(lam.parts)
    if not parts:
        return Polynomial.constant(n, 1)
    if len(parts) == 1:
        return q_poly(parts[0], n)
    if len(parts) % 2:
        parts.append(0)
    rows = [[q_two(a, b, n) for b in parts] for a in parts]
    return pfaffian(rows, zero=Polynomial.zero(n), one=Polynomial.constant(n, 1))


# ---------------------------------------------------------------------------
# Power sums and the characteristic map
# ---------------------------------------------------------------------------


def power_sum(l: int, n: int) -> Polynomial:
    """p_l = sum_i x_i^l."""
    if l < 1:
        raise ValueError("power sum index must be >= 1")
    terms = {}
    for i in range(n):
        e = [0] * n
        e[i] = l
        terms[tuple(e)] = Fraction(1)
    return Polynomial(n, terms)


def power_sum_product(nu, n: int) -> Polynomial:
    out = Polynomial.constant(n, 1)
    for part in nu:
        out = out * power_sum(part, n)
    return out


def char_map(nu: OddCycleType, n: int) -> Polynomial:
    """2^{l(nu)} * p_nu, the image of an odd cycle type."""
    return power_sum_product(nu.parts, n).scale(Fraction(2) ** nu.length)


def monomial_symmetric(mu: tuple[int, ...], n: int) -> Polynomial:
    """m_mu: sum of all distinct monomials with exponent multiset mu."""
    if len(mu) > n:
        return Polynomial.zero(n)
    exps = list(mu) + [0] * (n - len(mu))
    terms = {}
    for perm in set(permutations(exps)):
        terms[perm] = Fraction(1)
    return Polynomial(n, terms)


class NotSymmetric(Exception):
    pass


class NotInSpan(Exception):
    """Polynomial is outside the span of odd power sums."""


def expand_in_power_sums(p: Polynomial, n: int, maxweight: int) -> dict[OddCycleType, Fraction]:
    """Exact coefficients c_nu with p = sum c_nu p_nu over odd cycle types.

    Solved degree by degree against the monomial expansions of the p_nu.
    """
    if not p.is_symmetric():
        raise NotSymmetric("input is not symmetric")
    if p.degree() > maxweight:
        raise ValueError("degree exceeds maxweight")
    result: dict[OddCycleType, Fraction] = {}
    by_degree: dict[int, Polynomial] = {}
    for m, c in p.terms.items():
        d = sum(m)
        by_degree[d] = by_degree.get(d, Polynomial.zero(n)) + Polynomial.monomial(n, m, c)
    for d, component in sorted(by_degree.items()):
        if d == 0:
            if component.constant_value():
                raise NotInSpan("nonzero constant term")
            continue
        nus = list(odd_cycle_types(d))
        basis = [power_sum_product(nu.parts, n) for nu in nus]
        monomials = sorted({m for b in basis for m in b.terms} | set(component.terms))
        rows = [[b.terms.get(m, Fraction(0)) for b in basis] for m in monomials]
        rhs = [component.terms.get(m, Fraction(0)) for m in monomials]
        try:
            coeffs = linalg.solve(rows, rhs)
        except linalg.InconsistentSystem as exc:
            raise NotInSpan(f"degree-{d} component not in the odd span") from exc
        for nu, c in zip(nus, coeffs):
            if c:
                result[nu] = c
    return result


def is_supersymmetric(p: Polynomial, n: int) -> bool:
    """True iff p(t, -t, x_3, ..) is independent of t.

    Requires a symmetric input; one substituted pair then suffices.
    """
    if not p.is_symmetric():
        raise NotSymmetric("input is not symmetric")
    if n < 2:
        return True
    sub = substitute(p, {1: T_PLUS, 2: T_MINUS})
    return sub.degree_in(sub.n) <= 0  # t is the last variable


# ---------------------------------------------------------------------------
# Shifted standard tableaux
# ---------------------------------------------------------------------------


def shifted_tableaux_count(lam: StrictPartition) -> int:
    """g_lambda = |lambda|! / prod(lambda_i!) * prod_{i<j} (l_i-l_j)/(l_i+l_j)."""
    parts = lam.parts
    value = Fraction(math.factorial(lam.weight))
    for p in parts:
        value /= math.factorial(p)
    for a in range(len(parts)):
        for b in range(a + 1, len(parts)):
            value *= Fraction(parts[a] - parts[b], parts[a] + parts[b])
    if value.denominator != 1:
        raise AssertionError(f"product formula not integral for {lam}")
    return int(value)


def shifted_tableaux_enumerate(lam: StrictPartition) -> int:
    """Exhaustive count of shifted standard tableaux (the slow oracle).

    Counts by peeling removable corners: cells whose removal leaves a
    shifted diagram of a strict partition.
    """

    @lru_cache(maxsize=None)
    def count(parts: tuple[int, ...]) -> int:
        if not parts:
            return 1
        total = 0
        for i, p in enumerate(parts):
            shrunk = parts[:i] + (p - 1,) + parts[i + 1 :]
            shrunk = tuple(x for x in shrunk if x > 0)
            ok = all(shrunk[a] > shrunk[a + 1] for a in range(len(shrunk) - 1))
            if ok and len(shrunk) in (len(parts), len(parts) - 1):
                total += count(shrunk)
        return total

    return count(lam.parts)
