"""Exact arithmetic substrate.

Sparse multivariate polynomials over arbitrary-precision rationals,
rational functions whose denominators stay factored over the family
{x_i, x_i - x_j, x_i + x_j}, and a generic Pfaffian.

Variable indices are 1-based throughout the public API.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

Scalar = Union[int, Fraction]

# sentinel values for substitute()
T_PLUS = "t"
T_MINUS = "-t"


class VariableCountMismatch(ValueError):
    """Operands live in rings with different variable counts."""


def grevlex_key(exponents: tuple[int, ...]):
    """Sort key; larger key = larger monomial in graded reverse lex."""
    return (sum(exponents), tuple(-e for e in reversed(exponents)))


class Polynomial:
    """Sparse polynomial in x_1..x_n over Fraction.

    The term map never stores zero coefficients.  Instances are treated
    as immutable; no method mutates self.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[tuple[int, ...], Scalar]):
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in terms.items():
            if len(exps) != n:
                raise VariableCountMismatch(
                    f"monomial {exps} has {len(exps)} entries, expected {n}"
                )
            c = Fraction(coeff)
            if c:
                clean[tuple(exps)] = c
        self.n = n
        self.terms = clean

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero(n: int) -> "Polynomial":
        return Polynomial(n, {})

    @staticmethod
    def constant(n: int, c: Scalar) -> "Polynomial":
        return Polynomial(n, {(0,) * n: Fraction(c)})

    @staticmethod
    def variable(n: int, i: int) -> "Polynomial":
        if not 1 <= i <= n:
            raise IndexError(f"variable index {i} out of range 1..{n}")
        exps = [0] * n
        exps[i - 1] = 1
        return Polynomial(n, {tuple(exps): Fraction(1)})

    @staticmethod
    def monomial(n: int, exps: Iterable[int], coeff: Scalar = 1) -> "Polynomial":
        return Polynomial(n, {tuple(exps): Fraction(coeff)})

    # -- predicates --------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.terms[(0,) * self.n]

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial (reporting only)."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, i: int) -> int:
        if not self.terms:
            return -1
        return max(e[i - 1] for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def leading_term(self) -> tuple[tuple[int, ...], Fraction]:
        """Grevlex-leading (monomial, coefficient); error on zero."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=grevlex_key)
        return m, self.terms[m]

    # -- arithmetic --------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.n != other.n:
            raise VariableCountMismatch(f"{self.n} vs {other.n} variables")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, Fraction(0)) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        out = Polynomial.__new__(Polynomial)
        out.n = self.n
        out.terms = terms
        return out

    def __neg__(self) -> "Polynomial":
        out = Polynomial.__new__(Polynomial)
        out.n = self.n
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = terms.get(m, Fraction(0)) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        out = Polynomial.__new__(Polynomial)
        out.n = self.n
        out.terms = terms
        return out

    def scale(self, c: Scalar) -> "Polynomial":
        c = Fraction(c)
        out = Polynomial.__new__(Polynomial)
        out.n = self.n
        out.terms = {m: v * c for m, v in self.terms.items()} if c else {}
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    # -- calculus ----------------------------------------------------

    def partial(self, i: int) -> "Polynomial":
        """d/dx_i."""
        if not 1 <= i <= self.n:
            raise IndexError(f"variable index {i} out of range 1..{self.n}")
        terms: dict[tuple[int, ...], Fraction] = {}
        for m, c in self.terms.items():
            e = m[i - 1]
            if e:
                new = list(m)
                new[i - 1] = e - 1
                terms[tuple(new)] = c * e
        return Polynomial(self.n, terms)

    def euler(self, i: int) -> "Polynomial":
        """x_i * d/dx_i."""
        if not 1 <= i <= self.n:
            raise IndexError(f"variable index {i} out of range 1..{self.n}")
        terms = {m: c * m[i - 1] for m, c in self.terms.items() if m[i - 1]}
        return Polynomial(self.n, terms)

    # -- evaluation / substitution -----------------------------------

    def eval(self, point: Iterable[Scalar]) -> Fraction:
        values = [Fraction(v) for v in point]
        if len(values) != self.n:
            raise VariableCountMismatch("point length mismatch")
        total = Fraction(0)
        for m, c in self.terms.items():
            prod = c
            for v, e in zip(values, m):
                if e:
                    prod *= v**e
            total += prod
        return total

    def permute_variables(self, perm: Iterable[int]) -> "Polynomial":
        """Apply x_i -> x_{perm[i-1]} (perm is 1-based image list)."""
        perm = list(perm)
        terms: dict[tuple[int, ...], Fraction] = {}
        for m, c in self.terms.items():
            new = [0] * self.n
            for pos, e in enumerate(m):
                new[perm[pos] - 1] += e
            key = tuple(new)
            terms[key] = terms.get(key, Fraction(0)) + c
        return Polynomial(self.n, terms)

    def is_symmetric(self) -> bool:
        for i in range(1, self.n):
            perm = list(range(1, self.n + 1))
            perm[i - 1], perm[i] = perm[i], perm[i - 1]
            if self.permute_variables(perm) != self:
                return False
        return True

    # -- serialization -----------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def to_text(self, names: Optional[list[str]] = None) -> str:
        if not self.terms:
            return "0"
        if names is None:
            names = [f"x{i}" for i in range(1, self.n + 1)]
        pieces = []
        for m, c in self.sorted_terms():
            factors = [
                names[k] if e == 1 else f"{names[k]}^{e}"
                for k, e in enumerate(m)
                if e
            ]
            mono = "*".join(factors)
            coeff = format_fraction(abs(c))
            if mono:
                body = mono if abs(c) == 1 else f"{coeff}*{mono}"
            else:
                body = coeff
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"exp": list(m), "coeff": format_fraction(c)}
                for m, c in self.sorted_terms()
            ],
        }

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()})"


def format_fraction(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def substitute(p: Polynomial, assignment: Mapping[int, object]) -> Polynomial:
    """Substitute values for some variables of p.

    assignment maps 1-based variable indices to a Fraction/int, or to the
    sentinels T_PLUS / T_MINUS.  The result lives in the ring over the
    unassigned variables (original order) followed by t as the last
    variable when any t-sentinel is used.
    """
    for i in assignment:
        if not 1 <= i <= p.n:
            raise IndexError(f"assigned variable {i} out of range 1..{p.n}")
    uses_t = any(v in (T_PLUS, T_MINUS) for v in assignment.values())
    remaining = [i for i in range(1, p.n + 1) if i not in assignment]
    n_out = len(remaining) + (1 if uses_t else 0)
    pos = {i: k for k, i in enumerate(remaining)}
    terms: dict[tuple[int, ...], Fraction] = {}
    for m, c in p.terms.items():
        new = [0] * n_out
        coeff = c
        for i in range(1, p.n + 1):
            e = m[i - 1]
            if i in pos:
                new[pos[i]] = e
            else:
                v = assignment[i]
                if v == T_PLUS:
                    new[-1] += e
                elif v == T_MINUS:
                    new[-1] += e
                    if e % 2:
                        coeff = -coeff
                else:
                    if e:
                        coeff *= Fraction(v) ** e
            if not coeff:
                break
        if coeff:
            key = tuple(new)
            s = terms.get(key, Fraction(0)) + coeff
            if s:
                terms[key] = s
            else:
                del terms[key]
    return Polynomial(n_out, terms)


# ---------------------------------------------------------------------------
# Factored denominators
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Factor:
    """Denominator atom: x_i ('var'), x_i - x_j ('diff') or x_i + x_j ('sum').

    For diff/sum the indices are stored with i < j; a swapped difference
    is recorded by the caller negating the overall sign.
    """

    kind: str
    i: int
    j: int = 0

    def __post_init__(self):
        if self.kind not in ("var", "diff", "sum"):
            raise ValueError(f"bad factor kind {self.kind!r}")
        if self.kind != "var" and not self.i < self.j:
            raise ValueError("diff/sum factors require i < j")

    def as_polynomial(self, n: int) -> Polynomial:
        if self.kind == "var":
            return Polynomial.variable(n, self.i)
        xi = Polynomial.variable(n, self.i)
        xj = Polynomial.variable(n, self.j)
        return xi - xj if self.kind == "diff" else xi + xj

    def __str__(self) -> str:
        if self.kind == "var":
            return f"x{self.i}"
        op = "-" if self.kind == "diff" else "+"
        return f"(x{self.i}{op}x{self.j})"


def var_factor(i: int) -> Factor:
    return Factor("var", i)


def diff_factor(i: int, j: int) -> tuple[Factor, int]:
    """Factor for x_i - x_j plus the sign making it canonical (i < j)."""
    if i < j:
        return Factor("diff", i, j), 1
    return Factor("diff", j, i), -1


def sum_factor(i: int, j: int) -> Factor:
    return Factor("sum", min(i, j), max(i, j))


class NotDivisible(Exception):
    """exact_divide remainder is nonzero (a normal outcome, not a bug)."""


def exact_divide(p: Polynomial, f: Factor) -> Polynomial:
    """Divide p by the factor polynomial exactly, or raise NotDivisible."""
    if p.is_zero():
        return p
    if f.kind == "var":
        k = f.i - 1
        terms = {}
        for m, c in p.terms.items():
            if m[k] == 0:
                raise NotDivisible(str(f))
            new = list(m)
            new[k] -= 1
            terms[tuple(new)] = c
        return Polynomial(p.n, terms)
    # binomial x_i -+ x_j: divide treating x_i as the dominant variable;
    # the leading (lex in x_i) monomial of the divisor is x_i.
    i, j = f.i - 1, f.j - 1
    sign = Fraction(1) if f.kind == "diff" else Fraction(-1)
    rem = dict(p.terms)
    quo: dict[tuple[int, ...], Fraction] = {}
    while rem:
        m = max(rem, key=lambda e: (e[i], grevlex_key(e)))
        if m[i] == 0:
            raise NotDivisible(str(f))
        c = rem[m]
        qm = list(m)
        qm[i] -= 1
        qm = tuple(qm)
        quo[qm] = c
        # rem -= c * x^qm * (x_i -+ x_j)
        del rem[m]
        other = list(qm)
        other[j] += 1
        other = tuple(other)
        s = rem.get(other, Fraction(0)) + sign * c
        if s:
            rem[other] = s
        else:
            rem.pop(other, None)
    return Polynomial(p.n, quo)


def divides(p: Polynomial, f: Factor) -> Optional[Polynomial]:
    try:
        return exact_divide(p, f)
    except NotDivisible:
        return None


class RationalFunction:
    """Polynomial numerator over a multiset of Factor denominators.

    Kept reduced: no denominator factor exactly divides the numerator.
    The overall sign is absorbed into the numerator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Optional[Mapping[Factor, int]] = None):
        self.num = num
        d = {f: m for f, m in (den or {}).items() if m}
        if any(m < 0 for m in d.values()):
            raise ValueError("negative factor multiplicity")
        self.den = d
        self._reduce()

    def _reduce(self) -> None:
        if self.num.is_zero():
            self.den = {}
            return
        changed = True
        while changed and self.den:
            changed = False
            for f in list(self.den):
                q = divides(self.num, f)
                if q is not None:
                    self.num = q
                    if self.den[f] == 1:
                        del self.den[f]
                    else:
                        self.den[f] -= 1
                    changed = True

    # -- constructors ------------------------------------------------

    @staticmethod
    def from_polynomial(p: Polynomial) -> "RationalFunction":
        return RationalFunction(p, {})

    @staticmethod
    def zero(n: int) -> "RationalFunction":
        return RationalFunction(Polynomial.zero(n), {})

    @staticmethod
    def constant(n: int, c: Scalar) -> "RationalFunction":
        return RationalFunction(Polynomial.constant(n, c), {})

    # -- predicates --------------------------------------------------

    @property
    def n(self) -> int:
        return self.num.n

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return not self.den

    def as_polynomial(self) -> Polynomial:
        if self.den:
            raise ValueError(f"denominator {self.den} did not clear")
        return self.num

    # -- arithmetic --------------------------------------------------

    def _check(self, other: "RationalFunction") -> None:
        if self.n != other.n:
            raise VariableCountMismatch(f"{self.n} vs {other.n} variables")

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        self._check(other)
        if not self.den and not other.den:
            return RationalFunction(self.num + other.num, {})
        # common denominator = factor-wise max multiplicity
        common: dict[Factor, int] = dict(self.den)
        for f, m in other.den.items():
            common[f] = max(common.get(f, 0), m)
        a = self.num
        for f, m in common.items():
            deficit = m - self.den.get(f, 0)
            if deficit:
                fp = f.as_polynomial(self.n)
                for _ in range(deficit):
                    a = a * fp
        b = other.num
        for f, m in common.items():
            deficit = m - other.den.get(f, 0)
            if deficit:
                fp = f.as_polynomial(self.n)
                for _ in range(deficit):
                    b = b * fp
        return RationalFunction(a + b, common)

    def __neg__(self) -> "RationalFunction":
        out = RationalFunction.__new__(RationalFunction)
        out.num = -self.num
        out.den = dict(self.den)
        return out

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return self + (-other)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        self._check(other)
        den: dict[Factor, int] = dict(self.den)
        for f, m in other.den.items():
            den[f] = den.get(f, 0) + m
        return RationalFunction(self.num * other.num, den)

    def scale(self, c: Scalar) -> "RationalFunction":
        if not Fraction(c):
            return RationalFunction.zero(self.n)
        out = RationalFunction.__new__(RationalFunction)
        out.num = self.num.scale(c)
        out.den = dict(self.den)
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            other = RationalFunction.from_polynomial(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self) -> int:
        return hash((self.num, frozenset(self.den.items())))

    # -- calculus ----------------------------------------------------

    def partial(self, i: int) -> "RationalFunction":
        """d/dx_i via the quotient rule over the factored denominator."""
        result = RationalFunction(self.num.partial(i), dict(self.den))
        for f, m in self.den.items():
            fprime = f.as_polynomial(self.n).partial(i)
            if fprime.is_zero():
                continue
            den = dict(self.den)
            den[f] = den.get(f, 0) + 1
            result = result + RationalFunction(
                self.num.scale(-m) * fprime, den
            )
        return result

    def euler(self, i: int) -> "RationalFunction":
        """x_i * d/dx_i."""
        xi = RationalFunction.from_polynomial(Polynomial.variable(self.n, i))
        return xi * self.partial(i)

    # -- serialization -----------------------------------------------

    def to_text(self) -> str:
        num = self.num.to_text()
        if not self.den:
            return num
        den = "*".join(
            str(f) if m == 1 else f"{f}^{m}"
            for f, m in sorted(self.den.items())
        )
        return f"({num}) / ({den})"

    def __repr__(self) -> str:
        return f"RationalFunction({self.to_text()})"


# ---------------------------------------------------------------------------
# Pfaffian
# ---------------------------------------------------------------------------


def pfaffian(rows, zero=None, one=None):
    """Pfaffian of a skew-symmetric matrix by first-row expansion.

    Entries may be any ring elements supporting +, -, *.  `zero`/`one`
    default to Fraction(0)/Fraction(1) and must be supplied for other
    rings (e.g. Polynomial matrices).
    """
    size = len(rows)
    if size % 2:
        raise ValueError("Pfaffian requires even size")
    for r in rows:
        if len(r) != size:
            raise ValueError("matrix is not square")
    for a in range(size):
        for b in range(size):
            if not rows[a][b] == -rows[b][a]:
                raise ValueError("matrix is not skew-symmetric")
    if zero is None:
        zero = Fraction(0)
    if one is None:
        one = Fraction(1)

    cache: dict[tuple[int, ...], object] = {}

    def rec(indices: tuple[int, ...]):
        if not indices:
            return one
        got = cache.get(indices)
        if got is not None:
            return got
        first = indices[0]
        total = zero
        sign = 1
        for pos in range(1, len(indices)):
            j = indices[pos]
            rest = indices[1:pos] + indices[pos + 1 :]
            term = rows[first][j] * rec(rest)
            total = total + term if sign > 0 else total - term
            sign = -sign
        cache[indices] = total
        return total

    return rec(tuple(range(size)))
