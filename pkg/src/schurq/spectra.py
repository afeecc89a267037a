"""Eigenvalue extraction, identity sweeps, and desk-scale uniqueness checks.

All sweeps are exact: a pass means zero residual in exact rational
arithmetic, never a tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from . import linalg, operators
from .algebra import (
    Polynomial,
    RationalFunction,
    T_MINUS,
    T_PLUS,
    format_fraction,
    substitute,
)
from .qfunctions import (
    StrictPartition,
    monomial_symmetric,
    partitions,
    q_two,
    schur_q,
    strict_partitions,
    is_supersymmetric,
)

OPERATORS: dict[str, Callable[[Polynomial, int], RationalFunction]] = {
    "omega1": lambda f, n: operators.omega(f, 1, n),
    "omega3": lambda f, n: operators.omega(f, 3, n),
    "omega5": lambda f, n: operators.omega(f, 5, n),
    "omega7": lambda f, n: operators.omega(f, 7, n),
    "tilde-omega1": lambda f, n: operators.tilde_omega(f, 1, n),
    "tilde-omega2": lambda f, n: operators.tilde_omega(f, 2, n),
    "tilde-omega3": lambda f, n: operators.tilde_omega(f, 3, n),
    "tilde-omega4": lambda f, n: operators.tilde_omega(f, 4, n),
    "omega3-closed": operators.omega3_closed,
    "euler-cubes": operators.euler_cubes,
}


def apply_operator(op: str, f: Polynomial, n: int) -> RationalFunction:
    if op not in OPERATORS:
        raise ValueError(f"unknown operator {op!r}")
    return OPERATORS[op](f, n)


class DenominatorLeft(Exception):
    """Operator image failed to reduce to a polynomial."""


@dataclass
class EigenReport:
    partition: StrictPartition
    operator: str
    eigenvalue: Optional[Fraction]
    is_eigen: bool
    residual: Polynomial

    def to_json_obj(self) -> dict:
        return {
            "partition": str(self.partition),
            "operator": self.operator,
            "eigenvalue": format_fraction(self.eigenvalue) if self.is_eigen else None,
            "isEigen": self.is_eigen,
        }


def eigen_check(lam: StrictPartition, op: str, n: int) -> EigenReport:
    """Apply op to Q_lambda and test exact proportionality.

    The candidate scalar is fitted from the grevlex-leading monomial and
    then verified on every monomial.
    """
    if lam.length > n:
        raise ValueError("partition longer than the variable count")
    f = schur_q(lam, n)
    image = apply_operator(op, f, n)
    if not image.is_polynomial():
        raise DenominatorLeft(f"{op} Q_{lam} left denominator {image.den}")
    p = image.as_polynomial()
    if p.is_zero():
        return EigenReport(lam, op, Fraction(0), True, p)
    lead_m, lead_c = f.leading_term()
    c = p.terms.get(lead_m, Fraction(0)) / lead_c
    residual = p - f.scale(c)
    if residual.is_zero():
        return EigenReport(lam, op, c, True, residual)
    return EigenReport(lam, op, None, False, residual)


def hc_eigenvalue_omega3(lam: StrictPartition) -> Fraction:
    """sum lambda_i^3 - (sum lambda_i)^2."""
    return Fraction(sum(p**3 for p in lam.parts) - sum(lam.parts) ** 2)


# ---------------------------------------------------------------------------
# The separating polynomial algebra
# ---------------------------------------------------------------------------


class NotInRn(Exception):
    """Symmetry or the cancellation property failed at construction."""


@dataclass(frozen=True)
class RnPolynomial:
    """Symmetric polynomial in t_1..t_n that is s-free after t_i=s, t_j=-s.

    Both properties are verified at construction; the remaining
    variables are left free during the cancellation check (the stronger
    reading of the defining substitution).
    """

    poly: Polynomial

    def __post_init__(self):
        p = self.poly
        if not p.is_symmetric():
            raise NotInRn("not symmetric")
        if p.n >= 2:
            sub = substitute(p, {1: T_PLUS, 2: T_MINUS})
            if sub.degree_in(sub.n) > 0:
                raise NotInRn("depends on s after t_i=s, t_j=-s")

    @property
    def n(self) -> int:
        return self.poly.n

    def eval_at(self, point) -> Fraction:
        return self.poly.eval(point)


def odd_power_sum_rn(r: int, n: int) -> RnPolynomial:
    """sum t_i^r for odd r, the basic members of the algebra."""
    if r % 2 == 0:
        raise ValueError("only odd exponents cancel")
    terms = {}
    for i in range(n):
        e = [0] * n
        e[i] = r
        terms[tuple(e)] = Fraction(1)
    return RnPolynomial(Polynomial(n, terms))


def rn_eigenvalue(r: RnPolynomial, lam: StrictPartition, n: int) -> Fraction:
    """r evaluated at lambda padded with zeros to n entries."""
    if lam.length > n:
        raise ValueError("partition longer than the variable count")
    if r.n != n:
        raise ValueError("variable count mismatch")
    point = list(lam.parts) + [0] * (n - lam.length)
    return r.eval_at(point)


class Inseparable(Exception):
    """Witness search bound exhausted (a bug or bound too small)."""


def separation_check(
    lam: StrictPartition, mu: StrictPartition, n: int, max_odd: int = 21
) -> RnPolynomial:
    """Find r with r(lambda) != r(mu) among the odd power sums."""
    if lam == mu:
        raise ValueError("partitions must be distinct")
    if lam.length > n or mu.length > n:
        raise ValueError("partition longer than the variable count")
    a = list(lam.parts) + [0] * (n - lam.length)
    b = list(mu.parts) + [0] * (n - mu.length)
    for r in range(1, max_odd + 1, 2):
        if sum(x**r for x in a) != sum(x**r for x in b):
            return odd_power_sum_rn(r, n)
    raise Inseparable(f"no odd power sum up to {max_odd} separates {lam} and {mu}")


# ---------------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------------


@dataclass
class SweepReport:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_obj(self) -> dict:
        return {
            "suite": self.name,
            "checked": self.checked,
            "passed": self.passed,
            "failures": self.failures[:10],
        }


def _q_basis(d: int, n: int) -> list[StrictPartition]:
    return [lam for lam in strict_partitions(d, max_length=n)]


def _operator_matrix(op: str, basis: list[StrictPartition], n: int):
    """Matrix of the operator on span{Q_lambda}, column by column."""
    polys = [schur_q(lam, n) for lam in basis]
    monomials = sorted({m for p in polys for m in p.terms})
    coords = [[p.terms.get(m, Fraction(0)) for p in polys] for m in monomials]
    columns = []
    for lam, p in zip(basis, polys):
        image = apply_operator(op, p, n)
        if not image.is_polynomial():
            raise DenominatorLeft(f"{op} Q_{lam}")
        img = image.as_polynomial()
        rhs = [img.terms.get(m, Fraction(0)) for m in monomials]
        columns.append(linalg.solve(coords, rhs))
    size = len(basis)
    return [[columns[c][r] for c in range(size)] for r in range(size)]


def uniqueness_sweep(n: int, maxdeg: int, operators_used=("omega1", "omega3", "omega5", "omega7")) -> SweepReport:
    """Confirm one-dimensional joint eigenspaces on each degree's Q-span.

    Builds exact operator matrices on the Q basis, intersects eigenspace
    kernels operator by operator until one-dimensional or the operator
    list is exhausted.
    """
    report = SweepReport(f"uniqueness(n={n},maxdeg={maxdeg})")
    for d in range(1, maxdeg + 1):
        basis = _q_basis(d, n)
        if not basis:
            continue
        size = len(basis)
        if size == 1:
            report.checked += 1
            continue
        matrices = {}
        # candidate eigenvalues come from the basis polynomials themselves
        per_lam = {}
        for lam in basis:
            per_lam[lam] = {}
        used_ops = []
        for op in operators_used:
            matrices[op] = _operator_matrix(op, basis, n)
            for lam in basis:
                rep = eigen_check(lam, op, n)
                if not rep.is_eigen:
                    report.failures.append(f"d={d} {lam}: not an eigenfunction of {op}")
                per_lam[lam][op] = rep.eigenvalue
            used_ops.append(op)
            # group by joint eigenvalue tuple so far
            groups: dict[tuple, list[StrictPartition]] = {}
            for lam in basis:
                key = tuple(per_lam[lam][o] for o in used_ops)
                groups.setdefault(key, []).append(lam)
            if all(len(g) == 1 for g in groups.values()):
                break
        # exact joint eigenspaces: intersect kernels of (M_op - c I)
        groups = {}
        for lam in basis:
            key = tuple(per_lam[lam][o] for o in used_ops)
            groups.setdefault(key, []).append(lam)
        for key, members in groups.items():
            stacked = []
            for op, c in zip(used_ops, key):
                m = matrices[op]
                stacked.extend(
                    [m[r][col] - (c if r == col else 0) for col in range(size)]
                    for r in range(size)
                )
            dim = len(linalg.nullspace(stacked))
            report.checked += 1
            if dim != 1:
                report.failures.append(
                    f"d={d}: joint eigenspace {key} has dimension {dim} "
                    f"(members {[str(m) for m in members]})"
                )
    return report


def lemma_121_sweep(n: int, maxdeg: int) -> SweepReport:
    """Verify the four linear relations between the two operator families
    on every monomial symmetric polynomial of degree <= maxdeg."""
    report = SweepReport(f"lemma121(n={n},maxdeg={maxdeg})")
    relations = [
        ("tilde-omega1 = 2 omega1", 1, {1: 2}),
        ("tilde-omega2 = 2 omega1", 2, {1: 2}),
        ("tilde-omega3 = 2 omega3 + 2 omega1", 3, {3: 2, 1: 2}),
        ("tilde-omega4 = 4 omega3 + 2 omega1", 4, {3: 4, 1: 2}),
    ]
    for d in range(0, maxdeg + 1):
        mus = [()] if d == 0 else list(partitions(d, max_length=n))
        for mu in mus:
            f = Polynomial.constant(n, 1) if not mu else monomial_symmetric(mu, n)
            images = {k: operators.omega(f, k, n) for k in (1, 3)}
            for name, tk, combo in relations:
                lhs = operators.tilde_omega(f, tk, n)
                rhs = RationalFunction.zero(n)
                for k, coef in combo.items():
                    rhs = rhs + images[k].scale(coef)
                report.checked += 1
                if not lhs == rhs:
                    report.failures.append(f"{name} fails on m_{mu}, n={n}")
    return report


def eigenfunction_sweep(n: int, maxweight: int, ops=("omega1", "omega3", "omega5")) -> SweepReport:
    """Lemma-level eigenfunction sweep with the explicit omega3 spectrum."""
    report = SweepReport(f"eigenfunctions(n={n},maxweight={maxweight})")
    for d in range(1, maxweight + 1):
        for lam in strict_partitions(d, max_length=n):
            for op in ops:
                rep = eigen_check(lam, op, n)
                report.checked += 1
                if not rep.is_eigen:
                    report.failures.append(f"{lam}: not eigen under {op}")
                    continue
                if op == "omega1" and rep.eigenvalue != lam.weight:
                    report.failures.append(f"{lam}: omega1 eigenvalue {rep.eigenvalue}")
                if op == "omega3" and rep.eigenvalue != hc_eigenvalue_omega3(lam):
                    report.failures.append(f"{lam}: omega3 eigenvalue {rep.eigenvalue}")
    return report


def skew_symmetry_sweep(n: int, maxindex: int) -> SweepReport:
    report = SweepReport(f"skew(n={n},max={maxindex})")
    for k in range(0, maxindex + 1):
        for l in range(0, maxindex + 1):
            if k + l == 0:
                continue
            report.checked += 1
            if q_two(k, l, n) != -q_two(l, k, n):
                report.failures.append(f"Q_{{{k},{l}}} != -Q_{{{l},{k}}} at n={n}")
    return report


def supersymmetry_sweep(n: int, maxweight: int) -> SweepReport:
    report = SweepReport(f"supersym(n={n},maxweight={maxweight})")
    for d in range(1, maxweight + 1):
        for lam in strict_partitions(d):
            report.checked += 1
            if not is_supersymmetric(schur_q(lam, n), n):
                report.failures.append(f"Q_{lam} not supersymmetric at n={n}")
    return report


def stability_sweep(n: int, maxweight: int) -> SweepReport:
    """Q_lambda(x_1..x_n, 0) = Q_lambda(x_1..x_n)."""
    report = SweepReport(f"stability(n={n},maxweight={maxweight})")
    for d in range(1, maxweight + 1):
        for lam in strict_partitions(d):
            big = schur_q(lam, n + 1)
            small = schur_q(lam, n)
            report.checked += 1
            if substitute(big, {n + 1: 0}) != small:
                report.failures.append(f"Q_{lam} unstable at n={n}")
    return report


def conjugation_sweep(n: int, maxdeg: int) -> SweepReport:
    """delta^{-1} Omega_3 delta = sum D_i^3 - (sum D_i)^2 on monomials,
    plus (sum D_i^3) delta^{-1} = 0."""
    report = SweepReport(f"conjugation(n={n},maxdeg={maxdeg})")

    def monomials(deg_cap):
        def rec(prefix, remaining):
            if len(prefix) == n:
                yield tuple(prefix)
                return
            for e in range(remaining + 1):
                yield from rec(prefix + [e], remaining - e)

        for total in range(deg_cap + 1):
            for exps in rec([], total):
                if sum(exps) == total:
                    yield exps

    for exps in monomials(maxdeg):
        f = Polynomial.monomial(n, exps)
        lhs = operators.conjugated_apply("omega3-closed", f, n)
        rhs = operators.euler_cubes(f, n)
        report.checked += 1
        if not lhs == rhs:
            report.failures.append(f"conjugation fails on x^{exps}, n={n}")
    report.checked += 1
    if not operators.sum_cubes(operators.delta_inverse(n), n).is_zero():
        report.failures.append(f"(sum D_i^3) delta^-1 != 0 at n={n}")
    return report


def auxiliary_sweep(n: int) -> SweepReport:
    """24 theta_i - 6 psi_i - 12 phi_i^2 - 6 D_i(phi_i) = 0 for all i."""
    report = SweepReport(f"aux35(n={n})")
    for i in range(1, n + 1):
        phi, psi, theta = operators.auxiliary_functions(i, n)
        expr = (
            theta.scale(24)
            - psi.scale(6)
            - (phi * phi).scale(12)
            - phi.euler(i).scale(6)
        )
        report.checked += 1
        if not expr.is_zero():
            report.failures.append(f"auxiliary identity fails at n={n}, i={i}")
    return report


def separation_sweep(n: int, maxweight: int) -> SweepReport:
    report = SweepReport(f"separation(n={n},maxweight={maxweight})")
    all_parts = [
        lam
        for d in range(1, maxweight + 1)
        for lam in strict_partitions(d, max_length=n)
    ]
    for a in range(len(all_parts)):
        for b in range(a + 1, len(all_parts)):
            lam, mu = all_parts[a], all_parts[b]
            report.checked += 1
            try:
                witness = separation_check(lam, mu, n)
            except Inseparable:
                report.failures.append(f"no witness for {lam} vs {mu}")
                continue
            if rn_eigenvalue(witness, lam, n) == rn_eigenvalue(witness, mu, n):
                report.failures.append(f"witness fails for {lam} vs {mu}")
    return report
