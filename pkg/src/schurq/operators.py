"""Radial differential operators acting on exact rational functions.

Everything acts on concrete values: the level-k recursion is evaluated
on the vector of level-(k-1) images rather than composed symbolically.
Coefficients like 2*x_i*x_j/(x_i^2-x_j^2) are stored with factored
denominators, so each step reduces exactly.
"""

from __future__ import annotations

from typing import Sequence, Union

from .algebra import (
    Polynomial,
    RationalFunction,
    diff_factor,
    sum_factor,
)

Value = Union[Polynomial, RationalFunction]


def _lift(f: Value) -> RationalFunction:
    if isinstance(f, Polynomial):
        return RationalFunction.from_polynomial(f)
    return f


def euler_derivative(f: Value, i: int) -> RationalFunction:
    """x_i * d/dx_i applied to f."""
    return _lift(f).euler(i)


def _x(n: int, i: int) -> Polynomial:
    return Polynomial.variable(n, i)


def _pair_fraction(numerator: Polynomial, i: int, j: int) -> RationalFunction:
    """numerator / (x_i^2 - x_j^2), denominator kept factored."""
    d, sign = diff_factor(i, j)
    s = sum_factor(i, j)
    num = numerator if sign > 0 else -numerator
    return RationalFunction(num, {d: 1, s: 1})


def coeff_c(n: int, i: int, j: int) -> RationalFunction:
    """2 x_i x_j / (x_i^2 - x_j^2)."""
    return _pair_fraction((_x(n, i) * _x(n, j)).scale(2), i, j)


def coeff_d(n: int, i: int, j: int) -> RationalFunction:
    """2 x_i^2 / (x_i^2 - x_j^2)."""
    return _pair_fraction((_x(n, i) * _x(n, i)).scale(2), i, j)


def coeff_minus(n: int, i: int, j: int) -> RationalFunction:
    """x_i / (x_i - x_j)."""
    d, sign = diff_factor(i, j)
    num = _x(n, i) if sign > 0 else -_x(n, i)
    return RationalFunction(num, {d: 1})


def coeff_plus(n: int, i: int, j: int) -> RationalFunction:
    """x_i / (x_i + x_j)."""
    return RationalFunction(_x(n, i), {sum_factor(i, j): 1})


# ---------------------------------------------------------------------------
# The plain family and Omega_k
# ---------------------------------------------------------------------------


def family_start(f: Value, n: int) -> list[RationalFunction]:
    """Level 1: entry i is the Euler derivative of f."""
    g = _lift(f)
    return [g.euler(i) for i in range(1, n + 1)]


def family_step(prev: Sequence[RationalFunction], level: int) -> list[RationalFunction]:
    """Advance the vector (D_i^{(k-1)} f) to level k = level.

    Odd k:  D_i prev_i + sum_j 2x_ix_j/(x_i^2-x_j^2) (prev_i - prev_j).
    Even k: (D_i - 1) prev_i
            + sum_j [2x_ix_j/(x_i^2-x_j^2) prev_i - 2x_i^2/(x_i^2-x_j^2) prev_j].
    """
    n = len(prev)
    out = []
    for i in range(1, n + 1):
        pi = prev[i - 1]
        acc = pi.euler(i)
        if level % 2 == 0:
            acc = acc - pi
        for j in range(1, n + 1):
            if j == i:
                continue
            pj = prev[j - 1]
            if level % 2:
                acc = acc + coeff_c(n, i, j) * (pi - pj)
            else:
                acc = acc + coeff_c(n, i, j) * pi - coeff_d(n, i, j) * pj
        out.append(acc)
    return out


def derivative_family(f: Value, k: int, n: int) -> list[RationalFunction]:
    values = family_start(f, n)
    for level in range(2, k + 1):
        values = family_step(values, level)
    return values


def omega(f: Value, k: int, n: int) -> RationalFunction:
    """Omega_k f = sum_i D_i^{(k)} f, for odd k."""
    if k < 1 or k % 2 == 0:
        raise ValueError("omega is defined for odd k >= 1")
    values = derivative_family(f, k, n)
    total = RationalFunction.zero(n)
    for v in values:
        total = total + v
    return total


def _euler_square_sum(f: Value, n: int) -> RationalFunction:
    """(sum_i D_i)^2 f."""
    g = _lift(f)
    first = RationalFunction.zero(n)
    for i in range(1, n + 1):
        first = first + g.euler(i)
    total = RationalFunction.zero(n)
    for i in range(1, n + 1):
        total = total + first.euler(i)
    return total


def euler_cubes(f: Value, n: int) -> RationalFunction:
    """(sum_i D_i^3 - (sum_i D_i)^2) f, the conjugated form of Omega_3."""
    g = _lift(f)
    total = RationalFunction.zero(n)
    for i in range(1, n + 1):
        total = total + g.euler(i).euler(i).euler(i)
    return total - _euler_square_sum(f, n)


def sum_cubes(f: Value, n: int) -> RationalFunction:
    """(sum_i D_i^3) f."""
    g = _lift(f)
    total = RationalFunction.zero(n)
    for i in range(1, n + 1):
        total = total + g.euler(i).euler(i).euler(i)
    return total


def omega3_closed(f: Value, n: int) -> RationalFunction:
    """Closed form of Omega_3.

    sum D_i^3
    + 6 sum_{i<j} x_ix_j/(x_i^2-x_j^2) (D_i^2 - D_j^2)
    - 6 sum_{i<j} x_ix_j/(x_i+x_j)^2 (D_i + D_j)
    + 24 sum over triples {i,j,k} of
        x_i^2 x_j x_k / ((x_i^2-x_j^2)(x_i^2-x_k^2)) D_i   (i the member)
    - (sum D_i)^2.
    """
    g = _lift(f)
    eul = [g.euler(i) for i in range(1, n + 1)]
    eul2 = [eul[i - 1].euler(i) for i in range(1, n + 1)]
    eul3 = [eul2[i - 1].euler(i) for i in range(1, n + 1)]

    total = RationalFunction.zero(n)
    for i in range(1, n + 1):
        total = total + eul3[i - 1]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            cij = _pair_fraction(_x(n, i) * _x(n, j), i, j)
            total = total + cij.scale(6) * (eul2[i - 1] - eul2[j - 1])
            pij = RationalFunction(_x(n, i) * _x(n, j), {sum_factor(i, j): 2})
            total = total - pij.scale(6) * (eul[i - 1] + eul[j - 1])
    for i in range(1, n + 1):
        others = [j for j in range(1, n + 1) if j != i]
        for a_idx in range(len(others)):
            for b_idx in range(a_idx + 1, len(others)):
                a, b = others[a_idx], others[b_idx]
                num = _x(n, i) * _x(n, i) * _x(n, a) * _x(n, b)
                da, sa = diff_factor(i, a)
                db, sb = diff_factor(i, b)
                den = {da: 1, sum_factor(i, a): 1, sum_factor(i, b): 1}
                den[db] = den.get(db, 0) + 1
                if sa * sb < 0:
                    num = -num
                total = total + RationalFunction(num, den).scale(24) * eul[i - 1]
    return total - _euler_square_sum(f, n)


# ---------------------------------------------------------------------------
# The tilde family and tilde Omega_k
# ---------------------------------------------------------------------------


def tilde_family_start(f: Value, n: int) -> tuple[list[RationalFunction], list[RationalFunction]]:
    g = _lift(f)
    plain = [g.euler(i) for i in range(1, n + 1)]
    return plain, list(plain)


def tilde_family_step(
    plain: Sequence[RationalFunction], barred: Sequence[RationalFunction]
) -> tuple[list[RationalFunction], list[RationalFunction]]:
    """One level of the paired recursion.

    plain_i  <- D_i plain_i
                + sum_j x_i/(x_i-x_j) (plain_i - plain_j)
                - sum_j x_i/(x_i+x_j) (plain_i + barred_j)
    barred_i <- plain_i + barred_i - D_i barred_i
                - sum_j x_i/(x_i-x_j) (barred_i - barred_j)
                + sum_j x_i/(x_i+x_j) (barred_i + plain_j)

    The leading "plain_i + barred_i" in the barred line is what keeps
    the pair consistent with the plus/minus-combination recursions and
    the linear relations tying tilde Omega_k to the odd Omega family.
    """
    n = len(plain)
    new_plain = []
    new_barred = []
    for i in range(1, n + 1):
        pi = plain[i - 1]
        bi = barred[i - 1]
        acc_p = pi.euler(i)
        acc_b = pi + bi - bi.euler(i)
        for j in range(1, n + 1):
            if j == i:
                continue
            cm = coeff_minus(n, i, j)
            cp = coeff_plus(n, i, j)
            acc_p = acc_p + cm * (pi - plain[j - 1]) - cp * (pi + barred[j - 1])
            acc_b = acc_b - cm * (bi - barred[j - 1]) + cp * (bi + plain[j - 1])
        new_plain.append(acc_p)
        new_barred.append(acc_b)
    return new_plain, new_barred


def tilde_family(f: Value, k: int, n: int) -> tuple[list[RationalFunction], list[RationalFunction]]:
    plain, barred = tilde_family_start(f, n)
    for _ in range(2, k + 1):
        plain, barred = tilde_family_step(plain, barred)
    return plain, barred


def tilde_omega(f: Value, k: int, n: int) -> RationalFunction:
    """tilde Omega_k f = sum_i (plain_i + barred_i) at level k."""
    if k < 1:
        raise ValueError("tilde omega requires k >= 1")
    plain, barred = tilde_family(f, k, n)
    total = RationalFunction.zero(n)
    for p, b in zip(plain, barred):
        total = total + p + b
    return total


# ---------------------------------------------------------------------------
# delta, conjugation, auxiliary functions
# ---------------------------------------------------------------------------


def delta(n: int) -> RationalFunction:
    """prod_{i<j} (x_i + x_j)/(x_i - x_j)."""
    num = Polynomial.constant(n, 1)
    den: dict = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            num = num * sum_factor(i, j).as_polynomial(n)
            d, _ = diff_factor(i, j)
            den[d] = den.get(d, 0) + 1
    return RationalFunction(num, den)


def delta_inverse(n: int) -> RationalFunction:
    """prod_{i<j} (x_i - x_j)/(x_i + x_j)."""
    num = Polynomial.constant(n, 1)
    den: dict = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            d, _ = diff_factor(i, j)
            num = num * d.as_polynomial(n)
            s = sum_factor(i, j)
            den[s] = den.get(s, 0) + 1
    return RationalFunction(num, den)


CONJUGATABLE_OPS = {
    "omega3-closed": omega3_closed,
    "euler-cubes": euler_cubes,
}


def conjugated_apply(op: str, f: Value, n: int) -> RationalFunction:
    """delta^{-1} . op(delta . f), evaluated exactly."""
    if op not in CONJUGATABLE_OPS:
        raise ValueError(f"unknown conjugatable operator {op!r}")
    g = delta(n) * _lift(f)
    return delta_inverse(n) * CONJUGATABLE_OPS[op](g, n)


def auxiliary_functions(i: int, n: int) -> tuple[RationalFunction, RationalFunction, RationalFunction]:
    """(phi_i, psi_i, theta_i) in x-coordinates.

    phi_i   = sum_{j != i} x_i x_j / (x_i^2 - x_j^2)
    psi_i   = sum_{j != i} x_i x_j / (x_i + x_j)^2
    theta_i = sum_{j < k, both != i} [x_ix_j/(x_i^2-x_j^2)] [x_ix_k/(x_i^2-x_k^2)]
    """
    if not 1 <= i <= n:
        raise IndexError(f"index {i} out of range 1..{n}")
    phi = RationalFunction.zero(n)
    psi = RationalFunction.zero(n)
    for j in range(1, n + 1):
        if j == i:
            continue
        phi = phi + _pair_fraction(_x(n, i) * _x(n, j), i, j)
        psi = psi + RationalFunction(_x(n, i) * _x(n, j), {sum_factor(i, j): 2})
    theta = RationalFunction.zero(n)
    others = [j for j in range(1, n + 1) if j != i]
    for a_idx in range(len(others)):
        for b_idx in range(a_idx + 1, len(others)):
            a, b = others[a_idx], others[b_idx]
            term = _pair_fraction(_x(n, i) * _x(n, a), i, a) * _pair_fraction(
                _x(n, i) * _x(n, b), i, b
            )
            theta = theta + term
    return phi, psi, theta
