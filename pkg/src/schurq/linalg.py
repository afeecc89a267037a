"""Dense exact linear algebra over Fraction (Gaussian elimination).

Matrices are lists of row lists.  Sizes here are tiny (tens of rows),
so plain fraction elimination is the right tool.
"""

from __future__ import annotations

from fractions import Fraction


class InconsistentSystem(Exception):
    pass


def _clone(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rank(rows) -> int:
    if not rows:
        return 0
    m = _clone(rows)
    nrows, ncols = len(m), len(m[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == nrows:
            break
    return r


def solve(rows, rhs) -> list[Fraction]:
    """Solve A x = b for a (possibly overdetermined) consistent system.

    Raises InconsistentSystem if no solution exists and ValueError if
    the solution is not unique.
    """
    m = _clone(rows)
    b = [Fraction(x) for x in rhs]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        b[r], b[pivot] = b[pivot], b[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        b[r] *= inv
        for i in range(nrows):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * c for a, c in zip(m[i], m[r])]
                b[i] -= f * b[r]
        pivots.append(col)
        r += 1
    for i in range(r, nrows):
        if b[i]:
            raise InconsistentSystem("right-hand side outside the column span")
    if len(pivots) < ncols:
        raise ValueError("underdetermined system")
    x = [Fraction(0)] * ncols
    for row, col in enumerate(pivots):
        x[col] = b[row]
    return x


def nullspace(rows) -> list[list[Fraction]]:
    """Basis of the kernel of A."""
    m = _clone(rows)
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * c for a, c in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, col in enumerate(pivots):
            v[col] = -m[row][fc]
        basis.append(v)
    return basis


def determinant(rows) -> Fraction:
    """Determinant by fraction elimination (independent of the Pfaffian)."""
    m = _clone(rows)
    size = len(m)
    det = Fraction(1)
    for col in range(size):
        pivot = next((i for i in range(col, size) if m[i][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for i in range(col + 1, size):
            if m[i][col]:
                f = m[i][col] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[col])]
    return det
