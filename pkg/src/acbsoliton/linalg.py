"""Dense exact linear algebra over the Scalar field."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import StructuralError
from .scalars import Scalar

__all__ = ["SolveOutcome", "determinant", "inertia", "inverse", "solve_linear"]


@dataclass(frozen=True)
class SolveOutcome:
    """Result of an exact linear solve.

    ``status`` is ``"unique"``, ``"inconsistent"`` or ``"underdetermined"``.
    For an inconsistent system ``witness`` is the label of an equation that
    cannot be satisfied and ``residual`` its leftover right-hand side. For an
    underdetermined system ``values`` is one particular solution and
    ``null_space`` spans the free directions.
    """

    status: str
    values: tuple | None = None
    witness: object = None
    residual: Scalar | None = None
    null_space: tuple = field(default_factory=tuple)

    @property
    def ok(self):
        return self.status == "unique"


def _rref(rows, ncols):
    """In-place reduced row echelon form; returns pivot (row, col) pairs."""
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if not rows[i][c].is_zero()), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv if not x.is_zero() else x for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero():
                k = rows[i][c]
                rows[i] = [x - k * y if not y.is_zero() else x for x, y in zip(rows[i], rows[r])]
        pivots.append((r, c))
        r += 1
        if r == len(rows):
            break
    return pivots


def solve_linear(matrix, rhs, labels=None) -> SolveOutcome:
    """Solve ``matrix @ x = rhs`` exactly by Gauss-Jordan elimination.

    Every equation is kept, so consistency is checked on all rows.
    """
    m = len(matrix)
    if labels is None:
        labels = list(range(m))
    if m == 0:
        raise StructuralError("empty linear system")
    k = len(matrix[0])
    zero = rhs[0] * 0
    rows = [list(row) + [b] for row, b in zip(matrix, rhs)]
    # original row positions, permuted alongside rows so witnesses survive swaps
    order = list(range(m))
    pivots = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, m) if not rows[i][c].is_zero()), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        order[r], order[p] = order[p], order[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv if not x.is_zero() else x for x in rows[r]]
        for i in range(m):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y if not y.is_zero() else x for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if not rows[i][k].is_zero():
            return SolveOutcome("inconsistent", witness=labels[order[i]], residual=rows[i][k])
    values = [zero] * k
    for i, c in enumerate(pivots):
        values[c] = rows[i][k]
    if len(pivots) == k:
        return SolveOutcome("unique", values=tuple(values))
    free = [c for c in range(k) if c not in pivots]
    basis = []
    one = zero + 1
    for fc in free:
        vec = [zero] * k
        vec[fc] = one
        for i, c in enumerate(pivots):
            vec[c] = -rows[i][fc]
        basis.append(tuple(vec))
    return SolveOutcome("underdetermined", values=tuple(values), null_space=tuple(basis))


def inverse(matrix):
    """Inverse of a square Scalar matrix; raises StructuralError if singular."""
    n = len(matrix)
    zero = matrix[0][0] * 0
    one = zero + 1
    rows = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(matrix)]
    pivots = _rref(rows, n)
    if len(pivots) < n:
        raise StructuralError("matrix is singular over the Scalar field")
    return [row[n:] for row in rows]


def determinant(matrix) -> Scalar:
    n = len(matrix)
    rows = [list(r) for r in matrix]
    det = rows[0][0] * 0 + 1
    for c in range(n):
        p = next((i for i in range(c, n) if not rows[i][c].is_zero()), None)
        if p is None:
            return det * 0
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            det = -det
        det = det * rows[c][c]
        inv = rows[c][c].inverse()
        for i in range(c + 1, n):
            if not rows[i][c].is_zero():
                f = rows[i][c] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return det


def inertia(matrix):
    """Signature ``(positive, negative, zero)`` of a symmetric rational matrix.

    Uses symmetric Gaussian elimination (congruence), so the counts are exact.
    """
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    pos = neg = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if a[i][i] != 0), None)
        if piv is None:
            pair = next(
                ((i, j) for i in active for j in active if i < j and a[i][j] != 0), None
            )
            if pair is None:
                break
            i, j = pair
            # e_i -> e_i + e_j makes the diagonal entry 2 a_ij
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            piv = i
        d = a[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        for i in active:
            if a[i][piv] != 0:
                f = a[i][piv] / d
                for k in range(n):
                    a[i][k] -= f * a[piv][k]
                for k in range(n):
                    a[k][i] -= f * a[k][piv]
    return pos, neg, n - pos - neg
