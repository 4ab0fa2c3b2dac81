from fractions import Fraction

import pytest

from acbsoliton.errors import StructuralError
from acbsoliton.linalg import determinant, inertia, inverse, solve_linear
from acbsoliton.scalars import Scalar

P = ("p",)
p = Scalar.var("p", P)


def S(v):
    return Scalar.const(v, P)


def test_unique_symbolic():
    out = solve_linear([[S(1), S(1)], [S(1), -S(1)], [S(2), S(0)]], [p * 2, S(0), p * 2])
    assert out.status == "unique"
    assert out.values == (p, p)


def test_inconsistent_reports_original_row():
    out = solve_linear([[S(1)], [S(0)], [S(1)]], [S(1), S(0), S(2)], labels=["a", "b", "c"])
    assert out.status == "inconsistent"
    assert out.witness == "c"
    assert out.residual == S(1)


def test_inconsistent_beats_underdetermined():
    out = solve_linear([[S(1), S(1)], [S(2), S(2)]], [S(1), S(3)])
    assert out.status == "inconsistent"


def test_underdetermined_null_space():
    A = [[S(1), S(1), S(0)], [S(0), S(0), S(1)]]
    out = solve_linear(A, [S(2), p])
    assert out.status == "underdetermined"
    assert len(out.null_space) == 1
    vec = out.null_space[0]
    for row in A:
        assert sum((a * v for a, v in zip(row, vec)), S(0)).is_zero()


def test_inverse_and_determinant():
    A = [[p, S(1)], [S(1), -p]]
    inv = inverse(A)
    for i in range(2):
        for j in range(2):
            e = sum((A[i][k] * inv[k][j] for k in range(2)), S(0))
            assert e == S(int(i == j))
    assert determinant(A) == -p * p - 1
    with pytest.raises(StructuralError):
        inverse([[p, p], [S(1), S(1)]])


@pytest.mark.parametrize("matrix, expected", [
    ([[1, 0, 0], [0, 1, 0], [0, 0, -1]], (2, 1, 0)),
    ([[0, 1], [1, 0]], (1, 1, 0)),
    ([[1, 1], [1, 1]], (1, 0, 1)),
    ([[Fraction(1, 2), 2, 0], [2, 1, 0], [0, 0, 0]], (1, 1, 1)),
])
def test_inertia(matrix, expected):
    assert inertia(matrix) == expected
