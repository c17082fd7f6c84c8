from __future__ import annotations

from fractions import Fraction

import pytest

from admfusion.cyclo import ONE, ZERO, CycloNum
from admfusion.linalg import SingularMatrix, inverse, matmul, rank, solve


def q(x):
    return CycloNum.from_rational(Fraction(x))


def z(m, k=1):
    return CycloNum.zeta(m, k)


def identity(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def test_rank_of_singular_hopf_matrix():
    assert rank([[q(1), q(1)], [q(-1), q(-1)]]) == 1
    assert rank([[q(1), q(1)], [q(1), q(-1)]]) == 2


def test_dft_matrix_inverse():
    n = 5
    F = [[z(n, i * j) for j in range(n)] for i in range(n)]
    assert matmul(F, inverse(F)) == identity(n)
    assert rank(F) == n


def test_solve_matches_product():
    A = [[q(2), z(3)], [z(4), q(1)]]
    X = [[q(1), z(5)], [q("1/2"), q(0)]]
    assert solve(A, matmul(A, X)) == X


def test_singular_inverse_raises():
    with pytest.raises(SingularMatrix):
        inverse([[q(1), q(2)], [q(2), q(4)]])
