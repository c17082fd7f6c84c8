from __future__ import annotations

import math

import pytest

from admfusion.admissible import (
    AdmissibleLevel,
    InvalidLevel,
    hopf_matrix,
    hopf_ratio,
    is_modular,
    ordinary_fusion,
    ordinary_simples,
    verify_galois_twist,
    verify_modularity,
    verify_verlinde_ordinary,
)
from admfusion.cyclo import ONE, CycloNum
from admfusion.liealg import LieAlgebraError, Weight, build_root_system

A1, A2 = build_root_system("A", 1), build_root_system("A", 2)


def test_window():
    with pytest.raises(InvalidLevel):
        AdmissibleLevel(A1, 4, 2)
    with pytest.raises(InvalidLevel):
        AdmissibleLevel(A1, 1, 3)
    with pytest.raises(InvalidLevel):
        AdmissibleLevel(build_root_system("B", 2), 3, 2)
    AdmissibleLevel(build_root_system("B", 2), 5, 2)
    assert str(AdmissibleLevel(A1, 3, 2).level) == "-1/2"


def test_simples_examples():
    assert ordinary_simples(AdmissibleLevel(A1, 3, 2)) == [Weight([0]), Weight([1])]
    assert ordinary_simples(AdmissibleLevel(A1, 2, 3)) == [Weight([0])]
    assert len(ordinary_simples(AdmissibleLevel(A2, 4, 5))) == 3


@pytest.mark.parametrize("u,v", [(3, 2), (5, 2), (4, 3), (5, 3), (5, 4), (7, 2), (7, 5)])
def test_hopf_ratio_rank_one_closed_form(u, v):
    L = AdmissibleLevel(A1, u, v)
    for lam in ordinary_simples(L):
        for mu in ordinary_simples(L):
            a, b = lam[0], mu[0]
            expected = math.sin(math.pi * v * (a + 1) * (b + 1) / u) / math.sin(math.pi * v * (b + 1) / u)
            assert complex(hopf_ratio(L, lam, mu)) == pytest.approx(expected)


def test_hopf_examples():
    L = AdmissibleLevel(A1, 3, 2)
    w = Weight([1])
    assert hopf_ratio(L, w, w) == CycloNum.from_rational(-1)
    assert hopf_matrix(L) == [[ONE, ONE], [CycloNum.from_rational(-1), CycloNum.from_rational(-1)]]


@pytest.mark.parametrize("rs,u,v", [(A1, 3, 2), (A1, 5, 3), (A2, 4, 5), (A2, 5, 2)])
def test_hopf_unit_and_nonvanishing(rs, u, v):
    L = AdmissibleLevel(rs, u, v)
    H = hopf_matrix(L)
    for j in range(len(H)):
        assert H[0][j] == ONE
    for i in range(len(H)):
        assert not H[i][0].is_zero()


def test_ordinary_fusion_examples():
    t = ordinary_fusion(AdmissibleLevel(A1, 3, 2))
    assert t.product(Weight([1]), Weight([1])) == {Weight([0]): 1}
    t = ordinary_fusion(AdmissibleLevel(A2, 4, 5))
    assert t.product(A2.omega(1), A2.omega(2)) == {A2.zero(): 1}
    with pytest.raises(LieAlgebraError):
        ordinary_fusion(AdmissibleLevel(build_root_system("B", 2), 5, 2))


@pytest.mark.parametrize("rs,u,v", [(A1, 3, 2), (A1, 5, 2), (A1, 6, 5), (A2, 4, 5), (A2, 5, 2), (A2, 4, 3)])
def test_ring_identities(rs, u, v):
    rep = verify_verlinde_ordinary(AdmissibleLevel(rs, u, v))
    n = len(rep.header["simples"])
    assert rep.passed and len(rep.checks) == n**3


@pytest.mark.parametrize("rs,u,v", [(A1, 4, 3), (A2, 4, 5), (A1, 3, 1), (A2, 5, 4)])
def test_galois_twist(rs, u, v):
    assert verify_galois_twist(AdmissibleLevel(rs, u, v)).passed


def test_galois_precondition():
    with pytest.raises(InvalidLevel):
        verify_galois_twist(AdmissibleLevel(A1, 3, 2))


def test_modularity_examples():
    m = is_modular(AdmissibleLevel(A1, 3, 2))
    assert (m.gcd_test, m.rank_test) == (False, False)
    m = is_modular(AdmissibleLevel(A1, 3, 1))
    assert m.gcd_test and m.rank_test
    m = is_modular(AdmissibleLevel(A1, 4, 3))
    assert m.gcd_test and m.rank_test
    rep = verify_modularity(AdmissibleLevel(A1, 3, 2))
    assert not rep.passed and rep.header["verdict"] == "singular"


@pytest.mark.parametrize("u", [3, 5, 7, 9])
@pytest.mark.parametrize("v", [1, 2, 3, 4, 5, 6])
def test_sl2_odd_denominator_criterion(u, v):
    # the ordinary category for sl2 is modular exactly when v is odd
    if math.gcd(u, v) != 1:
        return
    m = is_modular(AdmissibleLevel(A1, u, v))
    assert m.rank_test == (v % 2 == 1)
    assert m.consistent
