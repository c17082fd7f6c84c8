from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from admfusion.liealg import (
    CapExceeded,
    LieAlgebraError,
    Weight,
    apply_simple_current,
    build_root_system,
    discriminant_group,
    dominant_representative,
    dominant_weights_of_level,
    dual_root_system,
    in_root_lattice,
    inner_product,
    label_box_count,
    simple_current_actions,
    weyl_group,
    weyl_group_order,
    weyl_orbit,
)

TYPES = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("C", 3), ("D", 4), ("D", 5),
         ("G", 2), ("F", 4), ("E", 6)]

# (h, h^vee, r^vee) from the standard tables
COXETER = {
    ("A", 1): (2, 2, 1), ("A", 2): (3, 3, 1), ("A", 3): (4, 4, 1), ("A", 4): (5, 5, 1),
    ("B", 2): (4, 3, 2), ("B", 3): (6, 5, 2), ("C", 3): (6, 4, 2), ("D", 4): (6, 6, 1),
    ("D", 5): (8, 8, 1), ("G", 2): (6, 4, 3), ("F", 4): (12, 9, 2), ("E", 6): (12, 12, 1),
    ("E", 7): (18, 18, 1), ("E", 8): (30, 30, 1),
}


def closed_form_weyl_order(family, n):
    if family == "A":
        return math.factorial(n + 1)
    if family in "BC":
        return 2**n * math.factorial(n)
    if family == "D":
        return 2 ** (n - 1) * math.factorial(n)
    return {("G", 2): 12, ("F", 4): 1152, ("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600}[(family, n)]


def det(rs):
    return round(np.linalg.det(np.array(rs.cartan, dtype=float)))


def test_a1_constants():
    rs = build_root_system("A", 1)
    assert (rs.coxeter_h, rs.dual_coxeter_h, rs.lacety_r, rs.lattice_level_N) == (2, 2, 1, 2)
    assert rs.gram_fundamental == ((Fraction(1, 2),),)


@pytest.mark.parametrize("n", range(1, 7))
def test_sl_lattice_level(n):
    assert build_root_system("A", n).lattice_level_N == n + 1


def test_lattice_level_readings():
    # Gram-denominator reading versus the smallest N with N*P integral
    got = {t: (build_root_system(*t).lattice_level_N, build_root_system(*t).lattice_level_integral)
           for t in [("A", 1), ("A", 3), ("D", 4), ("E", 8)]}
    assert got == {("A", 1): (2, 2), ("A", 3): (4, 2), ("D", 4): (2, 2), ("E", 8): (1, 1)}


def test_e8_unimodular():
    rs = build_root_system("E", 8)
    assert rs.lattice_level_N == 1
    assert discriminant_group(rs).order == 1


@pytest.mark.parametrize("family,rank", [("A", 0), ("B", 1), ("C", 2), ("D", 3), ("E", 9), ("F", 3), ("G", 3), ("X", 2)])
def test_invalid_types(family, rank):
    with pytest.raises(LieAlgebraError):
        build_root_system(family, rank)


@pytest.mark.parametrize("t", sorted(COXETER))
def test_coxeter_numbers(t):
    rs = build_root_system(*t)
    assert (rs.coxeter_h, rs.dual_coxeter_h, rs.lacety_r) == COXETER[t]


@pytest.mark.parametrize("t", TYPES)
def test_root_system_invariants(t):
    rs = build_root_system(*t)
    n = rs.rank
    for i in range(n):
        assert rs.cartan[i][i] == 2
        for j in range(n):
            assert i == j or rs.cartan[i][j] <= 0
    G = rs.gram_fundamental
    assert all(G[i][j] == G[j][i] for i in range(n) for j in range(n))
    for k in range(1, n + 1):
        minor = np.array([[float(G[i][j]) for j in range(k)] for i in range(k)])
        assert np.linalg.det(minor) > 0
    assert rs.rho.labels == (1,) * n
    assert inner_product(rs, rs.theta, rs.theta) == 2
    # (rho, theta) = h^vee - 1 for theta the highest (long) root
    assert inner_product(rs, rs.rho, rs.theta) == rs.dual_coxeter_h - 1
    N = rs.lattice_level_N
    assert all((N * G[i][j]).denominator == 1 for i in range(n) for j in range(n))
    assert all(any((d * G[i][j]).denominator != 1 for i in range(n) for j in range(n)) for d in range(1, N))


@pytest.mark.parametrize("t", TYPES)
def test_weyl_order_matches_closed_form(t):
    rs = build_root_system(*t)
    assert weyl_group_order(rs) == closed_form_weyl_order(*t)
    W = weyl_group(rs)
    assert len(W) == closed_form_weyl_order(*t)
    assert sum(w.sign for w in W) == 0


@pytest.mark.parametrize("t", [("A", 1), ("A", 2), ("B", 2), ("G", 2), ("A", 3)])
def test_weyl_elements(t):
    rs = build_root_system(*t)
    W = weyl_group(rs)
    assert W[0].length == 0 and W[0].sign == 1
    mats = {tuple(map(tuple, w.matrix)) for w in W}
    assert len(mats) == len(W)
    for w in W:
        assert w.sign == (-1) ** w.length == round(np.linalg.det(np.array(w.matrix, dtype=float)))
    # closure under simple reflections
    x = Weight(range(1, rs.rank + 1))
    images = {w(x) for w in W}
    for y in images:
        for i in range(rs.rank):
            assert rs.reflect(i, y) in images


def test_weyl_examples():
    assert sorted(w.sign for w in weyl_group(build_root_system("A", 1))) == [-1, 1]
    assert len(weyl_group(build_root_system("D", 4))) == 192


def test_weyl_cap():
    with pytest.raises(CapExceeded):
        weyl_group(build_root_system("E", 8), cap=10**6)


def test_inner_product_examples():
    a1, a2 = build_root_system("A", 1), build_root_system("A", 2)
    assert inner_product(a1, a1.omega(1), a1.omega(1)) == Fraction(1, 2)
    assert inner_product(a2, a2.omega(1), a2.omega(2)) == Fraction(1, 3)
    with pytest.raises(LieAlgebraError):
        inner_product(a2, a1.omega(1), a2.omega(1))


def test_dominant_weights_examples():
    a1, a2 = build_root_system("A", 1), build_root_system("A", 2)
    assert dominant_weights_of_level(a1, 1) == [Weight([0]), Weight([1])]
    assert dominant_weights_of_level(a2, 1) == [Weight([0, 0]), Weight([0, 1]), Weight([1, 0])]
    assert dominant_weights_of_level(a1, 0) == [Weight([0])]


@pytest.mark.parametrize("t", [("A", 1), ("A", 2), ("A", 3), ("B", 3), ("C", 3), ("D", 4), ("G", 2), ("F", 4)])
@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_level_count_matches_box_search(t, m):
    rs = build_root_system(*t)
    weights = dominant_weights_of_level(rs, m)
    assert len(weights) == label_box_count(rs, m)
    assert weights == sorted(weights)


def test_dual_root_system():
    for t in [("A", 3), ("D", 4), ("E", 6), ("G", 2), ("F", 4)]:
        rs = build_root_system(*t)
        assert dual_root_system(rs).family == rs.family
    b3 = build_root_system("B", 3)
    assert dual_root_system(b3).family == "C"
    assert dual_root_system(dual_root_system(b3)) == b3


def test_root_lattice_examples():
    a1, a2 = build_root_system("A", 1), build_root_system("A", 2)
    assert in_root_lattice(a1, Weight([2]))
    assert not in_root_lattice(a1, Weight([1]))
    assert in_root_lattice(a2, Weight([1, 1]))


@pytest.mark.parametrize("t", [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("D", 4), ("D", 5), ("E", 6), ("E", 7), ("E", 8)])
def test_discriminant_group_order(t):
    rs = build_root_system(*t)
    group = discriminant_group(rs)
    assert group.order == det(rs)
    for row in group.table:
        assert sorted(row) == list(range(group.order))


def test_discriminant_group_examples():
    a1 = build_root_system("A", 1)
    assert discriminant_group(a1).representatives == (Weight([0]), Weight([1]))
    z3 = discriminant_group(build_root_system("A", 2))
    assert z3.order == 3
    # Z/3: no element of order 2
    assert all(z3.table[k][k] != 0 for k in (1, 2))
    with pytest.raises(LieAlgebraError):
        discriminant_group(build_root_system("B", 3))


@pytest.mark.parametrize("t", [("A", 1), ("A", 2), ("A", 3), ("D", 4), ("D", 5), ("E", 6), ("E", 7)])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_simple_currents_permute_alcove(t, m):
    rs = build_root_system(*t)
    actions = simple_current_actions(rs)
    assert len(actions) + 1 == det(rs)
    weights = dominant_weights_of_level(rs, m)
    for a in actions:
        image = [apply_simple_current(rs, a, m, w) for w in weights]
        assert sorted(image) == weights
        # the shift changes the weight by m omega_j modulo Q
        for w, x in zip(weights, image):
            assert in_root_lattice(rs, x - w - rs.omega(a[0] + 1) * m)


@given(st.lists(st.integers(-6, 6), min_size=3, max_size=3))
def test_dominant_representative_is_in_orbit(labels):
    rs = build_root_system("A", 3)
    w = Weight(labels)
    rep, _ = dominant_representative(rs, w)
    assert rep.is_dominant()
    assert rep in weyl_orbit(rs, w)
    assert inner_product(rs, rep, rep) == inner_product(rs, w, w)
