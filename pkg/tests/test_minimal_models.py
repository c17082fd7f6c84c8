from __future__ import annotations

from fractions import Fraction

import pytest

from admfusion.minimal_models import bpz_product, central_charge, conformal_weight, kac_labels


def test_ising():
    assert kac_labels(3, 4) == [(1, 1), (1, 2), (1, 3)]
    assert central_charge(3, 4) == Fraction(1, 2)
    assert sorted(conformal_weight(3, 4, x) for x in kac_labels(3, 4)) == [0, Fraction(1, 16), Fraction(1, 2)]
    sigma, eps = (1, 2), (1, 3)
    assert bpz_product(3, 4, sigma, sigma) == {(1, 1): 1, (1, 3): 1}
    assert bpz_product(3, 4, sigma, eps) == {(1, 2): 1}
    assert bpz_product(3, 4, eps, eps) == {(1, 1): 1}


def test_lee_yang():
    assert kac_labels(2, 5) == [(1, 1), (1, 2)]
    assert bpz_product(2, 5, (1, 2), (1, 2)) == {(1, 1): 1, (1, 2): 1}


@pytest.mark.parametrize("p,pp", [(3, 4), (4, 5), (2, 7), (5, 6), (3, 8)])
def test_field_count_and_weight_symmetry(p, pp):
    labels = kac_labels(p, pp)
    assert len(labels) == (p - 1) * (pp - 1) // 2
    for r, s in labels:
        assert conformal_weight(p, pp, (r, s)) == conformal_weight(p, pp, (p - r, pp - s))


@pytest.mark.parametrize("p,pp", [(3, 4), (4, 5), (2, 7), (3, 5)])
def test_ring_axioms(p, pp):
    labels = kac_labels(p, pp)
    for x in labels:
        assert bpz_product(p, pp, (1, 1), x) == {x: 1}
        for y in labels:
            assert bpz_product(p, pp, x, y) == bpz_product(p, pp, y, x)
            for z in labels:
                left, right = {}, {}
                for a, n in bpz_product(p, pp, x, y).items():
                    for b, m in bpz_product(p, pp, a, z).items():
                        left[b] = left.get(b, 0) + n * m
                for a, n in bpz_product(p, pp, y, z).items():
                    for b, m in bpz_product(p, pp, x, a).items():
                        right[b] = right.get(b, 0) + n * m
                assert left == right


def test_not_a_minimal_model():
    with pytest.raises(ValueError):
        kac_labels(2, 4)
