"""Virasoro minimal-model fusion from the BPZ truncation rules.

Fields of M(p, p') are Kac labels (r, s), 1 <= r < p, 1 <= s < p', with
(r, s) ~ (p - r, p' - s). This module only uses integer combinatorics and
serves as an oracle independent of any S-matrix computation.
"""
from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction


def kac_labels(p: int, pp: int) -> list[tuple[int, int]]:
    """One representative per field, the lexicographically smallest of each pair."""
    if math.gcd(p, pp) != 1 or min(p, pp) < 2:
        raise ValueError(f"M({p},{pp}) is not a minimal model")
    reps = set()
    for r in range(1, p):
        for s in range(1, pp):
            reps.add(min((r, s), (p - r, pp - s)))
    return sorted(reps)


def canonical(p: int, pp: int, label: tuple[int, int]) -> tuple[int, int]:
    r, s = label
    return min((r, s), (p - r, pp - s))


def _channels(a: int, b: int, n: int) -> range:
    # truncated su(2) Clebsch-Gordan range for labels in 1..n-1
    return range(abs(a - b) + 1, min(a + b - 1, 2 * n - a - b - 1) + 1, 2)


def bpz_product(p: int, pp: int, x: tuple[int, int], y: tuple[int, int]) -> Counter:
    out: Counter = Counter()
    for r in _channels(x[0], y[0], p):
        for s in _channels(x[1], y[1], pp):
            out[canonical(p, pp, (r, s))] += 1
    return out


def central_charge(p: int, pp: int) -> Fraction:
    return 1 - Fraction(6 * (p - pp) ** 2, p * pp)


def conformal_weight(p: int, pp: int, label: tuple[int, int]) -> Fraction:
    r, s = label
    return Fraction((r * pp - s * p) ** 2 - (p - pp) ** 2, 4 * p * pp)
