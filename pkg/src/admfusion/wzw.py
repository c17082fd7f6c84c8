"""Positive-integer level: Weyl sums, S-matrix ratios and fusion rules.

Two independent routes to the level-m fusion rules are provided:

* :func:`verlinde_fusion` solves the ring-representation identity
  ``s(lam, mu) s(nu, mu) = sum_phi N_{lam nu}^phi s(phi, mu)`` exactly over
  the cyclotomic field, where ``s`` are the normalized S-ratios built from
  the Weyl-alternating sums :func:`chi`.
* :func:`kac_walton_fusion` decomposes the finite-dimensional tensor product
  with Freudenthal characters and folds it into the level-m alcove.
"""
from __future__ import annotations

import functools
import math
from collections import Counter
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import linalg
from .config import LIMITS
from .cyclo import CycloNum
from .fusion import FusionTable
from .liealg import (
    CapExceeded,
    RootSystem,
    Weight,
    _weyl_arrays,
    dominant_representative,
    dominant_weights_of_level,
    inner_product,
    weyl_orbit,
)


class FusionError(ArithmeticError):
    """A solved fusion coefficient is not a nonnegative integer."""


def _as_fractions(v: Sequence) -> tuple[list[int], int]:
    fr = [Fraction(x) for x in v]
    den = 1
    for x in fr:
        den = math.lcm(den, x.denominator)
    return [int(x * den) for x in fr], den


@functools.lru_cache(maxsize=200_000)
def _chi(rs: RootSystem, x: tuple, y: tuple, r: int, u: int) -> CycloNum:
    mats, signs, _ = _weyl_arrays(rs, LIMITS.weyl_max)
    xi, dx = _as_fractions(x)
    yi, dy = _as_fractions(y)
    xg = np.array(xi, dtype=np.int64) @ np.array(rs.gram_scaled, dtype=np.int64)
    pairings = (mats @ np.array(yi, dtype=np.int64)) @ xg
    order = rs.lattice_level_N * dx * dy * u
    exps = np.mod(-r * pairings, order)
    counts = np.bincount(exps, weights=signs, minlength=order)
    return CycloNum.from_powers(order, [int(c) for c in counts])


def chi(rs: RootSystem, lam: Weight, mu: Weight, r: int, u: int, shift: Sequence | None = None) -> CycloNum:
    """sum_w sign(w) exp(-2 pi i (r/u) (lam + rho, w(mu + rho))), exactly.

    ``shift`` replaces rho (e.g. a rational coweight transported to the dual side).
    """
    if u <= 0:
        raise ValueError("u must be positive")
    s = tuple(Fraction(a) for a in (shift if shift is not None else rs.rho.labels))
    x = tuple(Fraction(a) + b for a, b in zip(lam.labels, s))
    y = tuple(Fraction(a) + b for a, b in zip(mu.labels, s))
    return _chi(rs, x, y, int(r), int(u))


def reevaluate_at(rs: RootSystem, lam: Weight, mu: Weight, r: int, u: int) -> CycloNum:
    """chi at the root of unity e(-r/u); realizes sigma_r on Weyl-sum values."""
    return chi(rs, lam, mu, r, u)


def chi_ratio(rs: RootSystem, lam: Weight, mu: Weight, r: int, u: int) -> CycloNum:
    den = chi(rs, rs.zero(), mu, r, u)
    if den.is_zero():
        raise ZeroDivisionError(f"chi_{mu}(e(-{r}/{u}); 0) vanishes")
    return chi(rs, lam, mu, r, u) * _inverse(den)


@functools.lru_cache(maxsize=100_000)
def _inverse(x: CycloNum) -> CycloNum:
    return x.invert()


def check_simples(rs: RootSystem, m: int) -> list[Weight]:
    simples = dominant_weights_of_level(rs, m)
    if len(simples) > LIMITS.simples_max:
        raise CapExceeded(f"|P_+^{m}({rs.name})| = {len(simples)} exceeds cap {LIMITS.simples_max}")
    return simples


def s_ratio_integer_level(rs: RootSystem, m: int, lam: Weight, mu: Weight) -> CycloNum:
    """S_{lam,mu} / S_{0,mu} at level m, i.e. chi ratio at e(-1/(m + h^vee))."""
    u = m + rs.dual_coxeter_h
    for w in (lam, mu):
        if not w.is_dominant() or rs.level(w) > m:
            raise ValueError(f"{w} is not in P_+^{m}")
    den = chi(rs, rs.zero(), mu, 1, u)
    if den.is_zero():
        raise AssertionError(f"zero quantum dimension for {mu} at level {m}")
    return chi(rs, lam, mu, 1, u) * _inverse(den)


def s_ratio_matrix(rs: RootSystem, simples: Sequence[Weight], r: int, u: int) -> list[list[CycloNum]]:
    """Matrix [lam][mu] of chi ratios at e(-r/u)."""
    return [[chi_ratio(rs, lam, mu, r, u) for mu in simples] for lam in simples]


def fusion_from_ratios(simples: Sequence, s: Sequence[Sequence[CycloNum]]) -> FusionTable:
    """Solve the ring-representation identity for every unordered pair of simples.

    ``s[a][b]`` is the normalized ratio of simple ``a`` against column ``b``;
    the ratio matrix must be invertible.
    """
    n = len(simples)
    A = [[s[phi][mu] for phi in range(n)] for mu in range(n)]
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    B = [[s[i][mu] * s[j][mu] for (i, j) in pairs] for mu in range(n)]
    X = linalg.solve(A, B)
    mult: dict[tuple[int, int, int], int] = {}
    for col, (i, j) in enumerate(pairs):
        for phi in range(n):
            val = X[phi][col]
            if not val.is_rational():
                raise FusionError(f"N[{simples[i]},{simples[j]}]^{simples[phi]} = {val!r} is not rational")
            q = val.to_fraction()
            if q.denominator != 1 or q < 0:
                raise FusionError(f"N[{simples[i]},{simples[j]}]^{simples[phi]} = {q} is not a nonnegative integer")
            if q:
                mult[(i, j, phi)] = mult[(j, i, phi)] = int(q)
    return FusionTable(tuple(simples), mult)


@functools.lru_cache(maxsize=None)
def verlinde_fusion(rs: RootSystem, m: int) -> FusionTable:
    if m < 0:
        raise ValueError("level must be nonnegative")
    simples = check_simples(rs, m)
    u = m + rs.dual_coxeter_h
    return fusion_from_ratios(simples, s_ratio_matrix(rs, simples, 1, u))


def verlinde_triple_product(rs: RootSystem, m: int) -> FusionTable:
    """Fusion rules via the explicit inverse of the ratio matrix (verification route)."""
    simples = check_simples(rs, m)
    u = m + rs.dual_coxeter_h
    s = s_ratio_matrix(rs, simples, 1, u)
    n = len(simples)
    A = [[s[phi][mu] for phi in range(n)] for mu in range(n)]
    Ainv = linalg.inverse(A)
    mult = {}
    for i in range(n):
        for j in range(n):
            for phi in range(n):
                acc = sum((Ainv[phi][mu] * s[i][mu] * s[j][mu] for mu in range(n)), CycloNum.from_rational(0))
                q = acc.to_fraction()
                if q.denominator != 1 or q < 0:
                    raise FusionError(f"triple product gave {q}")
                if q:
                    mult[(i, j, phi)] = int(q)
    return FusionTable(tuple(simples), mult)


# -- finite-dimensional characters --------------------------------------------

@functools.lru_cache(maxsize=None)
def _positive_root_weights(rs: RootSystem) -> tuple[Weight, ...]:
    return tuple(rs.root_weight(c) for c in rs.positive_roots)


def _height(rs: RootSystem, w: Weight) -> Fraction:
    return inner_product(rs, w, rs.rho)


@functools.lru_cache(maxsize=None)
def dominant_character(rs: RootSystem, lam: Weight) -> dict[Weight, int]:
    """Multiplicities of the dominant weights of V(lam), by Freudenthal's formula."""
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    roots = _positive_root_weights(rs)
    dom = {lam}
    stack = [lam]
    while stack:
        x = stack.pop()
        for beta in roots:
            y = x - beta
            if y.is_dominant() and y not in dom:
                dom.add(y)
                stack.append(y)
    order = sorted(dom, key=lambda w: (-_height(rs, w), w.labels))
    shifted = lam + rs.rho
    top = inner_product(rs, shifted, shifted)
    mult = {lam: 1}
    for mu in order[1:]:
        acc = Fraction(0)
        for beta in roots:
            k = 1
            while True:
                nu = mu + k * beta
                rep, _ = dominant_representative(rs, nu)
                if rep not in mult:
                    break
                acc += mult[rep] * inner_product(rs, nu, beta)
                k += 1
        mr = mu + rs.rho
        value = 2 * acc / (top - inner_product(rs, mr, mr))
        if value.denominator != 1:
            raise ArithmeticError(f"non-integral multiplicity {value} at {mu}")
        mult[mu] = int(value)
    return {w: m for w, m in mult.items() if m}


@functools.lru_cache(maxsize=None)
def character(rs: RootSystem, lam: Weight) -> dict[Weight, int]:
    """All weights of V(lam) with multiplicities."""
    out = {}
    for mu, m in dominant_character(rs, lam).items():
        for w in weyl_orbit(rs, mu):
            out[w] = m
    return out


def tensor_oracle(rs: RootSystem, lam: Weight, nu: Weight) -> Counter:
    """Decompose V(lam) x V(nu) into irreducibles.

    The character product is formed by convolving weight multisets; highest
    weights are then peeled off one at a time.
    """
    if not (lam.is_dominant() and nu.is_dominant()):
        raise ValueError("tensor_oracle needs dominant weights")
    chl, chn = character(rs, lam), character(rs, nu)
    product: Counter = Counter()
    for a, ma in chl.items():
        for b, mb in chn.items():
            w = a + b
            if w.is_dominant():
                product[w] += ma * mb
    result: Counter = Counter()
    while True:
        live = [w for w, m in product.items() if m]
        if not live:
            break
        top = max(live, key=lambda w: (_height(rs, w), w.labels))
        c = product[top]
        if c < 0:
            raise ArithmeticError(f"negative multiplicity at {top}")
        result[top] += c
        for w, m in dominant_character(rs, top).items():
            product[w] -= c * m
    return result


def fold_into_alcove(rs: RootSystem, m: int, weight: Weight) -> tuple[Weight | None, int]:
    """Affine Weyl folding of ``weight`` into P_+^m; returns (image, sign) or (None, 0) on a wall."""
    u = m + rs.dual_coxeter_h
    x = weight + rs.rho
    sign = 1
    while True:
        i = next((k for k, a in enumerate(x.labels) if a < 0), None)
        if i is not None:
            x = rs.reflect(i, x)
            sign = -sign
            continue
        lv = rs.level(x)
        if lv > u:
            x = x - (lv - u) * rs.theta
            sign = -sign
            continue
        break
    if any(a == 0 for a in x.labels) or rs.level(x) == u:
        return None, 0
    return x - rs.rho, sign


def kac_walton_fusion(rs: RootSystem, m: int, lam: Weight, nu: Weight) -> dict[Weight, int]:
    out: Counter = Counter()
    for phi, c in tensor_oracle(rs, lam, nu).items():
        image, sign = fold_into_alcove(rs, m, phi)
        if image is not None:
            out[image] += sign * c
    if any(c < 0 for c in out.values()):
        raise FusionError(f"negative folded multiplicity for {lam} x {nu} at level {m}")
    return {w: c for w, c in sorted(out.items()) if c}


def kac_walton_table(rs: RootSystem, m: int) -> FusionTable:
    simples = check_simples(rs, m)
    index = {w: i for i, w in enumerate(simples)}
    mult = {}
    for i, lam in enumerate(simples):
        for j, nu in enumerate(simples):
            for phi, c in kac_walton_fusion(rs, m, lam, nu).items():
                mult[(i, j, index[phi])] = c
    return FusionTable(tuple(simples), mult)
