"""Rational principal W-algebras: labels, S-ratios, fusion and centralizer phases.

The level is ``k = -h^vee + u/v``. A simple module carries a pair
``(lam, lam')`` with ``lam`` a level ``u - h^vee`` weight of g and ``lam'`` a
weight of the Langlands dual (a coweight of g). Pairs related by the
simultaneous simple-current action of P/Q name the same module; labels are
stored as the lexicographically smallest member of their orbit.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .cyclo import CycloNum, root_of_unity
from .fusion import FusionTable
from .liealg import (
    RootSystem,
    Weight,
    apply_simple_current,
    coweight_pairing,
    dominant_weights_of_level,
    dual_root_system,
    in_root_lattice,
    simple_current_actions,
)
from .report import Report
from .wzw import _inverse, check_simples, chi, verlinde_fusion


class InvalidWLevel(ValueError):
    pass


@dataclass(frozen=True)
class WLevel:
    rs: RootSystem
    u: int
    v: int

    def __post_init__(self):
        rs, u, v = self.rs, self.u, self.v
        if u <= 0 or v <= 0:
            raise InvalidWLevel("u and v must be positive")
        if math.gcd(u, v) != 1:
            raise InvalidWLevel(f"gcd({u}, {v}) != 1")
        if math.gcd(v, rs.lacety_r) == 1:
            ok = u >= rs.dual_coxeter_h and v >= rs.coxeter_h
            need = f"u >= {rs.dual_coxeter_h}, v >= {rs.coxeter_h}"
        else:
            ok = u >= rs.coxeter_h and v >= rs.lacety_r * rs.dual_coxeter_h
            need = f"u >= {rs.coxeter_h}, v >= {rs.lacety_r * rs.dual_coxeter_h}"
        if not ok:
            raise InvalidWLevel(f"{rs.name} at u={u}, v={v} is outside the rational window ({need})")

    @property
    def dual(self) -> RootSystem:
        return dual_root_system(self.rs)

    @property
    def k(self) -> Fraction:
        return Fraction(self.u, self.v) - self.rs.dual_coxeter_h

    @property
    def q(self) -> int:
        """v, or v / r^vee when r^vee divides v."""
        r = self.rs.lacety_r
        return self.v if math.gcd(self.v, r) == 1 else self.v // r

    @property
    def left_level(self) -> int:
        return self.u - self.rs.dual_coxeter_h

    @property
    def right_level(self) -> int:
        # equals v - h for simply-laced g
        return self.q - self.dual.dual_coxeter_h

    def describe(self) -> dict:
        return {"algebra": self.rs.name, "u": self.u, "v": self.v, "k": str(self.k)}


@dataclass(frozen=True, order=True)
class WLabel:
    left: Weight
    right: Weight

    def to_json(self) -> dict:
        return {"left": list(self.left.labels), "right": list(self.right.labels)}

    def __str__(self):
        return f"({','.join(map(str, self.left))}|{','.join(map(str, self.right))})"


def _orbit(K: WLevel, x: WLabel) -> list[WLabel]:
    if not K.rs.simply_laced:
        return [x]
    actions = simple_current_actions(K.rs)
    seen = {x}
    stack = [x]
    while stack:
        y = stack.pop()
        for a in actions:
            z = WLabel(apply_simple_current(K.rs, a, K.left_level, y.left),
                       apply_simple_current(K.rs, a, K.right_level, y.right))
            if z not in seen:
                seen.add(z)
                stack.append(z)
    return sorted(seen)


def canonical_label(K: WLevel, x: WLabel) -> WLabel:
    return _orbit(K, x)[0]


def raw_labels(K: WLevel) -> list[WLabel]:
    lefts = check_simples(K.rs, K.left_level)
    rights = dominant_weights_of_level(K.dual, K.right_level)
    return [WLabel(a, b) for a in lefts for b in rights]


def w_label_orbits(K: WLevel) -> dict[WLabel, list[WLabel]]:
    if not K.rs.simply_laced:
        warnings.warn(f"{K.rs.name}: label identification is not implemented for non-simply-laced types; "
                      "labels are left raw", stacklevel=2)
    out: dict[WLabel, list[WLabel]] = {}
    for x in raw_labels(K):
        c = canonical_label(K, x)
        out.setdefault(c, []).append(x)
    return dict(sorted(out.items()))


def w_labels(K: WLevel) -> list[WLabel]:
    return list(w_label_orbits(K))


def _pair(K: WLevel, weight: Weight, coweight_labels) -> Fraction:
    return coweight_pairing(K.rs, Weight(coweight_labels), weight)


def w_s_ratio(K: WLevel, x: WLabel, y: WLabel) -> CycloNum:
    """S_{x,y} / S_{vacuum,y} for the W-algebra character S-matrix."""
    rs, dual = K.rs, K.dual
    lam, lamp = x.left, x.right
    mu, mup = y.left, y.right
    phase = root_of_unity(
        _pair(K, mu + rs.rho, lamp.labels) + _pair(K, lam, (mup + dual.rho).labels)
    )
    dl = chi(rs, mu, rs.zero(), K.v, K.u)
    dr = chi(dual, mup, dual.zero(), K.u, K.v)
    if dl.is_zero() or dr.is_zero():
        if not rs.simply_laced:
            raise InvalidWLevel(f"{rs.name} at u={K.u}, v={K.v}: vanishing vacuum column at {y}; "
                                "S-ratios for non-simply-laced types need gcd(u, r^vee) = 1")
        raise AssertionError(f"vanishing vacuum column at {y}")
    # invert each factor in its own (smaller) field
    left = chi(rs, mu, lam, K.v, K.u) * _inverse(dl)
    right = chi(dual, mup, lamp, K.u, K.v) * _inverse(dr)
    return phase * left * right


def w_fusion(K: WLevel) -> FusionTable:
    """Fusion rules as the product of the two affine fusion rings, reduced to orbits."""
    left = verlinde_fusion(K.rs, K.left_level)
    right = verlinde_fusion(K.dual, K.right_level)
    labels = w_labels(K)
    index = {x: i for i, x in enumerate(labels)}
    mult: dict[tuple[int, int, int], int] = {}
    for i, x in enumerate(labels):
        for j, y in enumerate(labels):
            lrow = left.product(x.left, y.left)
            rrow = right.product(x.right, y.right)
            for phi, a in lrow.items():
                for phip, b in rrow.items():
                    key = (i, j, index[canonical_label(K, WLabel(phi, phip))])
                    mult[key] = mult.get(key, 0) + a * b
    return FusionTable(tuple(labels), mult)


def w_fusion_from_representatives(K: WLevel, choose) -> FusionTable:
    """Same product rule, but evaluated on representatives picked by ``choose(orbit)``."""
    left = verlinde_fusion(K.rs, K.left_level)
    right = verlinde_fusion(K.dual, K.right_level)
    orbits = w_label_orbits(K)
    labels = list(orbits)
    index = {x: i for i, x in enumerate(labels)}
    mult: dict[tuple[int, int, int], int] = {}
    for i, x in enumerate(labels):
        rx = choose(orbits[x])
        for j, y in enumerate(labels):
            ry = choose(orbits[y])
            for phi, a in left.product(rx.left, ry.left).items():
                for phip, b in right.product(rx.right, ry.right).items():
                    key = (i, j, index[canonical_label(K, WLabel(phi, phip))])
                    mult[key] = mult.get(key, 0) + a * b
    return FusionTable(tuple(labels), mult)


def pairing(K: WLevel, lam: Weight, lamp: Weight) -> Fraction:
    """(lam, lam') between a weight and a coweight."""
    return coweight_pairing(K.rs, lamp, lam)


class CentralizerMismatch(AssertionError):
    pass


def centralizer_monodromy(K: WLevel, lam: Weight, lamp: Weight) -> tuple[CycloNum, CycloNum]:
    """The monodromy scalar of (lam, 0) around (0, lam'), computed two ways.

    First: S_{X,Y} S_{0,0} / (S_{0,X} S_{0,Y}). Second: S_{X,Y} / S_{0,Z}
    with Z = (lam, lam'). Both only use normalized ratios.
    """
    zero_l, zero_r = K.rs.zero(), K.dual.zero()
    X, Y, Z = WLabel(lam, zero_r), WLabel(zero_l, lamp), WLabel(lam, lamp)
    vac = WLabel(zero_l, zero_r)
    sxy = w_s_ratio(K, X, Y)
    first = sxy / w_s_ratio(K, X, vac)
    second = sxy * w_s_ratio(K, Y, vac) / w_s_ratio(K, Z, vac)
    return first, second


def centralizer_phase(K: WLevel, lam: Weight, lamp: Weight) -> CycloNum:
    first, second = centralizer_monodromy(K, lam, lamp)
    expected = root_of_unity(pairing(K, lam, lamp))
    if not (first == expected and second == expected):
        raise CentralizerMismatch(f"monodromy at ({lam}, {lamp}) is {first!r} / {second!r}, expected {expected!r}")
    return first


def verify_centralizer(K: WLevel) -> Report:
    rep = Report("centralizer", K.describe())
    lefts = check_simples(K.rs, K.left_level)
    rights = dominant_weights_of_level(K.dual, K.right_level)
    for lam in lefts:
        in_q = in_root_lattice(K.rs, lam)
        for lamp in rights:
            first, second = centralizer_monodromy(K, lam, lamp)
            expected = root_of_unity(pairing(K, lam, lamp))
            ok = first == expected and second == expected
            if in_q:
                ok = ok and first == 1
            rep.check(f"monodromy({lam}, {lamp}) = e(({lam},{lamp}))", ok,
                      lam=lam, lamp=lamp, root_lattice=in_q, value=first, pairing=str(pairing(K, lam, lamp)))
    return rep


def verify_factorization(K: WLevel) -> Report:
    """s((lam, lam'), y) = s((lam, 0), y) s((0, lam'), y) for all labels."""
    rep = Report("w-factorization", K.describe())
    labels = w_labels(K)
    zl, zr = K.rs.zero(), K.dual.zero()
    for x in labels:
        for y in labels:
            lhs = w_s_ratio(K, x, y)
            rhs = w_s_ratio(K, WLabel(x.left, zr), y) * w_s_ratio(K, WLabel(zl, x.right), y)
            rep.check(f"s({x},{y}) factorizes", lhs == rhs, x=x, y=y, value=lhs)
    return rep


def verify_w_ring(K: WLevel) -> Report:
    """Normalized S-columns are characters of the computed fusion ring."""
    rep = Report("w-ring", K.describe())
    table = w_fusion(K)
    labels = list(table.simples)
    S = [[w_s_ratio(K, x, y) for y in labels] for x in labels]
    for b, y in enumerate(labels):
        for i in range(len(labels)):
            for j in range(i, len(labels)):
                lhs = S[i][b] * S[j][b]
                rhs = CycloNum.from_rational(0)
                for k, c in table.row(i, j).items():
                    rhs = rhs + c * S[k][b]
                rep.check(f"s({labels[i]},{y}) s({labels[j]},{y}) = sum N s", lhs == rhs,
                          x=labels[i], z=labels[j], y=y, value=lhs)
    return rep


def verify_orbit_invariance(K: WLevel) -> Report:
    """S-ratios do not depend on the representative of either label."""
    rep = Report("w-orbit-invariance", K.describe())
    orbits = w_label_orbits(K)
    for x, xs in orbits.items():
        for y, ys in orbits.items():
            base = w_s_ratio(K, x, y)
            for a in xs:
                for b in ys:
                    val = w_s_ratio(K, a, b)
                    rep.check(f"s({a},{b}) = s({x},{y})", val == base, value=val)
    return rep


def dual_rho_discrepancies(K: WLevel) -> list[dict]:
    """Compare the dual-side Weyl sums shifted by the dual Weyl vector and by rho of g.

    Only differs for non-simply-laced g, where rho of g, read as a coweight,
    has labels (alpha_i, alpha_i) / 2.
    """
    rs, dual = K.rs, K.dual
    rho_as_coweight = list(rs.half_lengths)
    out = []
    rights = dominant_weights_of_level(dual, K.right_level)
    for lamp in rights:
        for mup in rights:
            a = chi(dual, mup, lamp, K.u, K.v)
            b = chi(dual, mup, lamp, K.u, K.v, shift=rho_as_coweight)
            if a != b:
                out.append({"lamp": list(lamp.labels), "mup": list(mup.labels)})
    return out
