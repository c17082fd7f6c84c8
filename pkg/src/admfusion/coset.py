"""Coset bookkeeping for L_ell(g) x L_1(g) over L_{ell+1}(g) x W_k(g).

With ``ell = -h^vee + u/v`` the branching terms for a pair (mu, nu) are the
level ``u + v - h^vee`` weights lambda congruent to mu + nu modulo Q, each
paired with the W-algebra label (lambda, mu) at ``WLevel(u + v, u)``.
Conformal weights of W-modules are only extracted modulo 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .admissible import AdmissibleLevel
from .cyclo import root_of_unity
from .liealg import (
    LieAlgebraError,
    RootSystem,
    Weight,
    discriminant_group,
    dominant_weights_of_level,
    in_root_lattice,
    inner_product,
)
from .report import Report
from .walg import WLabel, WLevel, _orbit, pairing, raw_labels
from .wzw import check_simples


@dataclass(frozen=True)
class CosetDecomposition:
    L: AdmissibleLevel
    mu: Weight
    nu: Weight
    terms: tuple[tuple[Weight, WLabel], ...]

    @property
    def w_level(self) -> WLevel:
        return WLevel(self.L.rs, self.L.u + self.L.v, self.L.u)

    def to_json(self) -> dict:
        K = self.w_level
        return {
            "ell": f"{self.L.u}/{self.L.v} - {self.L.rs.dual_coxeter_h}",
            "mu": list(self.mu.labels),
            "nu": list(self.nu.labels),
            "terms": [
                {"lambda": list(lam.labels), "wlabel": x.to_json(), "weight_mod1": str(coset_weight_mod1(K, x))}
                for lam, x in self.terms
            ],
        }


def _require_simply_laced(rs: RootSystem) -> None:
    if not rs.simply_laced:
        raise LieAlgebraError(f"coset decompositions need a simply-laced type, got {rs.name}")


def _check_label(rs: RootSystem, w: Weight, m: int, what: str) -> None:
    if len(w) != rs.rank or not w.is_dominant() or rs.level(w) > m:
        raise ValueError(f"{what} = {w} is not in P_+^{m}({rs.name})")


def gko_decompose(L: AdmissibleLevel, mu: Weight, nu: Weight) -> CosetDecomposition:
    rs = L.rs
    _require_simply_laced(rs)
    _check_label(rs, mu, L.integer_level, "mu")
    _check_label(rs, nu, 1, "nu")
    top = L.u + L.v - rs.dual_coxeter_h
    terms = tuple(
        (lam, WLabel(lam, mu))
        for lam in dominant_weights_of_level(rs, top)
        if in_root_lattice(rs, lam - mu - nu)
    )
    return CosetDecomposition(L, mu, nu, terms)


def affine_conformal_weight(rs: RootSystem, u: int, v: int, lam: Weight) -> Fraction:
    """(lam, lam + 2 rho) / (2 (k + h^vee)) with k + h^vee = u / v."""
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    return inner_product(rs, lam, lam + rs.rho * 2) * Fraction(v, 2 * u)


def _coset_form(K: WLevel, x: WLabel) -> tuple[int, int, Weight, Weight]:
    """(u, v, lam, mu) with K = WLevel(u + v, u) and x = (lam, mu), using duality if needed."""
    if K.u > K.v:
        return K.v, K.u - K.v, x.left, x.right
    # simply-laced duality swaps u, v and the two labels
    return K.u, K.v - K.u, x.right, x.left


def coset_weight_mod1(K: WLevel, x: WLabel) -> Fraction:
    """h_ell(mu) + h_1(nu) - h_{ell+1}(lam) mod 1, with nu the level-1 class of lam - mu."""
    rs = K.rs
    _require_simply_laced(rs)
    u, v, lam, mu = _coset_form(K, x)
    group = discriminant_group(rs)
    nu = group.representatives[group.index_of(rs, lam - mu)]
    h = (
        affine_conformal_weight(rs, u, v, mu)
        + affine_conformal_weight(rs, rs.dual_coxeter_h + 1, 1, nu)
        - affine_conformal_weight(rs, u + v, v, lam)
    )
    return h - (h.numerator // h.denominator)


def verify_partition(L: AdmissibleLevel) -> Report:
    """Every raw W-label (lam, mu) appears in exactly one decomposition."""
    rs = L.rs
    _require_simply_laced(rs)
    rep = Report("coset-partition", L.describe())
    mus = check_simples(rs, L.integer_level)
    nus = dominant_weights_of_level(rs, 1)
    lams = check_simples(rs, L.u + L.v - rs.dual_coxeter_h)
    seen: dict[WLabel, int] = {}
    total = 0
    for mu in mus:
        for nu in nus:
            d = gko_decompose(L, mu, nu)
            total += len(d.terms)
            for lam, x in d.terms:
                seen[x] = seen.get(x, 0) + 1
    expected = {WLabel(lam, mu) for lam in lams for mu in mus}
    for x in sorted(expected):
        rep.check(f"{x} covered once", seen.get(x, 0) == 1, label=x, count=seen.get(x, 0))
    rep.check("no stray labels", set(seen) <= expected)
    rep.check("term count = |P_+^{ell+1}| |P_+^ell|", total == len(lams) * len(mus),
              total=total, expected=len(lams) * len(mus))
    rep.header["decompositions"] = len(mus) * len(nus)
    return rep


def verify_twist_balance(K: WLevel, sign: int | None = None) -> Report:
    """Compare e(h_Z - h_X - h_Y) with the centralizer phase e((lam, lam')).

    X = (lam, 0), Y = (0, lam'), Z = (lam, lam'). The balance must equal the
    centralizer phase raised to a single global sign. If ``sign`` is None it
    is fixed by the first pair that can tell +1 and -1 apart; when no pair
    can, the sign is recorded as undetermined.
    """
    rs = K.rs
    _require_simply_laced(rs)
    rep = Report("twist-balance", K.describe())
    N = rs.lattice_level_N
    zl, zr = rs.zero(), K.dual.zero()
    chosen = sign
    pairs = []
    for x in raw_labels(K):
        lam, lamp = x.left, x.right
        delta = coset_weight_mod1(K, x) - coset_weight_mod1(K, WLabel(lam, zr)) - coset_weight_mod1(K, WLabel(zl, lamp))
        p = pairing(K, lam, lamp)
        pairs.append((lam, lamp, delta, p))
        if chosen is None and (2 * p).denominator != 1:
            chosen = 1 if (delta - p).denominator == 1 else -1
    rep.header["sign"] = chosen if chosen is not None else "undetermined"
    for lam, lamp, delta, p in pairs:
        balance = root_of_unity(delta)
        cent = root_of_unity(p)
        ok = balance == cent if chosen in (None, 1) else balance == cent.conjugate()
        if chosen is None:
            ok = ok or balance == cent.conjugate()
        if in_root_lattice(rs, lam):
            ok = ok and balance == 1
        rep.check(f"balance({lam}, {lamp}) matches centralizer", ok,
                  lam=lam, lamp=lamp, balance=str(delta), pairing=str(p))
        rep.check(f"balance({lam}, {lamp}) is a 2N-th root of unity", (2 * N * delta).denominator == 1)
    for x in raw_labels(K):
        weights = {coset_weight_mod1(K, y) for y in _orbit(K, x)}
        rep.check(f"weight of {x} is orbit invariant", len(weights) == 1, weights=sorted(map(str, weights)))
    return rep
