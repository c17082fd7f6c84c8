"""Ordinary modules of affine vertex algebras at admissible level.

The level is ``-h^vee + u/v`` with ``gcd(u, v) = 1``. Simple ordinary
modules are labelled by ``P_+^{u - h^vee}`` and their normalized open Hopf
links are the chi ratios evaluated at ``e(-v/u)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .cyclo import CycloNum
from .fusion import FusionTable
from .liealg import LieAlgebraError, RootSystem, Weight
from .report import Report
from .wzw import check_simples, chi, s_ratio_integer_level, verlinde_fusion


class InvalidLevel(ValueError):
    pass


@dataclass(frozen=True)
class AdmissibleLevel:
    rs: RootSystem
    u: int
    v: int

    def __post_init__(self):
        u, v, rs = self.u, self.v, self.rs
        if u <= 0 or v <= 0:
            raise InvalidLevel("u and v must be positive")
        if math.gcd(u, v) != 1:
            raise InvalidLevel(f"gcd({u}, {v}) != 1")
        if math.gcd(v, rs.lacety_r) == 1:
            if u < rs.dual_coxeter_h:
                raise InvalidLevel(f"{rs.name}: need u >= h^vee = {rs.dual_coxeter_h}, got u = {u}")
        elif u < rs.coxeter_h:
            raise InvalidLevel(f"{rs.name}: need u >= h = {rs.coxeter_h} when r^vee | v, got u = {u}")

    @property
    def level(self) -> Fraction:
        return Fraction(self.u, self.v) - self.rs.dual_coxeter_h

    @property
    def integer_level(self) -> int:
        """u - h^vee: the level of the rational affine algebra sharing the simple labels."""
        return self.u - self.rs.dual_coxeter_h

    def describe(self) -> dict:
        return {"algebra": self.rs.name, "u": self.u, "v": self.v, "level": str(self.level)}


def _require_simply_laced(rs: RootSystem) -> None:
    if not rs.simply_laced:
        raise LieAlgebraError(f"{rs.name} is not simply-laced; ordinary fusion results need ADE type")


def ordinary_simples(L: AdmissibleLevel) -> list[Weight]:
    return check_simples(L.rs, L.integer_level)


def hopf_ratio(L: AdmissibleLevel, lam: Weight, mu: Weight) -> CycloNum:
    """chi_mu(e(-v/u); lam) / chi_mu(e(-v/u); 0)."""
    den = chi(L.rs, L.rs.zero(), mu, L.v, L.u)
    if den.is_zero():
        raise AssertionError(f"chi_{mu}(e(-{L.v}/{L.u}); 0) vanishes")
    return chi(L.rs, lam, mu, L.v, L.u) / den


def hopf_matrix(L: AdmissibleLevel) -> list[list[CycloNum]]:
    simples = ordinary_simples(L)
    return [[hopf_ratio(L, lam, mu) for mu in simples] for lam in simples]


def ordinary_fusion(L: AdmissibleLevel) -> FusionTable:
    _require_simply_laced(L.rs)
    return verlinde_fusion(L.rs, L.integer_level)


def verify_verlinde_ordinary(L: AdmissibleLevel) -> Report:
    """Check that every Hopf column is a character of the ordinary fusion ring."""
    _require_simply_laced(L.rs)
    table = ordinary_fusion(L)
    simples = list(table.simples)
    H = hopf_matrix(L)
    rep = Report("hopf-verlinde", L.describe())
    n = len(simples)
    for b, mu in enumerate(simples):
        for i, lam in enumerate(simples):
            for j, nu in enumerate(simples):
                lhs = H[i][b] * H[j][b]
                rhs = CycloNum.from_rational(0)
                for k, c in table.row(i, j).items():
                    rhs = rhs + c * H[k][b]
                rep.check(
                    f"h({lam},{mu}) h({nu},{mu}) = sum N h(phi,{mu})",
                    lhs == rhs,
                    lam=lam, nu=nu, mu=mu, value=lhs,
                    **({} if lhs == rhs else {"rhs": rhs}),
                )
    rep.header["simples"] = [list(s.labels) for s in simples]
    rep.header["identities"] = n**3
    return rep


def verify_galois_twist(L: AdmissibleLevel) -> Report:
    """Galois image of the integer-level ratios against the admissible ratios."""
    N = L.rs.lattice_level_N
    if math.gcd(N, L.v) != 1:
        raise InvalidLevel(f"gcd(N, v) = gcd({N}, {L.v}) != 1: sigma_v is not a field automorphism")
    rep = Report("galois", {**L.describe(), "N": N, "N_integral": L.rs.lattice_level_integral})
    simples = ordinary_simples(L)
    for lam in simples:
        for mu in simples:
            twisted = s_ratio_integer_level(L.rs, L.integer_level, lam, mu).galois(L.v)
            target = hopf_ratio(L, lam, mu)
            rep.check(f"sigma_v s({lam},{mu}) = h({lam},{mu})", twisted == target,
                      lam=lam, mu=mu, value=target, **({} if twisted == target else {"twisted": twisted}))
    return rep


@dataclass(frozen=True)
class Modularity:
    gcd_test: bool
    rank_test: bool
    rank: int
    size: int

    @property
    def consistent(self) -> bool:
        return self.rank_test or not self.gcd_test


def is_modular(L: AdmissibleLevel) -> Modularity:
    _require_simply_laced(L.rs)
    H = hopf_matrix(L)
    r = linalg.rank(H)
    return Modularity(
        gcd_test=math.gcd(L.rs.lattice_level_N, L.v) == 1,
        rank_test=r == len(H),
        rank=r,
        size=len(H),
    )


def verify_modularity(L: AdmissibleLevel) -> Report:
    """Report for the modularity decision; passes only when the category is modular."""
    m = is_modular(L)
    rep = Report("modularity", {**L.describe(), "N": L.rs.lattice_level_N,
                                "N_integral": L.rs.lattice_level_integral,
                                "rank": m.rank, "size": m.size,
                                "verdict": "modular" if m.rank_test else "singular"})
    rep.check("gcd(N, v) = 1", m.gcd_test)
    rep.check("Hopf matrix has full rank", m.rank_test, rank=m.rank, size=m.size)
    rep.check("gcd(N, v) = 1 implies full rank", m.consistent)
    return rep
