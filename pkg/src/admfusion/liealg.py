"""Root systems, weight lattices and Weyl groups of simple Lie algebras.

Weights are written in the fundamental-weight basis (Dynkin labels). The
Cartan matrix follows the convention ``cartan[i][j] = <alpha_i^vee, alpha_j>``,
so the Dynkin labels of the simple root ``alpha_j`` form column ``j``.
The invariant form is normalized so that long roots have squared length 2.
"""
from __future__ import annotations

import functools
import itertools
import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from . import cache

DEFAULT_WEYL_MAX = 10**6


class LieAlgebraError(ValueError):
    """Invalid root system data or weight."""


class CapExceeded(RuntimeError):
    """An enumeration would exceed its configured size cap."""


@dataclass(frozen=True, order=True)
class Weight:
    labels: tuple[int, ...]

    def __init__(self, labels: Sequence[int]):
        object.__setattr__(self, "labels", tuple(int(a) for a in labels))

    @classmethod
    def zero(cls, rank: int) -> Weight:
        return cls((0,) * rank)

    @classmethod
    def fundamental(cls, rank: int, i: int) -> Weight:
        """The i-th fundamental weight, 1-based as in Bourbaki."""
        return cls(tuple(int(k == i - 1) for k in range(rank)))

    def __len__(self):
        return len(self.labels)

    def __iter__(self) -> Iterator[int]:
        return iter(self.labels)

    def __getitem__(self, i):
        return self.labels[i]

    def __add__(self, other: Weight) -> Weight:
        _same_rank(self, other)
        return Weight([a + b for a, b in zip(self.labels, other.labels)])

    def __sub__(self, other: Weight) -> Weight:
        _same_rank(self, other)
        return Weight([a - b for a, b in zip(self.labels, other.labels)])

    def __neg__(self) -> Weight:
        return Weight([-a for a in self.labels])

    def __mul__(self, k: int) -> Weight:
        return Weight([k * a for a in self.labels])

    __rmul__ = __mul__

    def is_dominant(self) -> bool:
        return all(a >= 0 for a in self.labels)

    def __repr__(self):
        return f"Weight({list(self.labels)})"

    def __str__(self):
        return "(" + ",".join(map(str, self.labels)) + ")"


def _same_rank(x: Weight, y: Weight) -> None:
    if len(x) != len(y):
        raise LieAlgebraError(f"rank mismatch: {len(x)} vs {len(y)}")


@dataclass(frozen=True)
class WeylElement:
    matrix: tuple[tuple[int, ...], ...]
    sign: int
    length: int

    def __call__(self, weight: Weight) -> Weight:
        return Weight([sum(m * a for m, a in zip(row, weight.labels)) for row in self.matrix])


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    gram_fundamental: tuple[tuple[Fraction, ...], ...]
    simple_roots: tuple[Weight, ...]
    fundamental_weights: tuple[tuple[Fraction, ...], ...]
    rho: Weight
    theta: Weight
    coxeter_h: int
    dual_coxeter_h: int
    lacety_r: int
    lattice_level_N: int
    half_lengths: tuple[Fraction, ...] = field(repr=False)
    positive_roots: tuple[tuple[int, ...], ...] = field(repr=False)
    marks: tuple[int, ...] = field(repr=False)
    comarks: tuple[int, ...] = field(repr=False)
    cartan_inverse: tuple[tuple[Fraction, ...], ...] = field(repr=False)
    gram_scaled: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def simply_laced(self) -> bool:
        return self.lacety_r == 1

    @property
    def lattice_level_integral(self) -> int:
        """Smallest N with N*P an integral lattice, i.e. N^2 (x, y) in Z."""
        n = 1
        while any((n * n * g).denominator != 1 for row in self.gram_fundamental for g in row):
            n += 1
        return n

    def weight(self, *labels: int) -> Weight:
        if len(labels) != self.rank:
            raise LieAlgebraError(f"{self.name} weights need {self.rank} labels, got {len(labels)}")
        return Weight(labels)

    def zero(self) -> Weight:
        return Weight.zero(self.rank)

    def omega(self, i: int) -> Weight:
        if not 1 <= i <= self.rank:
            raise LieAlgebraError(f"fundamental weight index {i} outside 1..{self.rank}")
        return Weight.fundamental(self.rank, i)

    def level(self, weight: Weight) -> int:
        """(weight, theta^vee): the smallest level at which the weight is integrable."""
        return sum(c * a for c, a in zip(self.comarks, weight.labels))

    def reflect(self, i: int, weight: Weight) -> Weight:
        a = weight.labels
        return Weight([a[k] - a[i] * self.cartan[k][i] for k in range(self.rank)])

    def root_weight(self, coords: Sequence[int]) -> Weight:
        """Dynkin labels of sum_j coords[j] alpha_j."""
        return Weight([sum(self.cartan[i][j] * c for j, c in enumerate(coords)) for i in range(self.rank)])

    def __hash__(self):
        return hash((self.family, self.rank, self.cartan))

    def __eq__(self, other):
        return isinstance(other, RootSystem) and (self.family, self.rank, self.cartan) == (
            other.family, other.rank, other.cartan)


# -- construction -----------------------------------------------------------

_VALID = {"A": 1, "B": 2, "C": 3, "D": 4}
_EXCEPTIONAL = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


def _check_type(family: str, rank: int, allow_small: bool = False) -> None:
    if family in _VALID:
        lo = _VALID[family]
        if allow_small and family == "C":
            lo = 2
        if rank < lo:
            raise LieAlgebraError(f"{family}{rank} is not a valid simple type ({family}_n needs n >= {lo})")
    elif family in _EXCEPTIONAL:
        if rank not in _EXCEPTIONAL[family]:
            raise LieAlgebraError(f"{family}{rank} is not a valid simple type")
    else:
        raise LieAlgebraError(f"unknown family {family!r}")


def _symmetric_form(family: str, n: int) -> list[list[Fraction]]:
    """(alpha_i, alpha_j) in Bourbaki numbering, long roots of length 2."""
    B = [[Fraction(0)] * n for _ in range(n)]

    def link(i, j, v):
        B[i][j] = B[j][i] = Fraction(v)

    if family in "ABCD":
        for i in range(n):
            B[i][i] = Fraction(2)
        for i in range(n - 1):
            link(i, i + 1, -1)
        if family == "B":
            B[n - 1][n - 1] = Fraction(1)
        elif family == "C":
            for i in range(n - 1):
                B[i][i] = Fraction(1)
            for i in range(n - 2):
                link(i, i + 1, Fraction(-1, 2))
        elif family == "D":
            link(n - 2, n - 1, 0)
            link(n - 3, n - 1, -1)
    elif family == "E":
        for i in range(n):
            B[i][i] = Fraction(2)
        link(0, 2, -1)
        link(1, 3, -1)
        for i in range(2, n - 1):
            link(i, i + 1, -1)
    elif family == "F":
        B[0][0] = B[1][1] = Fraction(2)
        B[2][2] = B[3][3] = Fraction(1)
        link(0, 1, -1)
        link(1, 2, -1)
        link(2, 3, Fraction(-1, 2))
    elif family == "G":
        B[0][0] = Fraction(2, 3)
        B[1][1] = Fraction(2)
        link(0, 1, -1)
    return B


def _rational_inverse(M: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    n = len(M)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise LieAlgebraError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _symmetrizer(A: Sequence[Sequence[int]]) -> list[Fraction]:
    n = len(A)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and A[i][j] != 0 and d[j] is None:
                d[j] = d[i] * A[i][j] / A[j][i]
                stack.append(j)
    if any(x is None for x in d):
        raise LieAlgebraError("Cartan matrix is not indecomposable")
    top = max(d)
    return [x / top for x in d]


def _positive_roots(A: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    n = len(A)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                pairing = sum(beta[j] * A[i][j] for j in range(n))
                p = 0
                cur = list(beta)
                while True:
                    cur[i] -= 1
                    if tuple(cur) in roots:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    new = list(beta)
                    new[i] += 1
                    new = tuple(new)
                    if new not in roots:
                        roots.add(new)
                        nxt.append(new)
        layer = nxt
    return sorted(roots, key=lambda r: (sum(r), r))


def _from_cartan(family: str, rank: int, A: Sequence[Sequence[int]]) -> RootSystem:
    A = tuple(tuple(int(x) for x in row) for row in A)
    n = rank
    for i in range(n):
        if A[i][i] != 2 or any(A[i][j] > 0 for j in range(n) if j != i):
            raise LieAlgebraError("not a Cartan matrix")
    d = _symmetrizer(A)
    Ainv = _rational_inverse([[Fraction(x) for x in row] for row in A])
    # (omega_i, omega_j) = d_i (A^{-1})_{ij}
    gram = tuple(tuple(d[i] * Ainv[i][j] for j in range(n)) for i in range(n))
    for i in range(n):
        for j in range(n):
            if gram[i][j] != gram[j][i]:
                raise LieAlgebraError("Gram matrix is not symmetric")
    roots = _positive_roots(A)
    theta_coords = roots[-1]
    marks = tuple(theta_coords)
    comarks = tuple(int(a * di) for a, di in zip(marks, d))
    N = 1
    for row in gram:
        for g in row:
            N = math.lcm(N, g.denominator)
    theta = Weight([sum(A[i][j] * c for j, c in enumerate(theta_coords)) for i in range(n)])
    return RootSystem(
        family=family,
        rank=n,
        cartan=A,
        gram_fundamental=gram,
        simple_roots=tuple(Weight([A[i][j] for i in range(n)]) for j in range(n)),
        fundamental_weights=tuple(tuple(Ainv[j][i] for j in range(n)) for i in range(n)),
        rho=Weight((1,) * n),
        theta=theta,
        coxeter_h=1 + sum(marks),
        dual_coxeter_h=1 + sum(comarks),
        lacety_r=int(max(d) / min(d)),
        lattice_level_N=N,
        half_lengths=tuple(d),
        positive_roots=tuple(roots),
        marks=marks,
        comarks=comarks,
        cartan_inverse=tuple(tuple(r) for r in Ainv),
        gram_scaled=tuple(tuple(int(g * N) for g in row) for row in gram),
    )


@functools.lru_cache(maxsize=None)
def _build(family: str, rank: int) -> RootSystem:
    B = _symmetric_form(family, rank)
    A = [[int(2 * B[i][j] / B[i][i]) for j in range(rank)] for i in range(rank)]
    return _from_cartan(family, rank, A)


def build_root_system(family: str, rank: int) -> RootSystem:
    """Root system of the simple Lie algebra of type ``family``\\ ``rank``.

    >>> rs = build_root_system("A", 1)
    >>> rs.coxeter_h, rs.lattice_level_N, rs.gram_fundamental
    (2, 2, ((Fraction(1, 2),),))
    """
    family = family.upper()
    _check_type(family, int(rank))
    return _build(family, int(rank))


_DUAL_FAMILY = {"B": "C", "C": "B"}


@functools.lru_cache(maxsize=None)
def dual_root_system(rs: RootSystem) -> RootSystem:
    """Langlands dual: the transposed Cartan matrix, node order preserved.

    Node ``i`` of the dual corresponds to the simple coroot ``alpha_i^vee``,
    so coweight labels of ``rs`` are weight labels of the dual.
    """
    if rs.simply_laced:
        return rs
    At = [[rs.cartan[j][i] for j in range(rs.rank)] for i in range(rs.rank)]
    family = _DUAL_FAMILY.get(rs.family, rs.family)
    if family in ("B", "C"):
        _check_type(family, rs.rank, allow_small=True)
    return _from_cartan(family, rs.rank, At)


# -- pairings ---------------------------------------------------------------

def inner_product(rs: RootSystem, x: Weight, y: Weight) -> Fraction:
    if len(x) != rs.rank or len(y) != rs.rank:
        raise LieAlgebraError(f"rank mismatch for {rs.name}: {len(x)}, {len(y)}")
    G = rs.gram_scaled
    total = 0
    for i, a in enumerate(x.labels):
        if a:
            row = G[i]
            total += a * sum(g * b for g, b in zip(row, y.labels))
    return Fraction(total, rs.lattice_level_N)


def coweight_pairing(rs: RootSystem, coweight: Weight, weight: Weight) -> Fraction:
    """Natural pairing of a coweight (labels in the fundamental-coweight basis) with a weight."""
    _same_rank(coweight, weight)
    Ainv = rs.cartan_inverse
    total = Fraction(0)
    for k, b in enumerate(coweight.labels):
        if b:
            total += b * sum(Ainv[k][j] * a for j, a in enumerate(weight.labels))
    return total


def in_root_lattice(rs: RootSystem, weight: Weight) -> bool:
    Ainv = rs.cartan_inverse
    return all(
        sum(Ainv[k][j] * a for j, a in enumerate(weight.labels)).denominator == 1 for k in range(rs.rank)
    )


def dominant_weights_of_level(rs: RootSystem, m: int) -> list[Weight]:
    """Dominant integral weights with (lambda, theta^vee) <= m, in lexicographic order."""
    if m < 0:
        return []
    out: list[Weight] = []

    def rec(prefix: list[int], budget: int) -> None:
        i = len(prefix)
        if i == rs.rank:
            out.append(Weight(prefix))
            return
        c = rs.comarks[i]
        for a in range(budget // c + 1):
            rec(prefix + [a], budget - c * a)

    rec([], m)
    return out


def dominant_representative(rs: RootSystem, weight: Weight) -> tuple[Weight, int]:
    """The dominant weight in the Weyl orbit, with the number of reflections used."""
    w = weight
    steps = 0
    while True:
        i = next((k for k, a in enumerate(w.labels) if a < 0), None)
        if i is None:
            return w, steps
        w = rs.reflect(i, w)
        steps += 1


def weyl_orbit(rs: RootSystem, weight: Weight) -> list[Weight]:
    dom, _ = dominant_representative(rs, weight)
    seen = {dom}
    stack = [dom]
    while stack:
        x = stack.pop()
        for i, a in enumerate(x.labels):
            if a > 0:
                y = rs.reflect(i, x)
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return sorted(seen)


# -- Weyl group -------------------------------------------------------------

def weyl_group_order(rs: RootSystem) -> int:
    n, f = rs.rank, rs.family
    if f == "A":
        return math.factorial(n + 1)
    if f in "BC":
        return 2**n * math.factorial(n)
    if f == "D":
        return 2 ** (n - 1) * math.factorial(n)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600, ("F", 4): 1152, ("G", 2): 12}[(f, n)]


_weyl_lock = threading.Lock()
_weyl_memo: dict[tuple, tuple[np.ndarray, np.ndarray, np.ndarray]] = {}


def _weyl_arrays(rs: RootSystem, cap: int = DEFAULT_WEYL_MAX) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(matrices, signs, lengths) as numpy arrays, memoized and disk-cached."""
    key = (rs.family, rs.rank, rs.cartan)
    with _weyl_lock:
        hit = _weyl_memo.get(key)
    if hit is not None:
        if len(hit[0]) > cap:
            raise CapExceeded(f"|W({rs.name})| = {len(hit[0])} exceeds cap {cap}")
        return hit
    expected = weyl_group_order(rs)
    if expected > cap:
        raise CapExceeded(f"|W({rs.name})| = {expected} exceeds cap {cap}")
    ckey = f"{rs.name}-" + "".join(str(x + 3) for row in rs.cartan for x in row)
    stored = cache.load("weyl", ckey)
    if stored is not None:
        mats = np.array(stored["matrices"], dtype=np.int64).reshape(-1, rs.rank, rs.rank)
        lengths = np.array(stored["lengths"], dtype=np.int64)
    else:
        mats, lengths = _enumerate_weyl(rs)
        cache.store("weyl", ckey, {"matrices": mats.reshape(-1).tolist(), "lengths": lengths.tolist()})
    signs = np.where(lengths % 2 == 0, 1, -1).astype(np.int64)
    result = (mats, signs, lengths)
    with _weyl_lock:
        _weyl_memo[key] = result
    return result


def _enumerate_weyl(rs: RootSystem) -> tuple[np.ndarray, np.ndarray]:
    n = rs.rank
    A = np.array(rs.cartan, dtype=np.int64)
    ident = np.eye(n, dtype=np.int64)
    seen = {ident.tobytes()}
    layers = [ident[None]]
    layer = ident[None]
    while len(layer):
        fresh = []
        for i in range(n):
            # s_i M: row k becomes M_k - A[k, i] * M_i
            new = layer - A[:, i][None, :, None] * layer[:, i, :][:, None, :]
            for mat in new:
                b = mat.tobytes()
                if b not in seen:
                    seen.add(b)
                    fresh.append(mat)
        layer = np.array(fresh, dtype=np.int64).reshape(-1, n, n)
        if len(layer):
            layers.append(layer)
    mats = np.concatenate(layers)
    lengths = np.concatenate([np.full(len(l), k, dtype=np.int64) for k, l in enumerate(layers)])
    return mats, lengths


def weyl_group(rs: RootSystem, cap: int = DEFAULT_WEYL_MAX) -> list[WeylElement]:
    """All Weyl group elements, identity first, ordered by length (breadth-first)."""
    mats, signs, lengths = _weyl_arrays(rs, cap)
    return [
        WeylElement(tuple(tuple(int(x) for x in row) for row in m), int(s), int(l))
        for m, s, l in zip(mats, signs, lengths)
    ]


# -- lattice quotients -------------------------------------------------------

@dataclass(frozen=True)
class DiscriminantGroup:
    representatives: tuple[Weight, ...]
    table: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.representatives)

    def index_of(self, rs: RootSystem, weight: Weight) -> int:
        for k, r in enumerate(self.representatives):
            if in_root_lattice(rs, weight - r):
                return k
        raise LieAlgebraError(f"{weight} has no representative")

    def inverse(self, k: int) -> int:
        return self.table[k].index(0)


@functools.lru_cache(maxsize=None)
def discriminant_group(rs: RootSystem) -> DiscriminantGroup:
    """P/Q with representatives among the level-1 dominant weights."""
    if not rs.simply_laced:
        raise LieAlgebraError(f"discriminant group representatives need a simply-laced type, got {rs.name}")
    reps = tuple(dominant_weights_of_level(rs, 1))
    base = DiscriminantGroup(reps, ())
    table = tuple(tuple(base.index_of(rs, x + y) for y in reps) for x in reps)
    return DiscriminantGroup(reps, table)


def _reflection_matrix(rs: RootSystem, i: int) -> np.ndarray:
    n = rs.rank
    S = np.eye(n, dtype=np.int64)
    S[:, i] -= np.array([rs.cartan[k][i] for k in range(n)], dtype=np.int64)
    return S


def _longest_element(rs: RootSystem, nodes: Sequence[int]) -> np.ndarray:
    """Longest element of the parabolic subgroup generated by the given simple reflections."""
    nodes = list(nodes)
    x = Weight([1 if i in nodes else 0 for i in range(rs.rank)])
    w = np.eye(rs.rank, dtype=np.int64)
    while True:
        i = next((k for k in nodes if x.labels[k] > 0), None)
        if i is None:
            return w
        x = rs.reflect(i, x)
        w = _reflection_matrix(rs, i) @ w


@functools.lru_cache(maxsize=None)
def simple_current_actions(rs: RootSystem) -> tuple[tuple[int, np.ndarray], ...]:
    """(node j, matrix w_j) for each nontrivial affine diagram automorphism.

    At level m the automorphism acts by ``lambda -> m omega_j + w_j lambda``
    with ``w_j = w_0^{(j)} w_0``. Only simply-laced types are supported; the
    nodes are the minuscule ones, one per nonzero class of P/Q.
    """
    if not rs.simply_laced:
        raise LieAlgebraError(f"simple-current actions implemented for simply-laced types only, got {rs.name}")
    w0 = _longest_element(rs, range(rs.rank))
    out = []
    for j in range(rs.rank):
        if rs.comarks[j] == 1:
            w0j = _longest_element(rs, [k for k in range(rs.rank) if k != j])
            out.append((j, w0j @ w0))
    return tuple(out)


def apply_simple_current(rs: RootSystem, action: tuple[int, np.ndarray], m: int, weight: Weight) -> Weight:
    j, w = action
    image = w @ np.array(weight.labels, dtype=np.int64)
    image[j] += m
    return Weight(image.tolist())


def label_box_count(rs: RootSystem, m: int) -> int:
    """Independent count of P_+^m by exhaustive search over 0 <= a_i <= m*h."""
    bound = m * rs.coxeter_h
    return sum(
        1 for labels in itertools.product(range(bound + 1), repeat=rs.rank)
        if sum(c * a for c, a in zip(rs.comarks, labels)) <= m
    )
