"""Exact arithmetic in cyclotomic fields Q(zeta_M).

An element is stored in the power basis ``1, z, ..., z^(phi(M)-1)`` of
``Q(z)`` with ``z = exp(2 pi i / M)``, as a tuple of integer numerators
over one positive common denominator. The representation is canonical:

* the numerators and the denominator are coprime,
* rational numbers always live in ``M = 1``,
* ``M = 2 (mod 4)`` is rewritten into ``M / 2`` (the two fields coincide).

Operands of different orders are lifted to the lcm of their orders before
any binary operation, and equality is decided after such a lift.
"""
from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

import mpmath

Rational = Union[int, Fraction]


class CycloError(ArithmeticError):
    pass


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@functools.lru_cache(maxsize=None)
def totient(n: int) -> int:
    result = n
    for p in _factorize(n):
        result = result // p * (p - 1)
    return result


@functools.lru_cache(maxsize=None)
def mobius(n: int) -> int:
    f = _factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divexact(a: Sequence[int], b: Sequence[int]) -> list[int]:
    # b monic, exact division over Z
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1]
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] -= c * y
    if any(a[: len(b) - 1]):
        raise CycloError("inexact polynomial division")
    return q


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, constant term first.

    >>> cyclotomic_polynomial(3)
    (1, 1, 1)
    """
    if m < 1:
        raise ValueError("order must be positive")
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _poly_divexact(num, cyclotomic_polynomial(d))
    return tuple(num)


@functools.lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Row k is z^k reduced modulo Phi_m, for 0 <= k < m."""
    phi = totient(m)
    cyc = cyclotomic_polynomial(m)
    rows = []
    cur = [1] + [0] * (phi - 1)
    for _ in range(m):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(phi):
                cur[i] -= top * cyc[i]
    return tuple(rows)


def _reduce_powers(m: int, coeffs: dict[int, int] | Sequence[int]) -> list[int]:
    """Reduce sum c_k z^k (any integer k) into the power basis of Q(zeta_m)."""
    table = _power_table(m)
    phi = totient(m)
    out = [0] * phi
    items = coeffs.items() if isinstance(coeffs, dict) else enumerate(coeffs)
    for k, c in items:
        if not c:
            continue
        k %= m
        if k < phi:
            out[k] += c
        else:
            for i, t in enumerate(table[k]):
                if t:
                    out[i] += c * t
    return out


class CycloNum:
    """Immutable element of a cyclotomic field."""

    __slots__ = ("order", "nums", "den", "_hash")

    def __init__(self, order: int, coeffs: Iterable[Rational]):
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) != totient(order):
            raise ValueError(f"expected {totient(order)} coefficients for order {order}")
        den = 1
        for c in coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        nums = [int(c * den) for c in coeffs]
        self._set(*_canonical(order, nums, den))

    def _set(self, order: int, nums: tuple[int, ...], den: int) -> None:
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "nums", nums)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("CycloNum is immutable")

    @classmethod
    def _raw(cls, order: int, nums: Sequence[int], den: int = 1) -> CycloNum:
        obj = cls.__new__(cls)
        obj._set(*_canonical(order, list(nums), den))
        return obj

    @classmethod
    def from_rational(cls, q: Rational) -> CycloNum:
        q = Fraction(q)
        return cls._raw(1, [q.numerator], q.denominator)

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> CycloNum:
        """z_m^k."""
        return cls._raw(m, _reduce_powers(m, {k: 1}))

    @classmethod
    def from_powers(cls, m: int, counts: dict[int, int] | Sequence[int]) -> CycloNum:
        """Sum c_k z_m^k with integer c_k; exponents may exceed phi(m)."""
        return cls._raw(m, _reduce_powers(m, counts))

    # -- coordinates ---------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(n, self.den) for n in self.nums)

    def lifted(self, m: int) -> list[int]:
        """Numerators of self in the power basis of Q(zeta_m); ``m`` must be a multiple of the order."""
        if m % self.order:
            raise ValueError(f"cannot lift order {self.order} into order {m}")
        if m == self.order:
            return list(self.nums)
        step = m // self.order
        return _reduce_powers(m, {k * step: c for k, c in enumerate(self.nums) if c})

    def is_zero(self) -> bool:
        return self.order == 1 and self.nums[0] == 0

    def is_rational(self) -> bool:
        return self.order == 1

    def to_fraction(self) -> Fraction:
        if self.order != 1:
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.nums[0], self.den)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        m = math.lcm(self.order, other.order)
        a, b = self.lifted(m), other.lifted(m)
        g = math.gcd(self.den, other.den)
        fa, fb = other.den // g, self.den // g
        return CycloNum._raw(m, [x * fa + y * fb for x, y in zip(a, b)], self.den * fa)

    __radd__ = __add__

    def __neg__(self):
        return CycloNum._raw(self.order, [-x for x in self.nums], self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if other.order == 1:
            q = other.nums[0]
            return CycloNum._raw(self.order, [x * q for x in self.nums], self.den * other.den)
        if self.order == 1:
            return other * self
        m = math.lcm(self.order, other.order)
        prod = _poly_mul(self.lifted(m), other.lifted(m))
        return CycloNum._raw(m, _reduce_powers(m, prod), self.den * other.den)

    __rmul__ = __mul__

    def invert(self) -> CycloNum:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.order == 1:
            return CycloNum._raw(1, [self.den], self.nums[0])
        inv = _poly_inverse_mod(list(self.nums), cyclotomic_polynomial(self.order))
        inv = [c * self.den for c in inv]
        return CycloNum(self.order, inv + [Fraction(0)] * (totient(self.order) - len(inv)))

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.invert()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.invert()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.invert() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> CycloNum:
        return self.galois(-1)

    def galois(self, t: int) -> CycloNum:
        """Apply the automorphism z_M -> z_M^t (requires gcd(t, M) = 1)."""
        if math.gcd(t, self.order) != 1:
            raise CycloError(f"gcd({t}, {self.order}) != 1: not a field automorphism")
        counts = {k * t: c for k, c in enumerate(self.nums) if c}
        return CycloNum._raw(self.order, _reduce_powers(self.order, counts), self.den)

    # -- comparison ----------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.order == other.order:
            return self.den == other.den and self.nums == other.nums
        return (self - other).is_zero()

    def normalized_trace(self) -> Fraction:
        """Tr(x) / [Q(x-field) : Q], independent of the ambient order."""
        m = self.order
        total = Fraction(0)
        for k, c in enumerate(self.nums):
            if c:
                d = m // math.gcd(k, m)
                total += Fraction(c * mobius(d), totient(d))
        return total / self.den

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self.normalized_trace()))
        return self._hash

    # -- display -------------------------------------------------------

    def to_complex(self, precision_bits: int = 53) -> tuple[float, float]:
        with mpmath.workprec(max(precision_bits, 53) + 10):
            z = mpmath.expjpi(mpmath.mpf(2) / self.order)
            acc = mpmath.mpc(0)
            for k, c in enumerate(self.nums):
                if c:
                    acc += c * z**k
            acc /= self.den
            return float(acc.real), float(acc.imag)

    def __complex__(self):
        return complex(*self.to_complex())

    def to_json(self) -> dict:
        return {"M": self.order, "coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> CycloNum:
        return cls(int(data["M"]), [Fraction(s) for s in data["coeffs"]])

    def __repr__(self):
        if self.order == 1:
            return f"CycloNum({self.to_fraction()})"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"({c})*z{self.order}^{k}")
        return "CycloNum(" + (" + ".join(terms) or "0") + ")"


def _coerce(x):
    if isinstance(x, CycloNum):
        return x
    if isinstance(x, (int, Fraction)):
        return CycloNum.from_rational(x)
    return NotImplemented


def _canonical(order: int, nums: list[int], den: int) -> tuple[int, tuple[int, ...], int]:
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        den, nums = -den, [-x for x in nums]
    while order % 4 == 2:
        # z_{2m} = -z_m^{(m+1)/2} for odd m
        half = order // 2
        e = (half + 1) // 2
        nums = _reduce_powers(half, {k * e: (-c if k % 2 else c) for k, c in enumerate(nums) if c})
        order = half
    if order > 1 and not any(nums[1:]):
        nums, order = [nums[0]], 1
    g = math.gcd(den, *nums)
    if g > 1:
        nums = [x // g for x in nums]
        den //= g
    if order == 1 and nums[0] == 0:
        den = 1
    return order, tuple(nums), den


def _fpoly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _fpoly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    if len(a) < len(b):
        return [], _fpoly_trim(a)
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] -= c * y
    return q, _fpoly_trim(a[: len(b) - 1])


def _fpoly_sub_mul(a: list[Fraction], q: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = list(a) + [Fraction(0)] * max(0, len(q) + len(b) - 1 - len(a))
    for i, x in enumerate(q):
        if x:
            for j, y in enumerate(b):
                out[i + j] -= x * y
    return _fpoly_trim(out)


def _poly_inverse_mod(p: Sequence[int], modulus: Sequence[int]) -> list[Fraction]:
    """Extended Euclid in Q[x]: s with s * p = 1 mod modulus."""
    r0 = _fpoly_trim([Fraction(c) for c in modulus])
    r1 = _fpoly_trim([Fraction(c) for c in p])
    s0: list[Fraction] = []
    s1: list[Fraction] = [Fraction(1)]
    while len(r1) > 1:
        q, r = _fpoly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _fpoly_sub_mul(s0, q, s1)
        if not r1:
            raise CycloError("polynomial not invertible modulo the cyclotomic polynomial")
    c = r1[0]
    return [x / c for x in s1]


ZERO = CycloNum.from_rational(0)
ONE = CycloNum.from_rational(1)


def root_of_unity(q: Rational) -> CycloNum:
    """exp(2 pi i q) as an element of Q(zeta_b), q = a/b in lowest terms."""
    q = Fraction(q)
    return CycloNum.zeta(q.denominator, q.numerator)


def add(x: CycloNum, y: CycloNum) -> CycloNum:
    return x + y


def mul(x: CycloNum, y: CycloNum) -> CycloNum:
    return x * y


def neg(x: CycloNum) -> CycloNum:
    return -x


def invert(x: CycloNum) -> CycloNum:
    return x.invert()


def galois(x: CycloNum, t: int) -> CycloNum:
    return x.galois(t)


def to_complex(x: CycloNum, precision_bits: int = 53) -> tuple[float, float]:
    return x.to_complex(precision_bits)


def common_order(values: Iterable[CycloNum]) -> int:
    m = 1
    for v in values:
        m = math.lcm(m, v.order)
    return m
