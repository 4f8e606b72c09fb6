"""Exact arithmetic in cyclotomic fields Q(zeta_L).

An element is stored as a residue modulo the L-th cyclotomic polynomial,
in the power basis 1, z, ..., z^(phi(L)-1), with integer numerators over a
single positive common denominator.  Everything is normalized eagerly, so
equality is plain tuple equality.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational as _RationalABC

from .errors import EmbeddingError, FieldMismatchError

Rational = Fraction


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_divmod(num, den):
    """Exact division of rational polynomials, coefficients low to high."""
    num = [Fraction(c) for c in _trim(num)]
    den = _trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    lead = Fraction(den[-1])
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    while len(num) >= len(den) and num:
        shift = len(num) - len(den)
        c = num[-1] / lead
        q[shift] = c
        for i, dc in enumerate(den):
            num[shift + i] -= c * dc
        num = _trim(num)
    return _trim(q), num


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def prime_factors(n):
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def euler_phi(n):
    result = n
    for p in prime_factors(n):
        result -= result // p
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(L: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the L-th cyclotomic polynomial.

    Computed as (z^L - 1) divided by the product of Phi_d over the proper
    divisors d of L.
    """
    if L < 1:
        raise ValueError(f"cyclotomic order must be positive, got {L}")
    num = [-1] + [0] * (L - 1) + [1]
    den = [1]
    for d in divisors(L)[:-1]:
        den = _poly_mul(den, cyclotomic_polynomial(d))
    q, r = _poly_divmod(num, den)
    assert not r, "z^L - 1 not divisible by the proper-divisor product"
    assert all(c.denominator == 1 for c in q)
    return tuple(int(c) for c in q)


class CyclotomicField:
    """The field Q(zeta_L).  One shared instance per order."""

    _instances: dict[int, "CyclotomicField"] = {}

    def __new__(cls, order: int):
        inst = cls._instances.get(order)
        if inst is None:
            if order < 1:
                raise ValueError(f"cyclotomic order must be positive, got {order}")
            inst = super().__new__(cls)
            inst._setup(order)
            cls._instances[order] = inst
        return inst

    def _setup(self, order):
        self.order = order
        self.modulus = cyclotomic_polynomial(order)
        self.degree = len(self.modulus) - 1
        n = self.degree
        # rows[k] is z^k reduced, for k < 2n - 1
        rows = []
        for k in range(max(2 * n - 1, 1)):
            if k < n:
                rows.append(tuple(1 if i == k else 0 for i in range(n)))
            else:
                prev = rows[-1]
                top = prev[-1]
                shifted = [0] + list(prev[:-1])
                rows.append(tuple(s - top * self.modulus[i] for i, s in enumerate(shifted)))
        self._rows = rows
        self.zero = CycNum._raw(self, (0,) * n, 1)
        self.one = CycNum._raw(self, (1,) + (0,) * (n - 1), 1)
        powers = [self.one]
        z = self.gen_element()
        for _ in range(order - 1):
            powers.append(powers[-1] * z)
        self._powers = powers
        self._inverse_cache: dict = {}

    def gen_element(self):
        n = self.degree
        if n == 1:
            # Q(zeta_1) = Q(zeta_2) = Q; the generator is the root itself
            return CycNum._raw(self, (-self.modulus[0],), 1)
        return CycNum._raw(self, (0, 1) + (0,) * (n - 2), 1)

    def zeta(self, k: int = 1) -> "CycNum":
        return self._powers[k % self.order]

    def __call__(self, value) -> "CycNum":
        if isinstance(value, CycNum):
            if value.field is not self:
                raise FieldMismatchError(
                    f"element of Q(zeta_{value.field.order}) used in Q(zeta_{self.order})"
                )
            return value
        if isinstance(value, int):
            return CycNum._raw(self, (value,) + (0,) * (self.degree - 1), 1)
        if isinstance(value, _RationalABC):
            value = Fraction(value)
            return CycNum._raw(
                self, (value.numerator,) + (0,) * (self.degree - 1), value.denominator
            )
        raise TypeError(f"cannot coerce {value!r} into Q(zeta_{self.order})")

    def from_coeffs(self, coeffs) -> "CycNum":
        """Element from rational coefficients in the power basis (any length; reduced)."""
        coeffs = [Fraction(c) for c in coeffs]
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        nums = [int(c * den) for c in coeffs]
        return self._reduce(nums, den)

    def _reduce(self, nums, den):
        n = self.degree
        if len(nums) <= n:
            out = list(nums) + [0] * (n - len(nums))
        else:
            out = list(nums[:n])
            rows = self._rows
            for k in range(n, len(nums)):
                c = nums[k]
                if c:
                    if k >= len(rows):
                        row = self.zeta(k)._monic_row()
                    else:
                        row = rows[k]
                    for i in range(n):
                        out[i] += c * row[i]
        return CycNum._make(self, out, den)

    def __repr__(self):
        return f"CyclotomicField({self.order})"

    def __reduce__(self):
        return (CyclotomicField, (self.order,))


class CycNum:
    """Immutable element of a cyclotomic field."""

    __slots__ = ("field", "nums", "den", "_hash")

    @classmethod
    def _raw(cls, field, nums, den):
        obj = object.__new__(cls)
        obj.field = field
        obj.nums = nums
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def _make(cls, field, nums, den):
        if den < 0:
            nums = [-c for c in nums]
            den = -den
        g = gcd(den, *nums)
        if g == 0:
            return field.zero
        if g != 1:
            nums = [c // g for c in nums]
            den //= g
        return cls._raw(field, tuple(nums), den)

    def _monic_row(self):
        assert self.den == 1
        return self.nums

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycNum):
            if other.field is not self.field:
                raise FieldMismatchError(
                    f"Q(zeta_{self.field.order}) and Q(zeta_{other.field.order}) mixed without embed()"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return None

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return CycNum._make(self.field, [a + b for a, b in zip(self.nums, o.nums)], self.den)
        return CycNum._make(
            self.field,
            [a * o.den + b * self.den for a, b in zip(self.nums, o.nums)],
            self.den * o.den,
        )

    __radd__ = __add__

    def __neg__(self):
        return CycNum._raw(self.field, tuple(-a for a in self.nums), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return self.field.zero
            return CycNum._make(self.field, [a * other for a in self.nums], self.den)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.nums, o.nums
        n = len(a)
        if n == 1:
            return CycNum._make(self.field, [a[0] * b[0]], self.den * o.den)
        conv = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        return self.field._reduce(conv, self.den * o.den)

    __rmul__ = __mul__

    def inv(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        key = (self.nums, self.den)
        cache = self.field._inverse_cache
        hit = cache.get(key)
        if hit is not None:
            return hit
        # extended Euclid over Q[z]: s*a + t*Phi = 1
        a = [Fraction(c, self.den) for c in self.nums]
        r0, r1 = list(self.field.modulus), _trim(a)
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        c = Fraction(r1[0])
        result = self.field.from_coeffs([x / c for x in s1])
        cache[key] = result
        return result

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        result, base = self.field.one, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparison -------------------------------------------------------

    def is_zero(self):
        return not any(self.nums)

    def __bool__(self):
        return any(self.nums)

    def __eq__(self, other):
        if isinstance(other, CycNum):
            return self.field is other.field and self.den == other.den and self.nums == other.nums
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return (
                self.den == other.denominator
                and self.nums[0] == other.numerator
                and not any(self.nums[1:])
            )
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash((self.field.order, self.nums, self.den))
        return h

    # -- views ------------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.nums)

    def is_rational(self):
        return not any(self.nums[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.nums[0], self.den)

    def serialize(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __repr__(self):
        z = f"z{self.field.order}"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
                continue
            mon = z if k == 1 else f"{z}^{k}"
            if c == 1:
                parts.append(mon)
            elif c == -1:
                parts.append(f"-{mon}")
            else:
                parts.append(f"{c}*{mon}")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def zeta(field: CyclotomicField, k: int = 1) -> CycNum:
    """zeta_L^k, with k taken modulo L."""
    return field.zeta(k)


def multiplicative_order(z: CycNum) -> int | None:
    """Order of z as a root of unity, or None if z is not one of the field's roots."""
    L = z.field.order
    # roots of unity in Q(zeta_L) have order dividing lcm(L, 2)
    bound = L if L % 2 == 0 else 2 * L
    p = z
    for k in range(1, bound + 1):
        if p == 1:
            return k
        p = p * z
    return None


def is_primitive_root(z: CycNum, N: int) -> bool:
    """True iff z^N = 1 and z^(N/p) != 1 for every prime p dividing N."""
    if N < 1:
        return False
    if z ** N != 1:
        return False
    return all(z ** (N // p) != 1 for p in prime_factors(N))


def embed(z: CycNum, target_order: int) -> CycNum:
    """Image of z under zeta_L -> zeta_L'^(L'/L)."""
    L = z.field.order
    if target_order % L:
        raise EmbeddingError(f"cannot embed Q(zeta_{L}) into Q(zeta_{target_order})")
    target = CyclotomicField(target_order)
    if L == target_order:
        return z
    step = target_order // L
    out = target.zero
    nums = z.nums
    if z.field.degree == 1:
        return target(Fraction(nums[0], z.den))
    for k, c in enumerate(nums):
        if c:
            out = out + target.zeta(k * step) * c
    return out * Fraction(1, z.den)


def primitive_roots(field: CyclotomicField, N: int) -> list[CycNum]:
    """All primitive N-th roots of unity of the field that are powers of zeta_L."""
    L = field.order
    if L % N:
        return []
    step = L // N
    return [field.zeta(k * step) for k in range(N) if gcd(k, N) == 1]
