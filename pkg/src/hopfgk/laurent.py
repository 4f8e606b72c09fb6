"""Sparse Laurent polynomials in x over a cyclotomic field, and the phi family.

phi_t = 1 - gamma^(-t-1) x^d, indexed by residues mod m.  Two product
shapes appear: the full product with a set of indices omitted, and the
cyclic segment phi_s ~ phi_t.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import ParameterError
from .exactnum import CycNum, CyclotomicField, is_primitive_root


def residue(t: int, m: int) -> int:
    """The representative of t in {0, ..., m-1}.

    Shared by phi indices, u indices and y exponents so the three stay in
    lockstep.
    """
    return t % m


def cyclic_run(s: int, t: int, m: int) -> list[int]:
    """Residues met walking from s up to t mod m.

    This is the index set of an omission "from phi_s to phi_t"; when
    s = t + 1 (mod m) the walk covers every residue.
    """
    k, hi = residue(s, m), residue(t, m)
    out = [k]
    while k != hi:
        k = (k + 1) % m
        out.append(k)
    return out


class LaurentPoly:
    """Immutable element of K[x, x^-1].  The zero polynomial has no terms."""

    __slots__ = ("field", "terms", "_hash")

    def __init__(self, field: CyclotomicField, terms=None):
        self.field = field
        clean = {}
        if terms:
            for e, c in terms.items():
                c = field(c)
                if c:
                    clean[int(e)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _trusted(cls, field, terms):
        obj = object.__new__(cls)
        obj.field = field
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, field, c=1):
        return cls(field, {0: c})

    @classmethod
    def monomial(cls, field, exponent, c=1):
        return cls(field, {exponent: c})

    # -- arithmetic -------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction, CycNum)):
            return LaurentPoly(self.field, {0: other})
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._trusted(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._trusted(self.field, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, CycNum] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                p = c1 * c2
                s = out.get(e)
                out[e] = p if s is None else s + p
        return LaurentPoly._trusted(self.field, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c):
        c = self.field(c)
        if not c:
            return LaurentPoly._trusted(self.field, {})
        return LaurentPoly._trusted(self.field, {e: v * c for e, v in self.terms.items()})

    def shift(self, k: int):
        """Multiply by x^k."""
        return LaurentPoly._trusted(self.field, {e + k: c for e, c in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self.terms.items()
            return LaurentPoly._trusted(self.field, {e * k: c ** k})
        result = LaurentPoly.constant(self.field, 1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        o = self._lift(other) if not isinstance(other, LaurentPoly) else other
        if o is None:
            return NotImplemented
        return self.field is o.field and self.terms == o.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    # -- views ------------------------------------------------------------

    def coeff(self, e: int) -> CycNum:
        return self.terms.get(e, self.field.zero)

    def exponents(self):
        return sorted(self.terms)

    def is_polynomial(self):
        """Nonnegative support, i.e. an element of K[x]."""
        return all(e >= 0 for e in self.terms)

    def bar(self):
        """x -> x^-1 on every term."""
        return LaurentPoly._trusted(self.field, {-e: c for e, c in self.terms.items()})

    def counit_eval(self) -> CycNum:
        """Value at x = 1."""
        total = self.field.zero
        for c in self.terms.values():
            total = total + c
        return total

    def evaluate(self, at) -> CycNum:
        at = self.field(at)
        total = self.field.zero
        for e, c in self.terms.items():
            total = total + c * at ** e
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            mon = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
            if not mon:
                parts.append(f"({c})")
            elif c == 1:
                parts.append(mon)
            else:
                parts.append(f"({c})*{mon}")
        return " + ".join(parts)


def bar(f: LaurentPoly) -> LaurentPoly:
    return f.bar()


def counit_eval(f: LaurentPoly) -> CycNum:
    return f.counit_eval()


@dataclass(frozen=True)
class PhiFamily:
    """Parameters of phi_i = 1 - gamma^(-i-1) x^d."""

    m: int
    d: int
    gamma: CycNum
    _cache: dict = dc_field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if self.m < 1 or self.d < 1:
            raise ParameterError(f"m and d must be positive (m={self.m}, d={self.d})")
        if not is_primitive_root(self.gamma, self.m):
            raise ParameterError(f"gamma={self.gamma} is not a primitive {self.m}-th root of unity")

    @property
    def field(self):
        return self.gamma.field

    def phi(self, t: int) -> LaurentPoly:
        key = ("phi", residue(t, self.m))
        hit = self._cache.get(key)
        if hit is None:
            tb = key[1]
            c = -(self.gamma ** (-tb - 1))
            hit = LaurentPoly(self.field, {0: 1, self.d: c})
            self._cache[key] = hit
        return hit

    def product(self, indices) -> LaurentPoly:
        result = LaurentPoly.constant(self.field, 1)
        for t in indices:
            result = result * self.phi(t)
        return result

    def product_omit(self, omitted) -> LaurentPoly:
        """Product of phi_0 ... phi_(m-1) with the given indices (mod m) left out."""
        dropped = frozenset(residue(t, self.m) for t in omitted)
        key = ("omit", dropped)
        hit = self._cache.get(key)
        if hit is None:
            hit = self.product(r for r in range(self.m) if r not in dropped)
            self._cache[key] = hit
        return hit

    def segment(self, s: int, t: int) -> LaurentPoly:
        """The cyclic run phi_s ~ phi_t.

        The empty product when s = t + 1 (mod m), phi_s..phi_t when s <= t, and the
        wrap-around run phi_s..phi_(m-1) phi_0..phi_t otherwise (residues mod m).
        """
        m = self.m
        sb, tb = residue(s, m), residue(t, m)
        key = ("seg", sb, tb)
        hit = self._cache.get(key)
        if hit is None:
            if sb == (tb + 1) % m:
                # read mod m, so segment(0, m-1) is empty as the omission form requires
                idx = ()
            elif tb >= sb:
                idx = range(sb, tb + 1)
            else:
                idx = list(range(sb, m)) + list(range(0, tb + 1))
            hit = self.product(idx)
            self._cache[key] = hit
        return hit


def phi(family: PhiFamily, t: int) -> LaurentPoly:
    return family.phi(t)


def phi_product_omit(family: PhiFamily, omitted) -> LaurentPoly:
    return family.product_omit(omitted)


def phi_segment(family: PhiFamily, s: int, t: int) -> LaurentPoly:
    return family.segment(s, t)
