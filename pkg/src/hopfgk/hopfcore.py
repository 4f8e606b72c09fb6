"""Family-agnostic algebra elements, tensor elements and the Hopf axiom checks.

A presentation supplies multiplication of normal-form monomials, each
monomial's factorization into generators, and the coproduct, counit and
antipode of every generator.  Everything else is derived here: coproducts
of monomials are products of generator coproducts in the tensor algebra,
and antipodes of monomials are reverse-order products of generator
antipodes.  The closed forms a family may know about are left to the tests
as oracles.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import groupby
from typing import Any, Callable, Hashable, Iterable, Sequence

from .errors import PresentationMismatchError
from .exactnum import CycNum
from .laurent import LaurentPoly

Monomial = Hashable


def _accumulate(out: dict, key, c):
    s = out.get(key)
    out[key] = c if s is None else s + c


def _pruned(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


class Element:
    """Finite linear combination of normal-form monomials."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "HopfPresentation", terms: dict | None = None):
        self.algebra = algebra
        self.terms = _pruned(terms) if terms else {}

    @classmethod
    def _trusted(cls, algebra, terms):
        obj = object.__new__(cls)
        obj.algebra = algebra
        obj.terms = terms
        return obj

    def _scalar(self, c):
        return self.algebra.field(c)

    def _check(self, other):
        if other.algebra is not self.algebra:
            raise PresentationMismatchError(
                f"elements of {self.algebra.label} and {other.algebra.label} combined"
            )

    def __add__(self, other):
        if not isinstance(other, Element):
            other = self.algebra.scalar(other)
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(out, k, c)
        return Element._trusted(self.algebra, _pruned(out))

    __radd__ = __add__

    def __neg__(self):
        return Element._trusted(self.algebra, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Element):
            other = self.algebra.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.algebra.mul(self, other)
        if isinstance(other, (int, Fraction, CycNum)):
            c = self._scalar(other)
            if not c:
                return Element._trusted(self.algebra, {})
            return Element._trusted(self.algebra, {k: v * c for k, v in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        result = self.algebra.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            other = self.algebra.scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def monomials(self):
        return list(self.terms)

    def coproduct(self) -> "TensorElement":
        return self.algebra.coproduct(self)

    def counit(self) -> CycNum:
        return self.algebra.counit(self)

    def antipode(self) -> "Element":
        return self.algebra.antipode(self)

    def __repr__(self):
        return self.algebra.render(self)


class TensorElement:
    """Finite linear combination of tuples of monomials (a fixed tensor power)."""

    __slots__ = ("algebra", "terms", "arity")

    def __init__(self, algebra, terms: dict | None = None, arity: int = 2):
        self.algebra = algebra
        self.terms = _pruned(terms) if terms else {}
        self.arity = arity

    @classmethod
    def _trusted(cls, algebra, terms, arity):
        obj = object.__new__(cls)
        obj.algebra = algebra
        obj.terms = terms
        obj.arity = arity
        return obj

    @classmethod
    def tensor(cls, *elements: Element) -> "TensorElement":
        alg = elements[0].algebra
        out = {(): alg.field.one}
        for e in elements:
            nxt = {}
            for key, c in out.items():
                for mono, d in e.terms.items():
                    _accumulate(nxt, key + (mono,), c * d)
            out = nxt
        return cls(alg, out, len(elements))

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(out, k, c)
        return TensorElement._trusted(self.algebra, _pruned(out), self.arity)

    def __neg__(self):
        return TensorElement._trusted(self.algebra, {k: -c for k, c in self.terms.items()}, self.arity)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            c = self.algebra.field(other)
            return TensorElement._trusted(
                self.algebra, _pruned({k: v * c for k, v in self.terms.items()}), self.arity
            )
        if not isinstance(other, TensorElement):
            return NotImplemented
        if other.arity != self.arity:
            raise ValueError("tensor arity mismatch")
        mm = self.algebra.mul_monomials
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                partial = {(): c1 * c2}
                for a, b in zip(k1, k2):
                    prod = mm(a, b)
                    nxt = {}
                    for key, c in partial.items():
                        for mono, d in prod.items():
                            _accumulate(nxt, key + (mono,), c * d)
                    partial = nxt
                for key, c in partial.items():
                    _accumulate(out, key, c)
        return TensorElement._trusted(self.algebra, _pruned(out), self.arity)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def flip(self) -> "TensorElement":
        return TensorElement._trusted(self.algebra, {k[::-1]: c for k, c in self.terms.items()}, self.arity)

    def map_slots(self, *maps: Callable[[Monomial], dict]) -> "TensorElement":
        """Apply one linear map per slot.

        Each map sends a monomial to a dict from tuples of monomials (of any
        length, including 0 for scalar-valued maps) to coefficients.
        """
        out: dict = {}
        arity = None
        for key, c in self.terms.items():
            partial = {(): c}
            for mono, f in zip(key, maps):
                img = f(mono)
                nxt = {}
                for k0, c0 in partial.items():
                    for k1, c1 in img.items():
                        _accumulate(nxt, k0 + k1, c0 * c1)
                partial = nxt
            for k, v in partial.items():
                arity = len(k)
                _accumulate(out, k, v)
        if arity is None:
            arity = 0
        return TensorElement._trusted(self.algebra, _pruned(out), arity)

    def contract(self) -> Element:
        """Multiply the tensor factors together: a (x) b -> ab."""
        alg = self.algebra
        total: dict = {}
        for key, c in self.terms.items():
            partial = {alg.unit_monomial(): c}
            for mono in key:
                nxt = {}
                for m0, c0 in partial.items():
                    for m1, c1 in alg.mul_monomials(m0, mono).items():
                        _accumulate(nxt, m1, c0 * c1)
                partial = nxt
            for m, v in partial.items():
                _accumulate(total, m, v)
        return Element(alg, total)

    def slot_monomials(self, slot: int):
        return {k[slot] for k in self.terms}

    def __repr__(self):
        if not self.terms:
            return "0"
        alg = self.algebra
        parts = []
        for key in sorted(self.terms, key=lambda k: tuple(alg.sort_key(m) for m in k)):
            c = self.terms[key]
            word = " (x) ".join(alg.render_monomial(m) for m in key)
            parts.append(word if c == 1 else f"({c})*[{word}]")
        return " + ".join(parts)


@dataclass(frozen=True)
class Relation:
    """A defining relation lhs = rhs, both sides words of generator names / elements / scalars."""

    label: str
    lhs: tuple
    rhs: tuple


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: Any = None
    error: str | None = None

    @property
    def status(self):
        if self.error is not None:
            return "error"
        return "pass" if self.passed else "fail"

    def render_detail(self) -> str:
        if self.error is not None:
            return self.error
        if self.passed or self.detail is None:
            return ""
        return repr(self.detail)


class HopfPresentation:
    """Base class for the concrete families.

    Subclasses implement the hooks marked below; hook results are cached on
    the instance, which is otherwise immutable after construction.
    """

    family = "abstract"
    generator_names: tuple[str, ...] = ()
    x_nonnegative = False

    def __init__(self, field, params: dict):
        self.field = field
        self.params = dict(params)
        self._mul_cache: dict = {}
        self._delta_cache: dict = {}
        self._delta_power_cache: dict = {}
        self._antipode_cache: dict = {}
        self._antipode_power_cache: dict = {}

    # -- hooks --------------------------------------------------------------

    def unit_monomial(self) -> Monomial:
        raise NotImplementedError

    def _mul_monomials(self, a, b) -> dict:
        raise NotImplementedError

    def factorize(self, mono) -> list[str]:
        """Generator names whose ordered product is mono."""
        raise NotImplementedError

    def generator(self, name: str) -> Element:
        raise NotImplementedError

    def generator_coproduct(self, name: str) -> TensorElement:
        raise NotImplementedError

    def generator_antipode(self, name: str) -> Element:
        raise NotImplementedError

    def counit_monomial(self, mono) -> CycNum:
        raise NotImplementedError

    def random_monomial(self, rng: random.Random, max_xdeg: int = 3):
        raise NotImplementedError

    def relations(self) -> list[Relation]:
        raise NotImplementedError

    def sort_key(self, mono):
        return tuple(mono)

    def render_monomial(self, mono) -> str:
        return str(mono)

    def x_power(self, k: int) -> Element:
        raise NotImplementedError(f"{self.family} has no Laurent generator x")

    # -- derived structure --------------------------------------------------

    @property
    def label(self):
        p = ",".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.family}({p})"

    def scalar(self, c) -> Element:
        return Element._trusted(self, _pruned({self.unit_monomial(): self.field(c)}))

    def one(self) -> Element:
        return self.scalar(1)

    def zero(self) -> Element:
        return Element._trusted(self, {})

    def monomial(self, mono, c=1) -> Element:
        return Element(self, {mono: self.field(c)})

    def from_laurent(self, f: LaurentPoly) -> Element:
        out = self.zero()
        for e, c in f.terms.items():
            out = out + self.x_power(e) * c
        return out

    def mul_monomials(self, a, b) -> dict:
        key = (a, b)
        hit = self._mul_cache.get(key)
        if hit is None:
            hit = _pruned(self._mul_monomials(a, b))
            self._mul_cache[key] = hit
        return hit

    def mul(self, a: Element, b: Element) -> Element:
        if a.algebra is not self or b.algebra is not self:
            raise PresentationMismatchError(
                f"{a.algebra.label} * {b.algebra.label} evaluated in {self.label}"
            )
        out: dict = {}
        mm = self.mul_monomials
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                c = c1 * c2
                for m, d in mm(m1, m2).items():
                    _accumulate(out, m, c * d)
        return Element._trusted(self, _pruned(out))

    def _runs(self, mono):
        return [(g, len(list(grp))) for g, grp in groupby(self.factorize(mono))]

    def _delta_power(self, gen, k):
        key = (gen, k)
        hit = self._delta_power_cache.get(key)
        if hit is None:
            if k == 1:
                hit = self.generator_coproduct(gen)
            else:
                hit = self._delta_power(gen, k - 1) * self.generator_coproduct(gen)
            self._delta_power_cache[key] = hit
        return hit

    def coproduct_monomial(self, mono) -> TensorElement:
        hit = self._delta_cache.get(mono)
        if hit is None:
            unit = self.unit_monomial()
            hit = TensorElement._trusted(self, {(unit, unit): self.field.one}, 2)
            for gen, k in self._runs(mono):
                hit = hit * self._delta_power(gen, k)
            self._delta_cache[mono] = hit
        return hit

    def coproduct(self, a: Element) -> TensorElement:
        out: dict = {}
        for mono, c in a.terms.items():
            for key, d in self.coproduct_monomial(mono).terms.items():
                _accumulate(out, key, c * d)
        return TensorElement._trusted(self, _pruned(out), 2)

    def counit(self, a: Element) -> CycNum:
        total = self.field.zero
        for mono, c in a.terms.items():
            e = self.counit_monomial(mono)
            if e:
                total = total + c * e
        return total

    def _antipode_power(self, gen, k):
        key = (gen, k)
        hit = self._antipode_power_cache.get(key)
        if hit is None:
            if k == 1:
                hit = self.generator_antipode(gen)
            else:
                hit = self._antipode_power(gen, k - 1) * self.generator_antipode(gen)
            self._antipode_power_cache[key] = hit
        return hit

    def antipode_monomial(self, mono) -> Element:
        hit = self._antipode_cache.get(mono)
        if hit is None:
            hit = self.one()
            for gen, k in reversed(self._runs(mono)):
                hit = hit * self._antipode_power(gen, k)
            self._antipode_cache[mono] = hit
        return hit

    def antipode(self, a: Element) -> Element:
        out = self.zero()
        for mono, c in a.terms.items():
            out = out + self.antipode_monomial(mono) * c
        return out

    # -- words ----------------------------------------------------------------

    def as_element(self, item) -> Element:
        if isinstance(item, Element):
            return item
        if isinstance(item, str):
            return self.generator(item)
        if isinstance(item, LaurentPoly):
            return self.from_laurent(item)
        if isinstance(item, (int, Fraction, CycNum)):
            return self.scalar(item)
        raise TypeError(f"cannot use {item!r} as a word letter")

    def evaluate(self, word: Sequence) -> Element:
        result = self.one()
        for item in word:
            result = result * self.as_element(item)
        return result

    def word_coproduct(self, word) -> TensorElement:
        unit = self.unit_monomial()
        result = TensorElement._trusted(self, {(unit, unit): self.field.one}, 2)
        for item in word:
            result = result * self.coproduct(self.as_element(item))
        return result

    def word_antipode(self, word) -> Element:
        result = self.one()
        for item in reversed(list(word)):
            result = result * self.antipode(self.as_element(item))
        return result

    def word_counit(self, word) -> CycNum:
        result = self.field.one
        for item in word:
            result = result * self.counit(self.as_element(item))
        return result

    # -- slot maps for TensorElement.map_slots ---------------------------------

    def _id_map(self, mono):
        return {(mono,): self.field.one}

    def _delta_map(self, mono):
        return self.coproduct_monomial(mono).terms

    def _counit_map(self, mono):
        e = self.counit_monomial(mono)
        return {(): e} if e else {}

    def _antipode_map(self, mono):
        return {(k,): c for k, c in self.antipode_monomial(mono).terms.items()}

    def sample_monomials(self, seed: int, count: int, max_xdeg: int = 3) -> list:
        rng = random.Random(seed)
        return [self.random_monomial(rng, max_xdeg) for _ in range(count)]

    def render(self, e: Element) -> str:
        if not e.terms:
            return "0"
        parts = []
        for mono in sorted(e.terms, key=self.sort_key):
            c = e.terms[mono]
            word = self.render_monomial(mono)
            if c == 1:
                parts.append(word)
            else:
                parts.append(f"({c})*{word}" if word != "1" else f"({c})")
        return " + ".join(parts)


# -- checks -------------------------------------------------------------------


def check_relation(pres: HopfPresentation, lhs, rhs, name="relation") -> CheckResult:
    diff = pres.evaluate(lhs) - pres.evaluate(rhs)
    return CheckResult(name, not diff, diff)


def check_relation_hopf(pres: HopfPresentation, rel: Relation) -> list[CheckResult]:
    """Both sides of a relation get equal coproducts, counits and antipodes."""
    out = []
    d = pres.word_coproduct(rel.lhs) - pres.word_coproduct(rel.rhs)
    out.append(CheckResult(f"delta respects {rel.label}", not d, d))
    e = pres.word_counit(rel.lhs) - pres.word_counit(rel.rhs)
    out.append(CheckResult(f"counit respects {rel.label}", not e, e))
    s = pres.word_antipode(rel.lhs) - pres.word_antipode(rel.rhs)
    out.append(CheckResult(f"antipode respects {rel.label}", not s, s))
    return out


def check_delta_multiplicative(a: Element, b: Element) -> CheckResult:
    pres = a.algebra
    diff = pres.coproduct(a * b) - pres.coproduct(a) * pres.coproduct(b)
    e = pres.counit(a * b) - pres.counit(a) * pres.counit(b)
    return CheckResult("delta/counit multiplicative", not diff and not e, diff if diff else e)


def check_coassoc(a: Element) -> CheckResult:
    pres = a.algebra
    delta = pres.coproduct(a)
    left = delta.map_slots(pres._delta_map, pres._id_map)
    right = delta.map_slots(pres._id_map, pres._delta_map)
    diff = left - right
    return CheckResult("coassociativity", not diff, diff)


def check_counit_law(a: Element) -> CheckResult:
    pres = a.algebra
    delta = pres.coproduct(a)
    left = delta.map_slots(pres._counit_map, pres._id_map)
    right = delta.map_slots(pres._id_map, pres._counit_map)
    target = {(k,): c for k, c in a.terms.items()}
    ok = left.terms == target and right.terms == target
    return CheckResult("counit law", ok, None if ok else (left, right))


def check_antipode(a: Element) -> CheckResult:
    """m(S (x) id) Delta(a) = eps(a) 1 = m(id (x) S) Delta(a)."""
    pres = a.algebra
    delta = pres.coproduct(a)
    target = pres.scalar(pres.counit(a))
    left = delta.map_slots(pres._antipode_map, pres._id_map).contract()
    right = delta.map_slots(pres._id_map, pres._antipode_map).contract()
    ok = left == target and right == target
    return CheckResult("antipode convolution", ok, None if ok else (left - target, right - target))


def check_antipode_antihom(a: Element, b: Element) -> CheckResult:
    pres = a.algebra
    diff = pres.antipode(a * b) - pres.antipode(b) * pres.antipode(a)
    return CheckResult("antipode anti-homomorphism", not diff, diff)


def check_associative(a: Element, b: Element, c: Element) -> CheckResult:
    diff = (a * b) * c - a * (b * c)
    return CheckResult("associativity", not diff, diff)


def check_factorization(pres: HopfPresentation, mono) -> CheckResult:
    """The generator factorization multiplies back to the monomial itself."""
    diff = pres.evaluate(pres.factorize(mono)) - pres.monomial(mono)
    return CheckResult("factorization", not diff, diff)


def _merge(results: Iterable[CheckResult], name: str) -> CheckResult:
    """Collapse many results into one, keeping the first failure as detail."""
    count = 0
    for r in results:
        count += 1
        if not r.passed:
            return CheckResult(name, False, f"{r.name}: {r.render_detail()}", r.error)
    return CheckResult(name, True, f"{count} cases")


def axiom_suite(pres: HopfPresentation, seed: int = 0, samples: int = 50, max_xdeg: int = 3):
    """All Hopf axiom checks of one presentation, in a fixed order.

    Yields CheckResults named by suite section; each aggregates many cases.
    """
    gens = [pres.generator(g) for g in pres.generator_names]
    monos = pres.sample_monomials(seed, samples, max_xdeg)
    elems = [pres.monomial(m) for m in monos]
    rng = random.Random(seed + 1)
    pairs = [(rng.choice(elems), rng.choice(elems)) for _ in range(samples)]
    triples = [(rng.choice(elems), rng.choice(elems), rng.choice(elems)) for _ in range(samples)]
    rels = pres.relations()

    yield ("relations", lambda: _merge(
        (check_relation(pres, r.lhs, r.rhs, r.label) for r in rels), "relations"))
    yield ("factorization", lambda: _merge(
        (check_factorization(pres, m) for m in monos), "factorization"))
    yield ("unit", lambda: _merge(
        (CheckResult("unit", pres.one() * e == e and e * pres.one() == e, e) for e in elems + gens),
        "unit"))
    yield ("associativity (generator triples)", lambda: _merge(
        (check_associative(a, b, c) for a in gens for b in gens for c in gens),
        "associativity (generator triples)"))
    yield ("associativity", lambda: _merge(
        (check_associative(a, b, c) for a, b, c in triples), "associativity"))
    yield ("delta respects relations", lambda: _merge(
        (r for rel in rels for r in check_relation_hopf(pres, rel)), "delta respects relations"))
    yield ("delta multiplicative (generator pairs)", lambda: _merge(
        (check_delta_multiplicative(a, b) for a in gens for b in gens),
        "delta multiplicative (generator pairs)"))
    yield ("delta multiplicative (sampled pairs)", lambda: _merge(
        (check_delta_multiplicative(a, b) for a, b in pairs), "delta multiplicative (sampled pairs)"))
    yield ("coassociativity", lambda: _merge(
        (check_coassoc(a) for a in gens + elems), "coassociativity"))
    yield ("counit law", lambda: _merge(
        (check_counit_law(a) for a in gens + elems), "counit law"))
    yield ("antipode convolution", lambda: _merge(
        (check_antipode(a) for a in gens + elems), "antipode convolution"))
    yield ("antipode anti-homomorphism", lambda: _merge(
        [check_antipode_antihom(a, b) for a in gens for b in gens]
        + [check_antipode_antihom(a, b) for a, b in pairs],
        "antipode anti-homomorphism"))


def run_axiom_suite(pres, seed=0, samples=50, max_xdeg=3) -> list[CheckResult]:
    return [thunk() for _, thunk in axiom_suite(pres, seed, samples, max_xdeg)]
