"""Winding automorphisms, bigradings, io/im, the even-even part of D, and the quotient D/(y).

The automorphisms used here are diagonal on every normal-form basis, so a
monomial's bidegree is read off from two scalars and the bigraded pieces of
an element are just fibres of its support.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from math import lcm

from .errors import ParameterError, QuotientConventionError, UnsupportedFamilyError
from .exactnum import CycNum, multiplicative_order
from .families import DAlgebra, LiuAlgebra, Plain, TaftAlgebra, UWord
from .hopfcore import CheckResult, Element, HopfPresentation, TensorElement, _merge
from .laurent import LaurentPoly, residue


# -- diagonal automorphisms ---------------------------------------------------------


def _letter_scalar(action, letter, pres):
    if letter == "X":
        return action["x"].inv()
    return action[letter]


class DiagonalAutomorphism:
    """Generator h -> c_h h, extended multiplicatively.

    Construction checks every defining relation survives the substitution.
    """

    def __init__(self, pres: HopfPresentation, action: dict, label: str = "", validate: bool = True):
        F = pres.field
        self.pres = pres
        self.label = label
        self.action = {k: F(v) for k, v in action.items()}
        for name in pres.generator_names:
            if name == "X":
                continue
            if name not in self.action:
                raise ParameterError(f"{label or 'automorphism'}: no action given for generator {name}")
            if not self.action[name]:
                raise ParameterError(f"{label or 'automorphism'}: generator {name} sent to 0")
        self._mono_cache: dict = {}
        if validate:
            bad = [r for r in self.relation_checks() if not r.passed]
            if bad:
                raise ParameterError(f"{label or 'automorphism'} does not respect {bad[0].name}: {bad[0].detail}")

    def scalar(self, letter: str) -> CycNum:
        return _letter_scalar(self.action, letter, self.pres)

    def monomial_scalar(self, mono) -> CycNum:
        hit = self._mono_cache.get(mono)
        if hit is None:
            hit = self.pres.field.one
            for letter in self.pres.factorize(mono):
                hit = hit * self.scalar(letter)
            self._mono_cache[mono] = hit
        return hit

    def __call__(self, e: Element) -> Element:
        return Element(e.algebra, {k: c * self.monomial_scalar(k) for k, c in e.terms.items()})

    def _map_letter(self, item):
        pres = self.pres
        if isinstance(item, str):
            return pres.as_element(item) * self.scalar(item)
        if isinstance(item, LaurentPoly):
            lam = self.action["x"]
            return pres.from_laurent(LaurentPoly(item.field, {e: c * lam ** e for e, c in item.terms.items()}))
        if isinstance(item, Element):
            return self(item)
        return pres.as_element(item)

    def apply_word(self, word) -> Element:
        result = self.pres.one()
        for item in word:
            result = result * self._map_letter(item)
        return result

    def relation_checks(self) -> list[CheckResult]:
        out = []
        for rel in self.pres.relations():
            diff = self.apply_word(rel.lhs) - self.apply_word(rel.rhs)
            out.append(CheckResult(rel.label, not diff, diff))
        return out

    def power(self, k: int) -> "DiagonalAutomorphism":
        return DiagonalAutomorphism(
            self.pres, {g: c ** k for g, c in self.action.items()}, f"{self.label}^{k}", validate=False
        )

    def compose(self, other: "DiagonalAutomorphism") -> "DiagonalAutomorphism":
        return DiagonalAutomorphism(
            self.pres, {g: c * other.action[g] for g, c in self.action.items()},
            f"{self.label}{other.label}", validate=False,
        )

    def same_action(self, other: "DiagonalAutomorphism") -> bool:
        return all(self.action[g] == other.action[g] for g in self.action)

    def is_identity(self) -> bool:
        return all(c == 1 for c in self.action.values())

    def __repr__(self):
        inner = ", ".join(f"{g}->{c}" for g, c in self.action.items())
        return f"DiagonalAutomorphism({self.label}: {inner})"


def _winding_table(pres):
    F = pres.field
    if isinstance(pres, DAlgebra):
        xi, gam = pres.xi, pres.gamma
        left = {"x": 1, "y": 1, "g": gam.inv()}
        right = {"x": 1, "y": gam.inv(), "g": gam.inv()}
        for i in range(pres.m):
            left[f"u{i}"] = xi.inv()
            right[f"u{i}"] = xi ** (-(2 * i + 1))
        return left, right
    if isinstance(pres, TaftAlgebra):
        xi = pres.xi
        return {"x": 1, "g": xi.inv()}, {"x": xi ** (-pres.t), "g": xi.inv()}
    if isinstance(pres, LiuAlgebra):
        gam = pres.gamma
        return {"x": 1, "y": 1, "g": gam.inv()}, {"x": 1, "y": gam.inv(), "g": gam.inv()}
    raise UnsupportedFamilyError(
        f"winding automorphisms are only tabulated for taft, liu and D, not {pres.family}"
    )


def winding_autos(pres: HopfPresentation) -> tuple[DiagonalAutomorphism, DiagonalAutomorphism]:
    """(left, right) winding automorphisms of the left integral character."""
    cache = pres.__dict__.get("_winding")
    if cache is None:
        left, right = _winding_table(pres)
        cache = (DiagonalAutomorphism(pres, left, "Xi_l"), DiagonalAutomorphism(pres, right, "Xi_r"))
        pres.__dict__["_winding"] = cache
    return cache


def auto_order(a: DiagonalAutomorphism) -> int:
    out = 1
    for g, c in a.action.items():
        k = multiplicative_order(c)
        if k is None:
            raise ParameterError(f"{a.label}: scalar on {g} is not a root of unity, order infinite")
        out = lcm(out, k)
    return out


def intersection_order(a: DiagonalAutomorphism, b: DiagonalAutomorphism) -> int:
    """|<a> cap <b>| by enumerating both cyclic groups."""
    pb = [b.power(k) for k in range(auto_order(b))]
    count = 0
    for k in range(auto_order(a)):
        ak = a.power(k)
        if any(ak.same_action(x) for x in pb):
            count += 1
    return count


def io_im(pres: HopfPresentation) -> tuple[int, int]:
    left, right = winding_autos(pres)
    io = auto_order(left)
    return io, io // intersection_order(left, right)


# -- bigrading ----------------------------------------------------------------------------


def grading_root(pres: HopfPresentation) -> tuple[CycNum, int]:
    """(zeta, N): the root fixing the degree labels and the number of labels per side."""
    if isinstance(pres, DAlgebra):
        return pres.xi.inv(), 2 * pres.m
    if isinstance(pres, TaftAlgebra):
        return pres.xi.inv(), pres.n
    if isinstance(pres, LiuAlgebra):
        return pres.gamma.inv(), pres.n
    raise UnsupportedFamilyError(f"no bigrading for {pres.family}")


@dataclass
class BigradedDecomposition:
    element: Element
    N: int
    components: dict = field(default_factory=dict)

    def total(self) -> Element:
        out = self.element.algebra.zero()
        for c in self.components.values():
            out = out + c
        return out

    def support(self):
        return sorted(self.components)

    def is_homogeneous(self):
        return len(self.components) <= 1

    def __getitem__(self, ij):
        return self.components.get(ij, self.element.algebra.zero())


class Bigrading:
    """Monomial bidegrees for a presentation with winding automorphisms."""

    def __init__(self, pres: HopfPresentation):
        self.pres = pres
        self.left, self.right = winding_autos(pres)
        self.zeta, self.N = grading_root(pres)
        self._log = {}
        p = pres.field.one
        for k in range(self.N):
            self._log.setdefault(p, k)
            p = p * self.zeta
        self._cache: dict = {}

    def _dlog(self, c, side, mono):
        k = self._log.get(c)
        if k is None:
            raise ValueError(f"{side} scalar {c} of {self.pres.render_monomial(mono)} is not a power of zeta")
        return k

    def degree(self, mono) -> tuple[int, int]:
        hit = self._cache.get(mono)
        if hit is None:
            hit = (
                self._dlog(self.left.monomial_scalar(mono), "left", mono),
                self._dlog(self.right.monomial_scalar(mono), "right", mono),
            )
            self._cache[mono] = hit
        return hit

    def decompose(self, e: Element) -> BigradedDecomposition:
        parts: dict = {}
        for mono, c in e.terms.items():
            parts.setdefault(self.degree(mono), {})[mono] = c
        return BigradedDecomposition(e, self.N, {k: Element(e.algebra, v) for k, v in sorted(parts.items())})


def bigrade(e: Element) -> BigradedDecomposition:
    return bigrading_of(e.algebra).decompose(e)


def bigrading_of(pres) -> Bigrading:
    hit = pres.__dict__.get("_bigrading")
    if hit is None:
        hit = pres.__dict__["_bigrading"] = Bigrading(pres)
    return hit


def expected_degree_D(mono, m: int) -> tuple[int, int]:
    """Closed-form bidegrees in D, used as an oracle."""
    N = 2 * m
    if type(mono) is Plain:
        return (2 * mono.c) % N, (2 * mono.b + 2 * mono.c) % N
    return (2 * mono.c + 1) % N, (2 * (mono.c + mono.i) + 1) % N


def grading_laws(pres: HopfPresentation, seed: int = 0, samples: int = 30, max_xdeg: int = 3) -> list[CheckResult]:
    """Degree additivity, both coideal laws, S(H_ij) in H_-j,-i, and eps off the diagonal."""
    B = bigrading_of(pres)
    N = B.N
    monos = pres.sample_monomials(seed, samples, max_xdeg)
    rng = random.Random(seed + 7)
    homog = [pres.monomial(m, 1) for m in monos]
    # also a few two-term homogeneous elements sharing a bidegree
    for m in monos[: samples // 3]:
        shifted = replace(m, a=m.a + 1)
        if B.degree(shifted) == B.degree(m):
            homog.append(pres.monomial(m, 2) + pres.monomial(shifted, -3))
    pairs = [(rng.choice(homog), rng.choice(homog)) for _ in range(samples)]

    def deg(e):
        d = bigrade(e)
        assert d.is_homogeneous()
        return d.support()[0] if d.components else None

    def additivity():
        for a, b in pairs:
            da, db = deg(a), deg(b)
            want = ((da[0] + db[0]) % N, (da[1] + db[1]) % N)
            prod = a * b
            got = set(bigrade(prod).support())
            if got - {want}:
                yield CheckResult("degree additivity", False, (a, b, sorted(got), want))
            else:
                yield CheckResult("degree additivity", True)

    def coideal():
        for h in homog:
            i, j = deg(h)
            delta = pres.coproduct(h)
            left_bad = [k for k in delta.terms if B.degree(k[0])[0] != i]
            right_bad = [k for k in delta.terms if B.degree(k[1])[1] != j]
            ok = not left_bad and not right_bad
            yield CheckResult("coideal law", ok, None if ok else (h, left_bad[:3], right_bad[:3]))

    def antipode_law():
        for h in homog:
            i, j = deg(h)
            s = pres.antipode(h)
            want = ((-j) % N, (-i) % N)
            got = set(bigrade(s).support())
            ok = not (got - {want})
            yield CheckResult("antipode degree", ok, None if ok else (h, sorted(got), want))

    def counit_law():
        for h in homog:
            i, j = deg(h)
            ok = i == j or not pres.counit(h)
            yield CheckResult("counit off diagonal", ok, None if ok else h)

    return [
        _merge(additivity(), "degree additivity"),
        _merge(coideal(), "coideal law"),
        _merge(antipode_law(), "antipode maps (i,j) to (-j,-i)"),
        _merge(counit_law(), "counit vanishes off the diagonal"),
    ]


def taft_degree_constraint(pres: TaftAlgebra, seed=0, samples=30, max_xdeg=3) -> CheckResult:
    """With t | n, every monomial has bidegree (i, j) with i = j mod t."""
    t = pres.t
    if t == 0 or pres.n % t:
        raise ParameterError("the constraint needs t | n and t > 0")
    B = bigrading_of(pres)
    bad = [m for m in pres.sample_monomials(seed, samples, max_xdeg)
           if (B.degree(m)[0] - B.degree(m)[1]) % t]
    return CheckResult("H_ij = 0 unless i = j mod t", not bad, bad[:3] or None)


# -- the even-even part of D ---------------------------------------------------------------------


def tilde_subalgebra(D: DAlgebra, seed: int = 0, samples: int = 20, max_xdeg: int = 3) -> list[CheckResult]:
    """Closure of the even-even part of D and its match with B(m, md, gamma)."""
    B = bigrading_of(D)
    liu = LiuAlgebra(D.m, D.omega, gamma=D.gamma)

    def even(mono):
        i, j = B.degree(mono)
        return i % 2 == 0 and j % 2 == 0

    rng = random.Random(seed)
    monos = []
    while len(monos) < samples:
        mo = D.random_monomial(rng, max_xdeg)
        if even(mo):
            monos.append(mo)
    pairs = [(rng.choice(monos), rng.choice(monos)) for _ in range(samples)]
    gens = [Plain(1, 0, 0), Plain(-1, 0, 0), Plain(0, 1, 0), Plain(0, 0, 1)]

    def closure_mul():
        for p, q in pairs:
            prod = D.mul_monomials(p, q)
            ok = all(even(k) for k in prod)
            yield CheckResult("product closure", ok, None if ok else (p, q))

    def closure_delta():
        for p in monos + gens:
            delta = D.coproduct_monomial(p)
            ok = all(even(a) and even(b) for a, b in delta.terms)
            yield CheckResult("coproduct closure", ok, None if ok else p)

    def closure_antipode():
        for p in monos + gens:
            ok = all(even(k) for k in D.antipode_monomial(p).terms)
            yield CheckResult("antipode closure", ok, None if ok else p)

    def matches_liu():
        for p, q in pairs:
            ok = D.mul_monomials(p, q) == liu.mul_monomials(p, q)
            yield CheckResult("product matches Liu", ok, None if ok else (p, q))
        for p in monos + gens:
            ok = D.coproduct_monomial(p).terms == liu.coproduct_monomial(p).terms
            yield CheckResult("coproduct matches Liu", ok, None if ok else p)
            ok = D.antipode_monomial(p).terms == liu.antipode_monomial(p).terms
            yield CheckResult("antipode matches Liu", ok, None if ok else p)
            ok = D.counit_monomial(p) == liu.counit_monomial(p)
            yield CheckResult("counit matches Liu", ok, None if ok else p)

    def liu_relations():
        for rel in liu.relations():
            diff = D.evaluate(rel.lhs) - D.evaluate(rel.rhs)
            yield CheckResult(rel.label, not diff, diff)

    return [
        _merge(closure_mul(), "even-even part closed under product"),
        _merge(closure_delta(), "even-even part closed under coproduct"),
        _merge(closure_antipode(), "even-even part closed under antipode"),
        _merge(matches_liu(), "even-even part agrees with B(m, md, gamma)"),
        _merge(liu_relations(), "Liu relations hold in D"),
    ]


# -- integral character and its winding maps ---------------------------------------------------


def integral_character_table(pres: HopfPresentation) -> dict:
    F = pres.field
    if isinstance(pres, DAlgebra):
        table = {"x": F.one, "y": F.zero, "g": pres.gamma.inv(), "u0": pres.xi.inv()}
        for s in range(1, pres.m):
            table[f"u{s}"] = F.zero
        return table
    if isinstance(pres, TaftAlgebra):
        return {"x": F.zero, "g": pres.xi.inv()}
    if isinstance(pres, LiuAlgebra):
        return {"x": F.one, "y": F.zero, "g": pres.gamma.inv()}
    raise UnsupportedFamilyError(f"no integral character tabulated for {pres.family}")


class Character:
    """An algebra map to the ground field given on generators."""

    def __init__(self, pres: HopfPresentation, table: dict):
        self.pres = pres
        self.table = dict(table)
        if "x" in table and "X" in pres.generator_names:
            self.table["X"] = table["x"].inv()
        self._cache: dict = {}

    def monomial(self, mono) -> CycNum:
        hit = self._cache.get(mono)
        if hit is None:
            hit = self.pres.field.one
            for letter in self.pres.factorize(mono):
                hit = hit * self.table[letter]
            self._cache[mono] = hit
        return hit

    def __call__(self, e: Element) -> CycNum:
        total = self.pres.field.zero
        for mono, c in e.terms.items():
            total = total + c * self.monomial(mono)
        return total

    def word(self, word) -> CycNum:
        out = self.pres.field.one
        for item in word:
            if isinstance(item, str):
                out = out * self.table[item]
            elif isinstance(item, LaurentPoly):
                out = out * item.evaluate(self.table["x"])
            elif isinstance(item, Element):
                out = out * self(item)
            else:
                out = out * self.pres.field(item)
        return out

    def left_winding(self, e: Element) -> Element:
        """sum pi(a1) a2."""
        out: dict = {}
        for (a, b), c in self.pres.coproduct(e).terms.items():
            v = self.monomial(a)
            if v:
                out[b] = out.get(b, self.pres.field.zero) + c * v
        return Element(self.pres, out)

    def right_winding(self, e: Element) -> Element:
        """sum a1 pi(a2)."""
        out: dict = {}
        for (a, b), c in self.pres.coproduct(e).terms.items():
            v = self.monomial(b)
            if v:
                out[a] = out.get(a, self.pres.field.zero) + c * v
        return Element(self.pres, out)


def integral_character(pres: HopfPresentation, seed: int = 0, samples: int = 20) -> list[CheckResult]:
    """pi respects every relation and regenerates the displayed winding automorphisms."""
    pi = Character(pres, integral_character_table(pres))
    left, right = winding_autos(pres)

    def relations():
        for rel in pres.relations():
            lhs, rhs = pi.word(rel.lhs), pi.word(rel.rhs)
            yield CheckResult(rel.label, lhs == rhs, (lhs, rhs))

    def unit():
        yield CheckResult("pi(1) = 1", pi(pres.one()) == 1)

    monos = pres.sample_monomials(seed, samples, 3)
    rng = random.Random(seed + 11)
    pairs = [(rng.choice(monos), rng.choice(monos)) for _ in range(samples)]

    def multiplicative():
        for p, q in pairs:
            lhs = pi(pres.monomial(p) * pres.monomial(q))
            rhs = pi.monomial(p) * pi.monomial(q)
            yield CheckResult("pi multiplicative", lhs == rhs, (p, q))

    def windings():
        elems = [pres.generator(g) for g in pres.generator_names] + [pres.monomial(m) for m in monos]
        for e in elems:
            ok_l = pi.left_winding(e) == left(e)
            ok_r = pi.right_winding(e) == right(e)
            yield CheckResult("winding maps", ok_l and ok_r, e)

    return [
        _merge(chain_(unit(), relations()), "pi respects the relations"),
        _merge(multiplicative(), "pi multiplicative on samples"),
        _merge(windings(), "pi regenerates the winding automorphisms"),
    ]


def chain_(*its):
    for it in its:
        yield from it


def integral_character_D(m: int, d: int, xi_power: int = 1) -> list[CheckResult]:
    return integral_character(DAlgebra(m, d, xi_power))


def cocommutativity_witness(pres: HopfPresentation, seed: int = 0, samples: int = 20, max_xdeg: int = 3):
    """A monomial whose coproduct differs from its flip, or None."""
    candidates = []
    for name in pres.generator_names:
        candidates.extend(pres.generator(name).terms)
    candidates += pres.sample_monomials(seed, samples, max_xdeg)
    for mono in candidates:
        delta = pres.coproduct_monomial(mono)
        if delta != delta.flip():
            return mono
    return None


# -- the quotient D/(y) ---------------------------------------------------------------------------


class QuotientDPrime:
    """Finite-dimensional quotient D/(y) with an explicit multiplication table."""

    def __init__(self, D: DAlgebra, lam: list[CycNum]):
        self.D = D
        self.m, self.d = D.m, D.d
        self.field = D.field
        self.lam = lam
        m, d, md = D.m, D.d, D.omega
        self.basis = [Plain(a, 0, c) for c in range(m) for a in range(md)]
        self.basis += [UWord(a, c, s) for s in range(m) for c in range(m) for a in range(d)]
        self.index = {b: k for k, b in enumerate(self.basis)}
        self.table: dict = {}
        for p in self.basis:
            for q in self.basis:
                self.table[(p, q)] = self.reduce_terms(D.mul_monomials(p, q))

    @property
    def dimension(self):
        return len(self.basis)

    def reduce_monomial(self, mono) -> dict:
        F = self.field
        if type(mono) is Plain:
            if mono.b:
                return {}
            return {Plain(mono.a % self.D.omega, 0, mono.c): F.one}
        q, r = divmod(mono.a, self.d)
        return {UWord(r, mono.c, mono.i): self.lam[mono.i] ** q}

    def reduce_terms(self, terms: dict) -> dict:
        out: dict = {}
        for mono, c in terms.items():
            for k, v in self.reduce_monomial(mono).items():
                s = out.get(k)
                out[k] = c * v if s is None else s + c * v
        return {k: v for k, v in out.items() if v}

    def reduce(self, e: Element) -> dict:
        return self.reduce_terms(e.terms)

    def mul(self, a: dict, b: dict) -> dict:
        out: dict = {}
        for p, c1 in a.items():
            for q, c2 in b.items():
                for k, v in self.table[(p, q)].items():
                    s = out.get(k)
                    out[k] = c1 * c2 * v if s is None else s + c1 * c2 * v
        return {k: v for k, v in out.items() if v}

    def counit(self, a: dict) -> CycNum:
        total = self.field.zero
        for mono, c in a.items():
            total = total + c * self.D.counit_monomial(mono)
        return total

    def check_associative(self) -> CheckResult:
        one = self.field.one
        for p in self.basis:
            for q in self.basis:
                pq = self.table[(p, q)]
                for r in self.basis:
                    lhs = self.mul(pq, {r: one})
                    rhs = self.mul({p: one}, self.table[(q, r)])
                    if lhs != rhs:
                        return CheckResult("D' associativity", False, (p, q, r))
        return CheckResult("D' associativity", True, f"{self.dimension ** 3} triples")

    def integral(self) -> dict:
        """The displayed sum of x^i g^j and x^i g^j u_0 over i < md, j < m, reduced."""
        terms: dict = {}
        F = self.field
        for i in range(self.D.omega):
            for j in range(self.m):
                terms[Plain(i, 0, j)] = F.one
                terms[UWord(i, j, 0)] = F.one
        return self.reduce_terms(terms)


def _derive_lambda(D: DAlgebra) -> list[CycNum]:
    """x^d u_s = lam_s u_s, read off y u_(s-1) = phi_(s-1) u_s, which lies in (y)."""
    lam = []
    for s in range(D.m):
        prod = (D.generator("y") * D.u(s - 1)).terms
        c0 = prod.get(UWord(0, 0, s))
        cd = prod.get(UWord(D.d, 0, s))
        if len(prod) != 2 or c0 is None or cd is None:
            raise QuotientConventionError(f"y u_{s - 1} has unexpected shape {prod}")
        lam.append(-c0 / cd)
    return lam


def build_quotient_Dprime(m: int, d: int, xi_power: int = 1, convention: str = "derived") -> QuotientDPrime:
    """Materialize D/(y) and confirm the reduction really is a quotient map.

    convention "derived" reads the x^d u_s rule off the ideal; "printed" uses
    x^d u_s = gamma^-s u_s instead, which the validation below rejects for m > 2.
    """
    D = DAlgebra(m, d, xi_power)
    if convention == "derived":
        lam = _derive_lambda(D)
    elif convention == "printed":
        lam = [D.gamma ** (-s) for s in range(m)]
    else:
        raise ParameterError(f"unknown convention {convention!r}")
    Q = QuotientDPrime(D, lam)
    if Q.dimension != 2 * m * m * d:
        raise QuotientConventionError(f"D' has dimension {Q.dimension}, expected {2 * m * m * d}")
    y = D.generator("y")
    for b in Q.basis:
        e = D.monomial(b)
        for side, prod in (("y b", y * e), ("b y", e * y)):
            if Q.reduce(prod):
                raise QuotientConventionError(
                    f"reduction does not kill {side} for b = {D.render_monomial(b)}; (y) is not in the kernel"
                )
    # reduction respects products of lifts from a window wider than the basis
    rng = random.Random(0)
    for _ in range(60):
        p, q = D.random_monomial(rng, 2 * m * d), D.random_monomial(rng, 2 * m * d)
        lhs = Q.reduce_terms(D.mul_monomials(p, q))
        rhs = Q.mul(Q.reduce_monomial(p), Q.reduce_monomial(q))
        if lhs != rhs:
            raise QuotientConventionError(f"reduction is not multiplicative at {p} * {q}")
    return Q


def check_integral_Dprime(Q: QuotientDPrime) -> list[CheckResult]:
    integral = Q.integral()
    eps = Q.counit(integral)
    out = [CheckResult("eps(integral) = 2m^2 d", eps == 2 * Q.m * Q.m * Q.d, eps)]
    one = Q.field.one
    bad = None
    for h in Q.basis:
        lhs = Q.mul({h: one}, integral)
        e = Q.D.counit_monomial(h)
        rhs = {k: v * e for k, v in integral.items() if v * e}
        if lhs != rhs:
            bad = h
            break
    out.append(CheckResult("h * integral = eps(h) integral", bad is None, bad))
    return out
