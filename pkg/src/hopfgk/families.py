"""Concrete presentations: k[x], k[x^-1, x], kD, Taft, generalized Liu, and D(m, d, xi).

Each class fixes a normal-form word shape, multiplies normal forms directly,
and lists the images of its generators under the structure maps.  Monomial
coproducts and antipodes come from the engine in hopfcore.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError, UnsupportedFamilyError
from .exactnum import CycNum, CyclotomicField, is_primitive_root
from .hopfcore import Element, HopfPresentation, Relation, TensorElement
from .laurent import LaurentPoly, PhiFamily, cyclic_run, residue


# -- monomial shapes ------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class XPow:
    """x^a."""

    a: int


@dataclass(frozen=True, slots=True)
class DihWord:
    """g^e x^a with e in {0, 1}."""

    e: int
    a: int


@dataclass(frozen=True, slots=True)
class TaftWord:
    """x^a g^c with a >= 0."""

    a: int
    c: int


@dataclass(frozen=True, slots=True)
class Plain:
    """x^a y^b g^c."""

    a: int
    b: int
    c: int


@dataclass(frozen=True, slots=True)
class UWord:
    """x^a g^c u_i."""

    a: int
    c: int
    i: int


def _xpart(a):
    return "" if a == 0 else ("x" if a == 1 else f"x^{a}")


def _join(*parts):
    word = " ".join(p for p in parts if p)
    return word or "1"


def _pw(sym, k):
    return "" if k == 0 else (sym if k == 1 else f"{sym}^{k}")


def _acc(out, key, c):
    s = out.get(key)
    out[key] = c if s is None else s + c


def _x_letters(a):
    return ["x"] * a if a >= 0 else ["X"] * (-a)


# -- the commutative / cocommutative examples -------------------------------------


class PolynomialAlgebra(HopfPresentation):
    """k[x] with x primitive."""

    family = "poly"
    generator_names = ("x",)
    x_nonnegative = True

    def __init__(self):
        super().__init__(CyclotomicField(1), {})

    def unit_monomial(self):
        return XPow(0)

    def _mul_monomials(self, a, b):
        return {XPow(a.a + b.a): self.field.one}

    def factorize(self, mono):
        return ["x"] * mono.a

    def x_power(self, k):
        if k < 0:
            raise ParameterError("k[x] has no negative powers of x")
        return self.monomial(XPow(k))

    def generator(self, name):
        return self.monomial(XPow(1))

    def generator_coproduct(self, name):
        x, one = self.generator("x"), self.one()
        return TensorElement.tensor(x, one) + TensorElement.tensor(one, x)

    def generator_antipode(self, name):
        return -self.generator("x")

    def counit_monomial(self, mono):
        return self.field.one if mono.a == 0 else self.field.zero

    def random_monomial(self, rng, max_xdeg=3):
        return XPow(rng.randint(0, max_xdeg))

    def relations(self):
        return []

    def sort_key(self, mono):
        return (mono.a,)

    def render_monomial(self, mono):
        return _join(_xpart(mono.a))


class LaurentAlgebra(HopfPresentation):
    """k[x^-1, x] with x group-like."""

    family = "laurent"
    generator_names = ("x", "X")

    def __init__(self):
        super().__init__(CyclotomicField(1), {})

    def unit_monomial(self):
        return XPow(0)

    def _mul_monomials(self, a, b):
        return {XPow(a.a + b.a): self.field.one}

    def factorize(self, mono):
        return _x_letters(mono.a)

    def x_power(self, k):
        return self.monomial(XPow(k))

    def generator(self, name):
        return self.x_power(1 if name == "x" else -1)

    def generator_coproduct(self, name):
        g = self.generator(name)
        return TensorElement.tensor(g, g)

    def generator_antipode(self, name):
        return self.generator("X" if name == "x" else "x")

    def counit_monomial(self, mono):
        return self.field.one

    def random_monomial(self, rng, max_xdeg=3):
        return XPow(rng.randint(-max_xdeg, max_xdeg))

    def relations(self):
        return [Relation("x x^-1 = 1", ("x", "X"), (1,)), Relation("x^-1 x = 1", ("X", "x"), (1,))]

    def sort_key(self, mono):
        return (mono.a,)

    def render_monomial(self, mono):
        return _join(_xpart(mono.a))


class DihedralAlgebra(HopfPresentation):
    """Group algebra of the infinite dihedral group <g, x | g^2 = 1, gxg = x^-1>."""

    family = "dihedral"
    generator_names = ("g", "x", "X")

    def __init__(self):
        super().__init__(CyclotomicField(1), {})

    def unit_monomial(self):
        return DihWord(0, 0)

    def _mul_monomials(self, p, q):
        # g^e1 x^a1 g^e2 x^a2 = g^(e1+e2) x^(+-a1 + a2)
        a1 = -p.a if q.e else p.a
        return {DihWord((p.e + q.e) % 2, a1 + q.a): self.field.one}

    def factorize(self, mono):
        return ["g"] * mono.e + _x_letters(mono.a)

    def x_power(self, k):
        return self.monomial(DihWord(0, k))

    def generator(self, name):
        if name == "g":
            return self.monomial(DihWord(1, 0))
        return self.x_power(1 if name == "x" else -1)

    def generator_coproduct(self, name):
        g = self.generator(name)
        return TensorElement.tensor(g, g)

    def generator_antipode(self, name):
        return self.generator({"g": "g", "x": "X", "X": "x"}[name])

    def counit_monomial(self, mono):
        return self.field.one

    def random_monomial(self, rng, max_xdeg=3):
        return DihWord(rng.randint(0, 1), rng.randint(-max_xdeg, max_xdeg))

    def relations(self):
        return [
            Relation("g^2 = 1", ("g", "g"), (1,)),
            Relation("gxg = x^-1", ("g", "x", "g"), ("X",)),
            Relation("x x^-1 = 1", ("x", "X"), (1,)),
        ]

    def sort_key(self, mono):
        return (mono.e, mono.a)

    def render_monomial(self, mono):
        return _join(_pw("g", mono.e), _xpart(mono.a))


# -- Taft -------------------------------------------------------------------------


class TaftAlgebra(HopfPresentation):
    """Infinite Taft algebra H(n, t, xi): g^n = 1, xg = xi gx, x skew-primitive."""

    family = "taft"
    generator_names = ("x", "g")
    x_nonnegative = True

    def __init__(self, n: int, t: int, xi_power: int = 1):
        if n <= 1:
            raise ParameterError(f"Taft needs n > 1 (n={n})")
        if not 0 <= t <= n - 1:
            raise ParameterError(f"Taft needs 0 <= t <= n-1 (t={t}, n={n})")
        F = CyclotomicField(n)
        xi = F.zeta(xi_power)
        if not is_primitive_root(xi, n):
            raise ParameterError(f"xi = zeta_{n}^{xi_power} is not a primitive {n}-th root of unity")
        super().__init__(F, {"n": n, "t": t, "xi_power": xi_power})
        self.n, self.t, self.xi, self.xi_power = n, t, xi, xi_power

    def _xi(self, k):
        return self.field.zeta(self.xi_power * k)

    def unit_monomial(self):
        return TaftWord(0, 0)

    def _mul_monomials(self, p, q):
        # g^c1 x^a2 = xi^(-c1 a2) x^a2 g^c1
        return {TaftWord(p.a + q.a, (p.c + q.c) % self.n): self._xi(-p.c * q.a)}

    def factorize(self, mono):
        return ["x"] * mono.a + ["g"] * mono.c

    def x_power(self, k):
        if k < 0:
            raise ParameterError("the Taft algebra has no negative powers of x")
        return self.monomial(TaftWord(k, 0))

    def generator(self, name):
        return self.monomial(TaftWord(1, 0) if name == "x" else TaftWord(0, 1))

    def _g(self, c):
        return self.monomial(TaftWord(0, c % self.n))

    def generator_coproduct(self, name):
        if name == "g":
            g = self._g(1)
            return TensorElement.tensor(g, g)
        x = self.generator("x")
        return TensorElement.tensor(x, self._g(self.t)) + TensorElement.tensor(self.one(), x)

    def generator_antipode(self, name):
        if name == "g":
            return self._g(-1)
        return -(self.generator("x") * self._g(-self.t))

    def counit_monomial(self, mono):
        return self.field.one if mono.a == 0 else self.field.zero

    def random_monomial(self, rng, max_xdeg=3):
        return TaftWord(rng.randint(0, max_xdeg), rng.randrange(self.n))

    def relations(self):
        return [
            Relation("g^n = 1", ("g",) * self.n, (1,)),
            Relation("xg = xi gx", ("x", "g"), (self.xi, "g", "x")),
        ]

    def sort_key(self, mono):
        return (mono.a, mono.c)

    def render_monomial(self, mono):
        return _join(_xpart(mono.a), _pw("g", mono.c))


# -- generalized Liu ---------------------------------------------------------------


class _PlainRules:
    """Shared x^a y^b g^c arithmetic with y g = gamma g y, y^n = 1 - x^w, g^n = x^w."""

    n: int
    omega: int
    field: CyclotomicField

    def _gamma(self, k):
        raise NotImplementedError

    def _emit_plain(self, out, coef, a, B, C):
        """Accumulate coef x^a y^B g^C with B, C < 2n."""
        n, w = self.n, self.omega
        if C >= n:
            C -= n
            a += w
        if B >= n:
            B -= n
            _acc(out, Plain(a, B, C), coef)
            _acc(out, Plain(a + w, B, C), -coef)
        else:
            _acc(out, Plain(a, B, C), coef)

    def _plain_times_plain(self, p, q):
        out = {}
        self._emit_plain(out, self._gamma(-q.b * p.c), p.a + q.a, p.b + q.b, p.c + q.c)
        return out


class LiuAlgebra(_PlainRules, HopfPresentation):
    """Generalized Liu algebra B(n, omega, gamma)."""

    family = "liu"
    generator_names = ("x", "X", "y", "g")

    def __init__(self, n: int, omega: int, xi_power: int = 1, gamma: CycNum | None = None):
        if n < 1:
            raise ParameterError(f"Liu needs n >= 1 (n={n})")
        if omega < 1:
            raise ParameterError(f"Liu needs omega >= 1 (omega={omega})")
        if gamma is None:
            F = CyclotomicField(n)
            gamma = F.zeta(xi_power)
            params = {"n": n, "omega": omega, "xi_power": xi_power}
        else:
            F = gamma.field
            params = {"n": n, "omega": omega, "gamma": gamma}
        if not is_primitive_root(gamma, n):
            raise ParameterError(f"gamma = {gamma} is not a primitive {n}-th root of unity")
        super().__init__(F, params)
        self.n, self.omega, self.gamma = n, omega, gamma
        self._gpow = {}

    def _gamma(self, k):
        k %= self.n
        hit = self._gpow.get(k)
        if hit is None:
            hit = self._gpow[k] = self.gamma ** k
        return hit

    def unit_monomial(self):
        return Plain(0, 0, 0)

    def _mul_monomials(self, p, q):
        return self._plain_times_plain(p, q)

    def factorize(self, mono):
        return _x_letters(mono.a) + ["y"] * mono.b + ["g"] * mono.c

    def x_power(self, k):
        return self.monomial(Plain(k, 0, 0))

    def generator(self, name):
        if name in ("x", "X"):
            return self.x_power(1 if name == "x" else -1)
        if self.n == 1:
            # y = 1 - x^w and g = x^w collapse into k[x^-1, x]
            xw = self.x_power(self.omega)
            return self.one() - xw if name == "y" else xw
        return self.monomial(Plain(0, 1, 0) if name == "y" else Plain(0, 0, 1))

    def generator_coproduct(self, name):
        if name == "y":
            y, g = self.generator("y"), self.generator("g")
            return TensorElement.tensor(y, g) + TensorElement.tensor(self.one(), y)
        h = self.generator(name)
        return TensorElement.tensor(h, h)

    def g_inverse(self):
        return self.x_power(-self.omega) * self.generator("g") ** (self.n - 1)

    def generator_antipode(self, name):
        if name == "x":
            return self.generator("X")
        if name == "X":
            return self.generator("x")
        if name == "g":
            return self.g_inverse()
        return -(self.generator("y") * self.g_inverse())

    def counit_monomial(self, mono):
        return self.field.one if mono.b == 0 else self.field.zero

    def random_monomial(self, rng, max_xdeg=3):
        return Plain(rng.randint(-max_xdeg, max_xdeg), rng.randrange(self.n), rng.randrange(self.n))

    def relations(self):
        n, w = self.n, self.omega
        one_minus = LaurentPoly(self.field, {0: 1, w: -1})
        return [
            Relation("x x^-1 = 1", ("x", "X"), (1,)),
            Relation("x^-1 x = 1", ("X", "x"), (1,)),
            Relation("xg = gx", ("x", "g"), ("g", "x")),
            Relation("xy = yx", ("x", "y"), ("y", "x")),
            Relation("yg = gamma gy", ("y", "g"), (self.gamma, "g", "y")),
            Relation("y^n = 1 - x^omega", ("y",) * n, (one_minus,)),
            Relation("g^n = x^omega", ("g",) * n, (LaurentPoly.monomial(self.field, w),)),
        ]

    def sort_key(self, mono):
        return (mono.a, mono.b, mono.c)

    def render_monomial(self, mono):
        return _join(_xpart(mono.a), _pw("y", mono.b), _pw("g", mono.c))


# -- D(m, d, xi) -----------------------------------------------------------------


class DAlgebra(_PlainRules, HopfPresentation):
    """The Hopf algebra D(m, d, xi) over Q(zeta_2m), xi = zeta_2m^xi_power."""

    family = "D"

    def __init__(self, m: int, d: int, xi_power: int = 1):
        if m <= 1:
            raise ParameterError(f"D needs m > 1 (m={m})")
        if d < 1:
            raise ParameterError(f"D needs d >= 1 (d={d})")
        if ((1 + m) * d) % 2:
            raise ParameterError(f"(1+m)d must be even (m={m}, d={d}, (1+m)d={(1 + m) * d})")
        F = CyclotomicField(2 * m)
        xi = F.zeta(xi_power)
        if not is_primitive_root(xi, 2 * m):
            raise ParameterError(f"xi = zeta_{2 * m}^{xi_power} is not a primitive {2 * m}-th root of unity")
        super().__init__(F, {"m": m, "d": d, "xi_power": xi_power})
        self.m, self.d, self.xi_power = m, d, xi_power
        self.n, self.omega = m, m * d
        self.xi = xi
        self.gamma = xi * xi
        self.phis = PhiFamily(m, d, self.gamma)
        self.generator_names = ("x", "X", "y", "g") + tuple(f"u{i}" for i in range(m))
        self._half = (1 + m) * d // 2
        self._inv_m = F(1) / m
        self._kappa = [self._kappa_raw(j) for j in range(m)]

    # scalars
    def _xi(self, k):
        return self.field.zeta(self.xi_power * k)

    def _gamma(self, k):
        return self.field.zeta(2 * self.xi_power * k)

    def _kappa_raw(self, j):
        c = self._xi(-j) * self._gamma(j * (j + 1) // 2) * self._inv_m
        return -c if j % 2 else c

    def kappa(self, j: int) -> CycNum:
        """u_i u_j leading scalar (-1)^j xi^-j gamma^(j(j+1)/2) / m, any integer j."""
        return self._kappa_raw(j)

    # normal forms
    def unit_monomial(self):
        return Plain(0, 0, 0)

    def _emit_u(self, out, coef, a, C, k):
        """Accumulate coef x^a g^C u_k with C < 2m."""
        if C >= self.m:
            C -= self.m
            a += self.omega
        _acc(out, UWord(a, C, k), coef)

    def _mul_monomials(self, p, q):
        m, d = self.m, self.d
        out = {}
        if type(p) is Plain and type(q) is Plain:
            return self._plain_times_plain(p, q)
        if type(p) is Plain:
            # x^a1 y^b g^c1 . x^a2 g^c2 u_i: move g^C left of y^b, then y^b u_i
            C = p.c + q.c
            coef = self._gamma(p.b * C)
            poly = self.phis.product(range(q.i, q.i + p.b))
            k = residue(q.i + p.b, m)
            for e, c in poly.terms.items():
                self._emit_u(out, coef * c, p.a + q.a + e, C, k)
            return out
        if type(q) is Plain:
            # u_i x^a = x^-a u_i, u_i y^b = xi^-b x^-bd (phi_i..phi_(i+b-1)) u_(i+b), u_k g^c = gamma^kc x^-2cd g^c u_k
            k = residue(p.i + q.b, m)
            coef = self._xi(-q.b) * self._gamma(k * q.c)
            poly = self.phis.product(range(p.i, p.i + q.b))
            base = p.a - q.a - q.b * d - 2 * q.c * d
            for e, c in poly.terms.items():
                self._emit_u(out, coef * c, base + e, p.c + q.c, k)
            return out
        # x^a1 g^c1 u_i . x^a2 g^c2 u_j
        i, j = p.i, q.i
        C = p.c + q.c
        r = residue(i + j, m)
        coef = self._gamma(i * q.c) * self._kappa[j] * self._gamma(-r * C)
        poly = self.phis.segment(i, m - 2 - j)
        base = p.a - q.a - 2 * q.c * d - self._half
        # g^C y^r g = gamma^(-rC) y^r g^(C+1), and C + 1 < 2m
        C += 1
        for e, c in poly.terms.items():
            a = base + e
            if C >= m:
                _acc(out, Plain(a + self.omega, r, C - m), coef * c)
            else:
                _acc(out, Plain(a, r, C), coef * c)
        return out

    def factorize(self, mono):
        if type(mono) is Plain:
            return _x_letters(mono.a) + ["y"] * mono.b + ["g"] * mono.c
        return _x_letters(mono.a) + ["g"] * mono.c + [f"u{mono.i}"]

    def x_power(self, k):
        return self.monomial(Plain(k, 0, 0))

    def u(self, i: int) -> Element:
        return self.monomial(UWord(0, 0, residue(i, self.m)))

    def generator(self, name):
        if name == "x":
            return self.x_power(1)
        if name == "X":
            return self.x_power(-1)
        if name == "y":
            return self.monomial(Plain(0, 1, 0))
        if name == "g":
            return self.monomial(Plain(0, 0, 1))
        if name.startswith("u"):
            return self.u(int(name[1:]))
        raise KeyError(name)

    def generator_coproduct(self, name):
        if name == "y":
            y, g = self.generator("y"), self.generator("g")
            return TensorElement.tensor(y, g) + TensorElement.tensor(self.one(), y)
        if name.startswith("u"):
            return generator_coproducts_D(self)[name]
        h = self.generator(name)
        return TensorElement.tensor(h, h)

    def generator_antipode(self, name):
        return generator_antipodes_D(self)[name]

    def counit_monomial(self, mono):
        if type(mono) is Plain:
            return self.field.one if mono.b == 0 else self.field.zero
        return self.field.one if mono.i == 0 else self.field.zero

    def random_monomial(self, rng, max_xdeg=3):
        a = rng.randint(-max_xdeg, max_xdeg)
        if rng.random() < 0.5:
            return Plain(a, rng.randrange(self.m), rng.randrange(self.m))
        return UWord(a, rng.randrange(self.m), rng.randrange(self.m))

    def relations(self):
        m, d, F = self.m, self.d, self.field
        rels = [
            Relation("x x^-1 = 1", ("x", "X"), (1,)),
            Relation("x^-1 x = 1", ("X", "x"), (1,)),
            Relation("xg = gx", ("x", "g"), ("g", "x")),
            Relation("xy = yx", ("x", "y"), ("y", "x")),
            Relation("yg = gamma gy", ("y", "g"), (self.gamma, "g", "y")),
            Relation("y^m = 1 - x^md", ("y",) * m, (LaurentPoly(F, {0: 1, m * d: -1}),)),
            Relation("g^m = x^md", ("g",) * m, (LaurentPoly.monomial(F, m * d),)),
        ]
        for i in range(m):
            ui, ui1 = f"u{i}", f"u{(i + 1) % m}"
            rels += [
                Relation(f"x u{i} = u{i} x^-1", ("x", ui), (ui, "X")),
                Relation(f"y u{i} = phi_{i} u{(i + 1) % m}", ("y", ui), (self.phis.phi(i), ui1)),
                Relation(f"y u{i} = xi x^d u{i} y", ("y", ui),
                         (self.xi, LaurentPoly.monomial(F, d), ui, "y")),
                Relation(f"u{i} g = gamma^{i} x^-2d g u{i}", (ui, "g"),
                         (self._gamma(i), LaurentPoly.monomial(F, -2 * d), "g", ui)),
            ]
        for i in range(m):
            for j in range(m):
                rels.append(Relation(f"u{i} u{j}", (f"u{i}", f"u{j}"), u_product_word(self, i, j)))
        return rels

    def sort_key(self, mono):
        if type(mono) is Plain:
            return (0, mono.a, mono.b, mono.c)
        return (1, mono.a, mono.c, mono.i)

    def render_monomial(self, mono):
        if type(mono) is Plain:
            return _join(_xpart(mono.a), _pw("y", mono.b), _pw("g", mono.c))
        return _join(_xpart(mono.a), _pw("g", mono.c), f"u{mono.i}")


# -- D: generator tables and closed-form oracles ----------------------------------


def generator_coproducts_D(D: DAlgebra) -> dict[str, TensorElement]:
    """Delta on x, x^-1, y, g, u_0 .. u_(m-1)."""
    cache = D.__dict__.setdefault("_gen_delta_table", {})
    if cache:
        return cache
    m, d = D.m, D.d
    for name in ("x", "X", "g"):
        h = D.generator(name)
        cache[name] = TensorElement.tensor(h, h)
    y, g = D.generator("y"), D.generator("g")
    cache["y"] = TensorElement.tensor(y, g) + TensorElement.tensor(D.one(), y)
    for i in range(m):
        terms = {}
        for j in range(m):
            left = UWord(0, 0, j)
            right = UWord(-j * d, j, residue(i - j, m))
            terms[(left, right)] = D._gamma(j * (i - j))
        cache[f"u{i}"] = TensorElement(D, terms, 2)
    return cache


def u_antipode_raw(D: DAlgebra, s: int) -> Element:
    """(-1)^s xi^-s gamma^(-s(s+1)/2) x^(sd + 3(1-m)d/2) g^(m-s-1) u_s for any integer s."""
    m, d = D.m, D.d
    c = D._xi(-s) * D._gamma(-(s * (s + 1) // 2))
    if s % 2:
        c = -c
    word = D.x_power(s * d + 3 * (1 - m) * d // 2)
    # g^(m-s-1) with an arbitrary integer exponent: g^m = x^md
    e = m - s - 1
    q, r = divmod(e, m)
    word = word * D.x_power(q * m * d) * D.generator("g") ** r
    return word * D.u(s) * c


def generator_antipodes_D(D: DAlgebra) -> dict[str, Element]:
    cache = D.__dict__.setdefault("_gen_antipode_table", {})
    if cache:
        return cache
    m = D.m
    g_inv = D.monomial(Plain(-D.omega, 0, m - 1))
    cache["x"] = D.generator("X")
    cache["X"] = D.generator("x")
    cache["g"] = g_inv
    cache["y"] = -(D.generator("y") * g_inv)
    for i in range(m):
        cache[f"u{i}"] = u_antipode_raw(D, i)
    return cache


def u_product_word(D: DAlgebra, i: int, j: int) -> tuple:
    """A generator word for u_i u_j, read off the three-case display."""
    m = D.m
    ib, jb = residue(i, m), residue(j, m)
    s = ib + jb
    if s <= m - 2:
        idx = range(ib, m - 1 - jb)
        ypow = s
    elif s == m - 1:
        idx = ()
        ypow = s
    else:
        idx = list(range(ib, m)) + list(range(0, m - 1 - jb))
        ypow = s - m
    poly = D.phis.product(idx).shift(-D._half)
    return (D.kappa(jb), poly) + ("y",) * ypow + ("g",)


def u_product_three_case(D: DAlgebra, i: int, j: int) -> Element:
    """u_i u_j by literal substitution into the three-case display, 0 <= i, j < m."""
    return D.evaluate(u_product_word(D, i, j))


def u_product_unified(D: DAlgebra, i: int, j: int) -> Element:
    """u_i u_j from the omission form (run -1-j .. i-1 left out), valid for all integers i, j."""
    m = D.m
    poly = D.phis.product_omit(cyclic_run(-1 - j, i - 1, m))
    word = (D.kappa(j), poly.shift(-D._half)) + ("y",) * residue(i + j, m) + ("g",)
    return D.evaluate(word)


# -- factory -------------------------------------------------------------------------


FAMILY_IDS = ("poly", "laurent", "dihedral", "taft", "liu", "D")


def make_family(identifier: str, **params) -> HopfPresentation:
    """Build and validate a presentation by family id.

    Accepted keywords: taft n, t, xi_power; liu n, omega, xi_power (or gamma);
    D m, d, xi_power.  poly, laurent and dihedral take none.
    """
    key = identifier.lower() if identifier != "D" else "D"
    aliases = {"d": "D", "kx": "poly", "k[x]": "poly", "kd": "dihedral", "h": "taft", "b": "liu"}
    key = aliases.get(key, key)
    params = {k: v for k, v in params.items() if v is not None}
    try:
        if key == "poly":
            _no_params(key, params)
            return PolynomialAlgebra()
        if key == "laurent":
            _no_params(key, params)
            return LaurentAlgebra()
        if key == "dihedral":
            _no_params(key, params)
            return DihedralAlgebra()
        if key == "taft":
            return TaftAlgebra(params.pop("n"), params.pop("t"), params.pop("xi_power", 1), **params)
        if key == "liu":
            return LiuAlgebra(params.pop("n"), params.pop("omega"), params.pop("xi_power", 1), **params)
        if key == "D":
            return DAlgebra(params.pop("m"), params.pop("d"), params.pop("xi_power", 1), **params)
    except KeyError as exc:
        raise ParameterError(f"{key} needs parameter {exc.args[0]}") from None
    except TypeError as exc:
        raise ParameterError(f"bad parameters for {key}: {exc}") from None
    raise UnsupportedFamilyError(f"unknown family {identifier!r}; expected one of {', '.join(FAMILY_IDS)}")


def _no_params(key, params):
    if params:
        raise ParameterError(f"{key} takes no parameters, got {sorted(params)}")
