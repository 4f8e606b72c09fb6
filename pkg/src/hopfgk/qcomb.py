"""q-integers, Gaussian binomials and exact checks of the phi-product identities.

Every verifier evaluates one parameter instance exactly and returns an
IdentityReport carrying both sides, so a failure shows the offending
difference rather than a bare False.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Any

from .errors import PreconditionError
from .exactnum import CycNum, CyclotomicField, is_primitive_root, primitive_roots
from .laurent import LaurentPoly, PhiFamily


@dataclass
class IdentityReport:
    name: str
    params: dict[str, Any]
    lhs: Any
    rhs: Any
    holds: bool = field(init=False)

    def __post_init__(self):
        self.holds = self.lhs == self.rhs

    @property
    def difference(self):
        return self.lhs - self.rhs

    def __bool__(self):
        return self.holds

    def describe(self) -> str:
        p = ", ".join(f"{k}={v}" for k, v in self.params.items())
        if self.holds:
            return f"{self.name}({p}) holds"
        return f"{self.name}({p}) FAILS: lhs={self.lhs!r} rhs={self.rhs!r} diff={self.difference!r}"


def q_int(l: int, q: CycNum) -> CycNum:
    """(l)_q = 1 + q + ... + q^(l-1)."""
    total, p = q.field.zero, q.field.one
    for _ in range(l):
        total = total + p
        p = p * q
    return total


def q_factorial(l: int, q: CycNum) -> CycNum:
    out = q.field.one
    for k in range(1, l + 1):
        out = out * q_int(k, q)
    return out


_binom_cache: dict = {}


def gauss_binomial(n: int, l: int, q: CycNum) -> CycNum:
    """Gaussian binomial via the division-free Pascal recurrence.

    binom(n, l) = binom(n-1, l-1) + q^l binom(n-1, l); safe at roots of unity
    where q-factorials vanish.
    """
    F = q.field
    if l < 0 or l > n:
        return F.zero
    if l == 0 or l == n:
        return F.one
    key = (n, l, q)
    hit = _binom_cache.get(key)
    if hit is None:
        hit = gauss_binomial(n - 1, l - 1, q) + q ** l * gauss_binomial(n - 1, l, q)
        _binom_cache[key] = hit
    return hit


# -- Kassel's product formula ------------------------------------------------


def kassel_product(n: int, q: CycNum, a: CycNum) -> LaurentPoly:
    """(a - z)(a - qz)...(a - q^(n-1) z) expanded literally, z as the variable."""
    F = q.field
    out = LaurentPoly.constant(F, 1)
    for i in range(n):
        out = out * LaurentPoly(F, {0: a, 1: -(q ** i)})
    return out


def kassel_sum(n: int, q: CycNum, a: CycNum) -> LaurentPoly:
    """sum_l (-1)^l binom(n,l)_q q^(l(l-1)/2) a^(n-l) z^l."""
    F = q.field
    terms = {}
    for l in range(n + 1):
        c = gauss_binomial(n, l, q) * q ** (l * (l - 1) // 2) * a ** (n - l)
        terms[l] = -c if l % 2 else c
    return LaurentPoly(F, terms)


def kassel_expand_check(n: int, q: CycNum, a: CycNum) -> IdentityReport:
    a = q.field(a)
    return IdentityReport("kassel", {"n": n, "q": q, "a": a}, kassel_product(n, q, a), kassel_sum(n, q, a))


# -- phi-product identities --------------------------------------------------


def _family(m, d, gamma) -> PhiFamily:
    if not is_primitive_root(gamma, m):
        raise PreconditionError(f"gamma={gamma} is not a primitive {m}-th root of unity")
    return PhiFamily(m, d, gamma)


def verify_ce1(m: int, d: int, gamma: CycNum) -> IdentityReport:
    """sum_j gamma^-j * (phi product omitting j-1) = m x^((m-1)d)."""
    fam = _family(m, d, gamma)
    F = gamma.field
    lhs = LaurentPoly(F)
    for j in range(m):
        lhs = lhs + fam.product_omit([j - 1]).scale(gamma ** (-j))
    rhs = LaurentPoly.monomial(F, (m - 1) * d, m)
    return IdentityReport("ce1", {"m": m, "d": d, "gamma": gamma}, lhs, rhs)


def verify_ce2(m: int, d: int, gamma: CycNum) -> IdentityReport:
    if m < 2:
        raise PreconditionError("ce2 needs m >= 2")
    fam = _family(m, d, gamma)
    F = gamma.field
    lhs = LaurentPoly(F)
    for j in range(m):
        lhs = lhs + fam.product_omit([j - 2, j - 1]).scale(gamma ** (-j))
    return IdentityReport("ce2", {"m": m, "d": d, "gamma": gamma}, lhs, LaurentPoly(F))


def ce3_sum(m: int, d: int, xi: CycNum, gamma: CycNum) -> LaurentPoly:
    if m < 2:
        raise PreconditionError("ce3 needs m >= 2")
    fam = _family(m, d, gamma)
    xi = gamma.field(xi)
    if xi ** m != -1:
        raise PreconditionError(f"xi={xi} does not satisfy xi^m = -1")
    theta = xi ** 2 * gamma ** (-2)
    out = LaurentPoly(gamma.field)
    for j in range(m):
        out = out + fam.product_omit([j - 2, j - 1]).scale(theta ** j)
    return out


def verify_ce3(m: int, d: int, xi: CycNum, gamma: CycNum) -> IdentityReport:
    """Whether sum_j xi^2j gamma^-2j (omit j-2, j-1) vanishes; expected exactly when xi^2 = gamma."""
    lhs = ce3_sum(m, d, xi, gamma)
    return IdentityReport(
        "ce3", {"m": m, "d": d, "xi": xi, "gamma": gamma}, lhs, LaurentPoly(gamma.field)
    )


def ce3_biconditional(m: int, d: int, field: CyclotomicField | None = None) -> list[IdentityReport]:
    """Check 'sum vanishes iff xi^2 = gamma' over every admissible (xi, gamma).

    Returns one report per pair whose lhs is the observed vanishing and rhs
    the predicted one, so a report holds when the biconditional does.
    """
    F = field or CyclotomicField(2 * m)
    out = []
    xis = [z for z in (F.zeta(k) for k in range(F.order)) if z ** m == -1]
    for xi, gamma in iproduct(xis, primitive_roots(F, m)):
        vanishes = verify_ce3(m, d, xi, gamma).holds
        predicted = xi ** 2 == gamma
        out.append(
            IdentityReport("ce3-iff", {"m": m, "d": d, "xi": xi, "gamma": gamma}, vanishes, predicted)
        )
    return out


def _block(i, j):
    return [j - 1 - k for k in range(i + 1)]


def _check_i(m, i):
    if not 1 <= i <= m - 1:
        raise PreconditionError(f"need 1 <= i <= m-1, got i={i}, m={m}")


def verify_ce5(m: int, d: int, gamma: CycNum, i: int) -> IdentityReport:
    """sum_j gamma^-j * (omit j-1-i, ..., j-1) = 0."""
    _check_i(m, i)
    fam = _family(m, d, gamma)
    F = gamma.field
    lhs = LaurentPoly(F)
    for j in range(m):
        lhs = lhs + fam.product_omit(_block(i, j)).scale(gamma ** (-j))
    return IdentityReport("ce5", {"m": m, "d": d, "gamma": gamma, "i": i}, lhs, LaurentPoly(F))


def verify_ce6(m: int, d: int, gamma: CycNum, i: int) -> IdentityReport:
    """As ce5 with weight gamma^(-ij)."""
    _check_i(m, i)
    fam = _family(m, d, gamma)
    F = gamma.field
    lhs = LaurentPoly(F)
    for j in range(m):
        lhs = lhs + fam.product_omit(_block(i, j)).scale(gamma ** (-i * j))
    return IdentityReport("ce6", {"m": m, "d": d, "gamma": gamma, "i": i}, lhs, LaurentPoly(F))


def verify_ce7(m: int, i: int, j: int, t: int, l: int, q: CycNum) -> IdentityReport:
    if not (0 <= t <= i + j <= m - 1 and 0 <= l <= m - 1 - i - j and i >= 0 and j >= 0):
        raise PreconditionError(f"inadmissible indices m={m}, i={i}, j={j}, t={t}, l={l}")
    if not is_primitive_root(q, m):
        raise PreconditionError(f"q={q} is not a primitive {m}-th root of unity")
    s = i + j
    exp = (l + t) * (l + t + 1) // 2 + t * (s - t)
    lhs = q ** exp * gauss_binomial(m - 1 - t, l, q) * gauss_binomial(m - 1 + t - s, l + t, q)
    if (l + t) % 2:
        lhs = -lhs
    rhs = gauss_binomial(s, t, q) * gauss_binomial(m - 1 - s, l, q)
    return IdentityReport("ce7", {"m": m, "i": i, "j": j, "t": t, "l": l, "q": q}, lhs, rhs)


def ce7_instances(m: int):
    for i in range(m):
        for j in range(m - i):
            for t in range(i + j + 1):
                for l in range(m - i - j):
                    yield i, j, t, l


def identity_suite(m_values, d_values, ce7_max_m: int = 8, ce3_max_m: int = 8, kassel_max_n: int = 8):
    """Every cyclotomic identity check over the (m, d) grid; yields IdentityReports."""
    for m in m_values:
        F = CyclotomicField(2 * m)
        gammas = primitive_roots(F, m)
        for d in d_values:
            for gamma in gammas:
                yield verify_ce1(m, d, gamma)
                if m >= 2:
                    yield verify_ce2(m, d, gamma)
                    for i in range(1, m):
                        yield verify_ce5(m, d, gamma, i)
                        yield verify_ce6(m, d, gamma, i)
            if 2 <= m <= ce3_max_m:
                yield from ce3_biconditional(m, d, F)
        if 1 <= m <= ce7_max_m:
            for q in primitive_roots(F, m):
                for i, j, t, l in ce7_instances(m):
                    yield verify_ce7(m, i, j, t, l, q)
    for order in range(2, 9):
        F = CyclotomicField(order)
        for q in primitive_roots(F, order):
            for a in (F.one, F.zeta(1), F.zeta(2)):
                for n in range(kassel_max_n + 1):
                    yield kassel_expand_check(n, q, a)
