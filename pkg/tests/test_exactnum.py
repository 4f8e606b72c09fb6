import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hopfgk.errors import EmbeddingError, FieldMismatchError
from hopfgk.exactnum import (
    CyclotomicField,
    cyclotomic_polynomial,
    embed,
    euler_phi,
    is_primitive_root,
    multiplicative_order,
    primitive_roots,
    zeta,
)


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


@pytest.mark.parametrize("L, expected", [(1, (-1, 1)), (2, (1, 1)), (4, (1, 0, 1)), (6, (1, -1, 1)),
                                         (12, (1, 0, -1, 0, 1))])
def test_cyclotomic_polynomial_small(L, expected):
    assert cyclotomic_polynomial(L) == expected


@pytest.mark.parametrize("L", range(1, 31))
def test_cyclotomic_polynomial_degree_and_product(L):
    phi = cyclotomic_polynomial(L)
    assert phi[-1] == 1
    assert len(phi) - 1 == euler_phi(L)
    # prod over divisors is z^L - 1
    prod = [1]
    for k in range(1, L + 1):
        if L % k == 0:
            prod = _poly_mul(prod, list(cyclotomic_polynomial(k)))
    assert prod == [-1] + [0] * (L - 1) + [1]


def test_zeta_examples():
    F4, F6 = CyclotomicField(4), CyclotomicField(6)
    assert zeta(F4, 0) == 1
    assert zeta(F4, 2) == -1
    assert zeta(F6, 3) == -1
    assert zeta(F6, 7) == zeta(F6, 1)


def test_field_is_flyweight():
    assert CyclotomicField(12) is CyclotomicField(12)


def test_inverse_of_i():
    F = CyclotomicField(4)
    z = F.zeta(1)
    assert z.inv() == -z
    assert z ** 6 == -1
    assert CyclotomicField(6).zeta(1) ** 6 == 1


def test_division_by_zero():
    F = CyclotomicField(5)
    with pytest.raises(ZeroDivisionError):
        F.zero.inv()
    with pytest.raises(ZeroDivisionError):
        F.one / 0


def test_field_mismatch():
    with pytest.raises(FieldMismatchError):
        CyclotomicField(3).zeta(1) + CyclotomicField(4).zeta(1)


def _random(F, rng):
    return F.from_coeffs([Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(F.degree)])


@pytest.mark.parametrize("L", [3, 5, 8, 12, 15, 24])
def test_inverse_on_random_elements(L):
    F = CyclotomicField(L)
    rng = random.Random(L)
    n = 0
    while n < 20:
        x = _random(F, rng)
        if not x:
            continue
        assert x * x.inv() == 1
        assert x.inv() * x == 1
        n += 1


@pytest.mark.parametrize("L", [6, 10, 24])
def test_ring_axioms_on_samples(L):
    F = CyclotomicField(L)
    rng = random.Random(100 + L)
    xs = [_random(F, rng) for _ in range(50)]
    for _ in range(50):
        a, b, c = rng.choice(xs), rng.choice(xs), rng.choice(xs)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert a - a == 0


@pytest.mark.parametrize("L", range(1, 25))
def test_generator_is_primitive_and_roots_sum_to_zero(L):
    F = CyclotomicField(L)
    assert is_primitive_root(F.zeta(1), L)
    total = F.zero
    for k in range(L):
        total = total + F.zeta(k)
    assert total == (1 if L == 1 else 0)


def test_is_primitive_root_examples():
    F = CyclotomicField(6)
    assert is_primitive_root(F.zeta(1), 6)
    assert not is_primitive_root(F.zeta(2), 6)
    assert is_primitive_root(F.zeta(2), 3)
    for m in range(2, 8):
        xi = CyclotomicField(2 * m).zeta(1)
        assert is_primitive_root(xi, 2 * m)
        assert xi ** m == -1


def test_multiplicative_order():
    F = CyclotomicField(3)
    # Q(zeta_3) also holds the sixth roots of unity
    assert multiplicative_order(-F.zeta(1)) == 6
    assert multiplicative_order(F.one * 2) is None


def test_embed_examples():
    assert embed(CyclotomicField(2).zeta(1), 4) == CyclotomicField(4).zeta(2)
    assert embed(CyclotomicField(5).one, 20) == 1
    assert embed(CyclotomicField(3).zeta(1), 6) == CyclotomicField(6).zeta(2)
    with pytest.raises(EmbeddingError):
        embed(CyclotomicField(4).zeta(1), 6)


@pytest.mark.parametrize("L, M", [(3, 12), (4, 8), (5, 10), (6, 24)])
def test_embed_is_homomorphism_and_keeps_primitivity(L, M):
    F = CyclotomicField(L)
    rng = random.Random(L * M)
    for _ in range(20):
        a, b = _random(F, rng), _random(F, rng)
        assert embed(a * b, M) == embed(a, M) * embed(b, M)
        assert embed(a + b, M) == embed(a, M) + embed(b, M)
    for k in range(L):
        z = F.zeta(k)
        for N in (L, 2 * L):
            if M % N == 0 or N == L:
                assert is_primitive_root(z, N) == is_primitive_root(embed(z, M), N)


def test_primitive_roots_count():
    for L in range(1, 20):
        F = CyclotomicField(L)
        for N in range(1, L + 1):
            if L % N == 0:
                assert len(primitive_roots(F, N)) == euler_phi(N)


def test_rationals_and_serialization():
    F = CyclotomicField(6)
    x = F(Fraction(3, 6))
    assert x.is_rational()
    assert x.to_fraction() == Fraction(1, 2)
    assert x == Fraction(1, 2)
    assert F.zeta(1).serialize() == ["0", "1"]
    assert (F.zeta(1) / 3).serialize() == ["0", "1/3"]


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=4, max_size=4), st.lists(st.integers(-20, 20), min_size=4, max_size=4))
def test_hash_matches_equality(a, b):
    F = CyclotomicField(5)
    x, y = F.from_coeffs(a), F.from_coeffs(b)
    if x == y:
        assert hash(x) == hash(y)
    assert x + y - y == x
