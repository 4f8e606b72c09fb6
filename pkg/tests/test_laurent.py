import random

import pytest
from hypothesis import given, settings, strategies as st

from hopfgk.errors import ParameterError
from hopfgk.exactnum import CyclotomicField, primitive_roots
from hopfgk.laurent import LaurentPoly, PhiFamily, cyclic_run, phi_product_omit, phi_segment, residue

Q = CyclotomicField(1)


def P(terms, F=Q):
    return LaurentPoly(F, terms)


def test_basic_arithmetic():
    one_plus, one_minus = P({0: 1, 1: 1}), P({0: 1, 1: -1})
    assert one_plus * one_minus == P({0: 1, 2: -1})
    f = P({-2: 3, 5: 1})
    assert f * 1 == f
    assert f - f == P({})
    assert not P({0: 0})
    assert P({-1: 2}) ** -2 == P({2: Q(1) / 4})


def test_bar_and_counit():
    assert P({3: 2}).bar() == P({-3: 2})
    assert P({0: 1}).bar() == P({0: 1})
    assert P({0: 1, 7: -1}).counit_eval() == 0
    assert P({0: 5}).counit_eval() == 5


def test_bar_identity_from_antipode_step():
    # x^d bar(phi_s) = -gamma^(-s-1) phi_(m-s-2) at m=3, d=1, s=0
    F = CyclotomicField(3)
    gamma = F.zeta(1)
    fam = PhiFamily(3, 1, gamma)
    lhs = fam.phi(0).bar().shift(1)
    assert lhs == fam.phi(1).scale(-gamma ** -1)


@pytest.mark.parametrize("m, d", [(m, d) for m in range(2, 7) for d in (1, 2, 3)])
def test_bar_identity_all_s(m, d):
    F = CyclotomicField(m)
    for gamma in primitive_roots(F, m):
        fam = PhiFamily(m, d, gamma)
        for s in range(m):
            assert fam.phi(s).bar().shift(d) == fam.phi(m - s - 2).scale(-gamma ** (-s - 1))


def test_phi_examples():
    fam = PhiFamily(2, 1, Q(-1))
    assert fam.phi(0) == P({0: 1, 1: 1})
    assert fam.phi(2) == fam.phi(0)
    assert fam.phi(0) * fam.phi(1) == P({0: 1, 2: -1})
    F = CyclotomicField(5)
    assert PhiFamily(5, 2, F.zeta(1)).phi(4) == P({0: 1, 2: -1}, F)


def test_omit_examples():
    fam = PhiFamily(2, 1, Q(-1))
    assert phi_product_omit(fam, []) == P({0: 1, 2: -1})
    assert phi_product_omit(fam, [0, 1]) == P({0: 1})
    assert phi_product_omit(fam, [1]) == P({0: 1, 1: 1})
    assert phi_product_omit(fam, [3]) == P({0: 1, 1: 1})


def test_counit_of_partial_product_is_m():
    F = CyclotomicField(3)
    fam = PhiFamily(3, 1, F.zeta(1))
    assert fam.product(range(2)).counit_eval() == 3


def test_segment_cases():
    F = CyclotomicField(3)
    fam = PhiFamily(3, 1, F.zeta(1))
    assert phi_segment(fam, 0, 1) == fam.phi(0) * fam.phi(1)
    assert phi_segment(fam, 2, 1) == P({0: 1}, F)
    assert phi_segment(fam, 0, -1) == P({0: 1}, F)
    assert phi_segment(fam, 2, 0) == fam.phi(2) * fam.phi(0)
    assert phi_segment(fam, 1, 1) == fam.phi(1)


@pytest.mark.parametrize("m", range(1, 9))
def test_segment_matches_omission(m):
    F = CyclotomicField(m)
    gamma = F.zeta(1)
    for d in (1, 2):
        fam = PhiFamily(m, d, gamma)
        for i in range(m):
            for j in range(m):
                omitted = cyclic_run(-1 - j, i - 1, m)
                assert fam.segment(i, m - 2 - j) == fam.product_omit(omitted), (i, j)


def test_segment_matches_omission_random_raw_indices():
    rng = random.Random(7)
    for _ in range(30):
        m = rng.randint(2, 8)
        i, j = rng.randint(-20, 20), rng.randint(-20, 20)
        F = CyclotomicField(m)
        fam = PhiFamily(m, rng.randint(1, 3), F.zeta(1))
        assert fam.segment(i, m - 2 - j) == fam.product_omit(cyclic_run(-1 - j, i - 1, m))


def test_cyclic_run():
    assert cyclic_run(1, 3, 5) == [1, 2, 3]
    assert cyclic_run(4, 1, 5) == [4, 0, 1]
    assert sorted(cyclic_run(2, 1, 5)) == [0, 1, 2, 3, 4]
    assert residue(-1, 4) == 3


@pytest.mark.parametrize("m", range(1, 9))
def test_full_product(m):
    F = CyclotomicField(m)
    for gamma in primitive_roots(F, m):
        for d in (1, 2, 3):
            assert PhiFamily(m, d, gamma).product(range(m)) == P({0: 1, m * d: -1}, F)


def test_non_primitive_gamma_rejected():
    with pytest.raises(ParameterError):
        PhiFamily(2, 1, Q(1))


laurent = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5)


@settings(max_examples=80, deadline=None)
@given(laurent, laurent, laurent)
def test_ring_and_bar_homomorphism(a, b, c):
    f, g, h = P(a), P(b), P(c)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f.bar().bar() == f
    assert (f * g).bar() == f.bar() * g.bar()
    assert (f * g).counit_eval() == f.counit_eval() * g.counit_eval()
    assert (f + g).counit_eval() == f.counit_eval() + g.counit_eval()
