import random

import pytest

from hopfgk.errors import PresentationMismatchError
from hopfgk.families import DAlgebra, LiuAlgebra, Plain, TaftAlgebra, UWord, make_family
from hopfgk.hopfcore import (
    TensorElement,
    check_antipode,
    check_coassoc,
    check_counit_law,
    check_delta_multiplicative,
    check_relation,
    run_axiom_suite,
)
from hopfgk.qcomb import gauss_binomial


@pytest.fixture(scope="module")
def D3():
    return DAlgebra(3, 1)


def test_unit_acts_trivially(D3):
    rng = random.Random(1)
    for _ in range(20):
        a = D3.monomial(D3.random_monomial(rng))
        assert D3.one() * a == a == a * D3.one()


def test_y_times_u0(D3):
    expected = D3.from_laurent(D3.phis.phi(0)) * D3.u(1)
    assert expected.terms == {UWord(0, 0, 1): D3.field.one, UWord(1, 0, 1): -D3.gamma ** -1}
    assert D3.generator("y") * D3.u(0) == expected


def test_u0_squared_normal_form(D3):
    gamma = D3.gamma
    # (1/3) x^-2 (1 - gamma^-1 x)(1 - gamma^-2 x) g
    c = D3.field(1) / 3
    want = {
        Plain(-2, 0, 1): c,
        Plain(-1, 0, 1): -c * (gamma ** -1 + gamma ** -2),
        Plain(0, 0, 1): c * gamma ** -3,
    }
    got = (D3.u(0) * D3.u(0)).terms
    assert got == {k: v for k, v in want.items() if v}


def test_counit_examples(D3):
    assert D3.counit(D3.one()) == 1
    assert D3.counit(D3.u(0) * D3.u(0)) == 1
    for b in range(1, 3):
        for c in range(3):
            assert D3.counit(D3.monomial(Plain(2, b, c))) == 0


def test_coproduct_examples(D3):
    one = D3.one()
    assert D3.coproduct(one).terms == {(Plain(0, 0, 0), Plain(0, 0, 0)): D3.field.one}
    y, g = D3.generator("y"), D3.generator("g")
    assert D3.coproduct(y) == TensorElement.tensor(y, g) + TensorElement.tensor(one, y)


def test_delta_y_squared_in_liu():
    B = LiuAlgebra(3, 2)
    y, g, one = B.generator("y"), B.generator("g"), B.one()
    gamma = B.gamma
    want = (TensorElement.tensor(y * y, g * g) + TensorElement.tensor(y, y * g) * (1 + gamma ** -1)
            + TensorElement.tensor(one, y * y))
    assert B.coproduct(y * y) == want


@pytest.mark.parametrize("n", [3, 4, 5])
def test_delta_y_power_matches_qbinomial(n):
    B = LiuAlgebra(n, 1)
    q = B.gamma ** -1
    y, g = B.generator("y"), B.generator("g")
    for k in range(n):
        want = TensorElement(B, {}, 2)
        for t in range(k + 1):
            want = want + TensorElement.tensor(y ** t, y ** (k - t) * g ** t) * gauss_binomial(k, t, q)
        assert B.coproduct(y ** k) == want


def test_antipode_examples(D3):
    assert D3.antipode(D3.one()) == D3.one()
    y, g = D3.generator("y"), D3.generator("g")
    g_inv = D3.x_power(-3) * g * g
    assert D3.antipode(y) == -(y * g_inv)
    assert D3.antipode(g) * g == D3.one()
    assert D3.antipode(D3.generator("x")) * D3.generator("x") == D3.one()


def test_check_relation_examples(D3):
    T = TaftAlgebra(4, 1)
    assert check_relation(T, ("x", "g"), (T.xi, "g", "x")).passed
    assert check_relation(D3, ("y", "g"), (D3.gamma, "g", "y")).passed
    for i in range(3):
        rhs = (D3.gamma ** i, D3.x_power(-2), "g", f"u{i}")
        assert check_relation(D3, (f"u{i}", "g"), rhs).passed
    assert not check_relation(D3, ("y", "g"), ("g", "y")).passed


def test_u1_convolution_vanishes(D3):
    u1 = D3.u(1)
    delta = D3.coproduct(u1)
    right = delta.map_slots(D3._id_map, D3._antipode_map).contract()
    left = delta.map_slots(D3._antipode_map, D3._id_map).contract()
    assert not right and not left
    assert D3.counit(u1) == 0


def test_single_checks_on_unit_and_generators(D3):
    for e in [D3.one()] + [D3.generator(n) for n in D3.generator_names]:
        assert check_coassoc(e).passed
        assert check_counit_law(e).passed
        assert check_antipode(e).passed
    assert check_delta_multiplicative(D3.u(1), D3.u(2)).passed


def test_mixed_presentations_rejected(D3):
    other = DAlgebra(3, 1)
    with pytest.raises(PresentationMismatchError):
        D3.u(0) * other.u(0)
    with pytest.raises(PresentationMismatchError):
        D3.u(0) + other.u(0)


def test_tensor_multiplication_associative(D3):
    rng = random.Random(5)
    monos = D3.sample_monomials(3, 12)
    tens = [D3.coproduct_monomial(m) for m in monos]
    for _ in range(15):
        a, b, c = rng.choice(tens), rng.choice(tens), rng.choice(tens)
        assert (a * b) * c == a * (b * c)


def test_flip_and_map_slots(D3):
    delta = D3.coproduct(D3.generator("y"))
    assert delta.flip().flip() == delta
    assert delta.flip() != delta
    eps_left = delta.map_slots(D3._counit_map, D3._id_map)
    assert eps_left.arity == 1


def test_suite_detects_broken_antipode():
    D = DAlgebra(3, 1)
    from hopfgk.families import generator_antipodes_D

    table = generator_antipodes_D(D)
    table["u1"] = table["u1"] * 2
    failed = {r.name for r in run_axiom_suite(D, 0, 20) if not r.passed}
    assert "antipode convolution" in failed


def test_suite_detects_broken_coproduct():
    T = TaftAlgebra(4, 1)
    T.generator_coproduct = lambda name, T=T: TensorElement.tensor(T.generator(name), T.generator(name))
    failed = {r.name for r in run_axiom_suite(T, 0, 20) if not r.passed}
    assert "delta respects relations" in failed or "counit law" in failed


def test_suite_is_deterministic():
    a = run_axiom_suite(make_family("D", m=2, d=2), seed=9, samples=10)
    b = run_axiom_suite(make_family("D", m=2, d=2), seed=9, samples=10)
    assert [(r.name, r.passed, r.detail) for r in a] == [(r.name, r.passed, r.detail) for r in b]
