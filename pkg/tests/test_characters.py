import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import kquant as kq
from kquant.characters import exact_divide
from helpers import A1, A2, T1, T2

WP = kq.WeightPolynomial


def test_weight_polynomial_algebra():
    p = WP.monomial((2,)) + WP.monomial((0,), 3)
    q = WP.monomial((-1,))
    assert (p * q).coeff((1,)) == 1
    assert (p * q).coeff((-1,)) == 3
    assert p - p == WP.zero()
    assert not WP.zero()
    assert (p * 0) == WP.zero()
    assert (-p).coeff((2,)) == -1
    assert p.dimension() == 4


def test_weight_polynomial_drops_zero_terms():
    p = WP((((1,), 1),)) + WP((((1,), -1),))
    assert len(p) == 0
    assert p == WP.zero()


def test_to_list_sorted_and_roundtrip():
    p = WP.monomial((3,), 2) + WP.monomial((-1,), 5)
    rows = p.to_list()
    assert rows == [{"weight": [-1], "mult": 5}, {"weight": [3], "mult": 2}]
    assert WP.from_list(rows) == p


def test_exact_divide_basic():
    one = WP.one(1)
    t = WP.monomial((1,))
    num = one - t * t * t * t
    den = one - t
    assert exact_divide(num, den) == one + t + t * t + t * t * t
    with pytest.raises(ArithmeticError):
        exact_divide(one + t, one - t)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(-3, 3)),
                min_size=1, max_size=4),
       st.lists(st.tuples(st.integers(-4, 4), st.integers(-3, 3)),
                min_size=1, max_size=4))
def test_exact_divide_inverts_product(aterms, bterms):
    a = WP(((w,), c) for w, c in aterms)
    b = WP(((w,), c) for w, c in bterms)
    if not b:
        return
    assert exact_divide(a * b, b) == a


def test_weyl_character_a1():
    # chi_n has weights n, n-2, ..., -n
    for n in range(0, 7):
        ch = kq.weyl_character(A1, (n,))
        assert ch == WP(((n - 2 * i,), 1) for i in range(n + 1))


def test_weyl_character_a2_fundamental():
    ch = kq.weyl_character(A2, (1, 0))
    assert ch == WP({(1, 0): 1, (-1, 1): 1, (0, -1): 1})
    assert ch.dimension() == 3


def test_weyl_character_a2_adjoint():
    ch = kq.weyl_character(A2, (1, 1))
    assert ch.coeff((0, 0)) == 2
    for root in [(2, -1), (-1, 2), (1, 1)]:
        assert ch.coeff(root) == 1
        assert ch.coeff(tuple(-x for x in root)) == 1
    assert ch.dimension() == 8


def test_weyl_character_torus_is_monomial():
    assert kq.weyl_character(T2, (4, -1)) == WP.monomial((4, -1))


def test_weyl_character_rejects_non_dominant():
    with pytest.raises(kq.NotDominant):
        kq.weyl_character(A2, (1, -1))


def test_decompose_clebsch_gordan():
    prod = kq.weyl_character(A1, (1,)) * kq.weyl_character(A1, (1,))
    ch = kq.decompose(A1, prod)
    assert dict(ch.sorted_items()) == {(0,): 1, (2,): 1}


def test_decompose_a2_tensor():
    # 3 x 3bar = adjoint + trivial
    prod = kq.weyl_character(A2, (1, 0)) * kq.weyl_character(A2, (0, 1))
    ch = kq.decompose(A2, prod)
    assert dict(ch.sorted_items()) == {(0, 0): 1, (1, 1): 1}


def test_decompose_rejects_non_invariant():
    with pytest.raises(kq.NotInvariant):
        kq.decompose(A1, WP.monomial((1,)))


def test_decompose_random_reassembles():
    rng = random.Random(5)
    for _ in range(10):
        mults = {}
        for _ in range(rng.randint(1, 3)):
            lam = (rng.randint(0, 4), rng.randint(0, 4))
            mults[lam] = rng.randint(-2, 3) or 1
        total = WP.zero()
        for lam, m in mults.items():
            total = total + kq.weyl_character(A2, lam) * m
        if not total:
            continue
        back = kq.decompose(A2, total)
        assert dict(back.sorted_items()) == {k: v for k, v in mults.items() if v}


def test_character_container():
    ch = kq.Character(A1, {(2,): 1, (0,): 3})
    assert ch.mult((0,)) == 3
    assert ch.mult((6,)) == 0
    assert ch.weight_polynomial().dimension() == 6
    with pytest.raises(kq.NotDominant):
        kq.Character(A1, {(-1,): 1})


def test_formal_character_window():
    fc = kq.FormalCharacter(T1, 3, {(2,): 5})
    assert fc.mult((2,)) == 5
    assert fc.mult((3,)) == 0
    with pytest.raises(kq.WindowExhausted):
        fc.mult((4,))
    assert fc.restrict(1).coeffs == {}


def test_formal_character_agreement_uses_shared_window():
    a = kq.FormalCharacter(T1, 5, {(1,): 1, (5,): 9})
    b = kq.FormalCharacter(T1, 3, {(1,): 1})
    assert a.agrees_with(b)
    c = kq.FormalCharacter(T1, 3, {(1,): 2})
    assert not a.agrees_with(c)


def test_formal_character_roundtrip():
    fc = kq.FormalCharacter(A1, 4, {(0,): 2, (3,): -1})
    d = fc.to_dict()
    assert d["window"] == 4
    assert kq.FormalCharacter.from_dict(A1, d).coeffs == fc.coeffs


def test_formal_multiply_torus_matches_truncated_series():
    # (sum_{n>=0} t^n) * (1 + t) should double every positive coefficient
    fc = kq.FormalCharacter(T1, 6, {(n,): 1 for n in range(7)})
    fin = kq.decompose(T1, WP.one(1) + WP.monomial((1,)))
    out = kq.formal_multiply(fc, fin)
    assert out.window >= 5
    assert out.mult((0,)) == 1
    for n in range(1, out.window + 1):
        assert out.mult((n,)) == 2


def test_formal_multiply_type_a():
    fc = kq.FormalCharacter(A1, 6, {(1,): 1})
    fin = kq.decompose(A1, kq.weyl_character(A1, (1,)))
    out = kq.formal_multiply(fc, fin)
    assert out.mult((0,)) == 1
    assert out.mult((2,)) == 1
    assert out.mult((1,)) == 0


def test_formal_multiply_shrinks_window():
    fc = kq.FormalCharacter(T1, 2, {(0,): 1})
    fin = kq.decompose(T1, WP.monomial((2,)))
    out = kq.formal_multiply(fc, fin)
    assert out.window == 0
    assert out.mult((0,)) == 0
