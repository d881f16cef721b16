import pytest
from fractions import Fraction

import kquant as kq
from helpers import A1, A2, T1, T2


def test_torus_datum():
    assert T2.rank == 2
    assert T2.is_torus
    assert T2.simple_roots == ()
    assert T2.positive_roots == ()
    assert T2.rho == (0, 0)


def test_type_a_datum():
    assert not A2.is_torus
    # rows of the Cartan matrix in fundamental weight coordinates
    assert A2.simple_roots == ((2, -1), (-1, 2))
    assert set(A2.positive_roots) == {(2, -1), (-1, 2), (1, 1)}
    assert A2.rho == (1, 1)


def test_build_rejects_bad_input():
    with pytest.raises(kq.UnsupportedKind):
        kq.build_root_datum("B", 2)
    with pytest.raises(ValueError):
        kq.build_root_datum("A", 0)


def test_kind_case_insensitive():
    assert kq.build_root_datum("Torus", 3) == kq.build_root_datum("torus", 3)
    assert kq.build_root_datum("a", 1) == A1


def test_datum_roundtrip():
    for datum in (T1, T2, A1, A2):
        assert kq.RootDatum.from_dict(datum.to_dict()) == datum


def test_dominance():
    assert kq.is_dominant(A2, (0, 3))
    assert not kq.is_dominant(A2, (-1, 3))
    assert kq.is_regular_dominant(A2, (1, 1))
    assert not kq.is_regular_dominant(A2, (0, 1))
    # every torus weight is dominant
    assert kq.is_dominant(T2, (-5, 2))


def test_weyl_orbit_sizes():
    assert kq.weyl_order(A1) == 2
    assert kq.weyl_order(A2) == 6
    assert kq.weyl_order(T2) == 1
    assert kq.weyl_orbit(A2, (1, 1)) == {
        (1, 1), (-1, 2), (2, -1), (1, -2), (-2, 1), (-1, -1)}
    # singular weight has a smaller orbit
    assert len(kq.weyl_orbit(A2, (1, 0))) == 3


def test_weyl_dimension():
    assert kq.weyl_dimension(A1, (3,)) == 4
    assert kq.weyl_dimension(A2, (1, 0)) == 3
    assert kq.weyl_dimension(A2, (1, 1)) == 8
    assert kq.weyl_dimension(A2, (2, 2)) == 27
    with pytest.raises(kq.NotDominant):
        kq.weyl_dimension(A2, (-1, 0))


def test_inner_product_symmetry_and_positivity():
    vals = [(1, 0), (0, 1), (2, -1), (-1, 2), (1, 1)]
    for v in vals:
        for w in vals:
            assert kq.inner_product(A2, v, w) == kq.inner_product(A2, w, v)
    for v in vals:
        assert kq.inner_product(A2, v, v) > 0


def test_inner_product_cartan_pairing():
    # <alpha_i, omega_j> proportional to delta_ij with equal root lengths
    a1, a2 = A2.simple_roots
    assert kq.inner_product(A2, a1, (0, 1)) == 0
    assert kq.inner_product(A2, a2, (1, 0)) == 0
    assert kq.inner_product(A2, a1, (1, 0)) == kq.inner_product(A2, a2, (0, 1))


def test_dominant_window_contents():
    box = list(kq.dominant_window(T1, 2))
    assert box == [(-2,), (-1,), (0,), (1,), (2,)]
    a_win = list(kq.dominant_window(A2, 1))
    assert a_win == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert len(set(a_win)) == len(a_win)


def test_orbit_closed_under_reflections():
    orbit = kq.weyl_orbit(A2, (2, 1))
    for w in orbit:
        for i in range(A2.rank):
            assert kq.root_data.simple_reflection(A2, i, w) in orbit
