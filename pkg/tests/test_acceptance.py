"""Acceptance gate: nine exact criteria, each one test and one report line.

Everything is integer arithmetic; tolerance is zero throughout.  Each
criterion enforces its own wall-clock budget.
"""

import random
import time
from contextlib import contextmanager

import kquant as kq
from helpers import (A1, A2, T1, T2, axis_sphere, lazy_disk_family,
                     random_closed_cycle_t1, random_closed_cycle_t2,
                     random_formal_character, random_proper_model)

WP = kq.WeightPolynomial


@contextmanager
def budget(seconds):
    t0 = time.monotonic()
    yield
    elapsed = time.monotonic() - t0
    assert elapsed < seconds, f"exceeded {seconds}s budget: {elapsed:.2f}s"


def test_c1_twisted_sphere_family_has_zero_index():
    with budget(1.0):
        for n in range(-10, 11):
            comp = kq.ClosedComponent(
                "tw", (kq.point((n,), (1,)), kq.point((n + 1,), (-1,))))
            assert kq.closed_index(comp, T1) == WP.zero()


def test_c2_disk_decomposition_truncated_series():
    with budget(1.0):
        out, cert = kq.certify_disk_decomposition(1, 20, 20)
        assert cert.verdict
        assert kq.closed_sum(out) == WP(((n,), 1) for n in range(21))
        out, cert = kq.certify_disk_decomposition(-1, 20, 22)
        assert cert.verdict
        assert kq.closed_sum(out) == WP(((-n,), -1) for n in range(1, 22))


def test_c3_orbit_map_round_trip():
    rng = random.Random(103)
    with budget(10.0):
        done = 0
        for datum in (T1, T2, A1):
            for _ in range(17):
                fc = random_formal_character(rng, datum, 8, regular_only=True)
                got = kq.polarized_index(kq.p_map(fc), None, 8)
                assert got.agrees_with(fc), (datum.kind, fc.coeffs)
                done += 1
        assert done >= 50


def test_c4_borel_weil_exhaustive():
    with budget(10.0):
        checked = 0
        for datum in (T1, T2, A1, A2):
            for gamma in kq.dominant_window(datum, 6):
                if not datum.is_torus and not kq.is_regular_dominant(datum, gamma):
                    continue
                oc = kq.orbit_cycle(datum, gamma)
                assert kq.closed_index(oc.component, datum) == \
                    kq.weyl_character(datum, gamma), gamma
                checked += 1
        assert checked > 200


def test_c5_quantization_equals_reduction():
    rng = random.Random(105)
    with budget(60.0):
        mismatches = 0
        for _ in range(100):
            m = random_proper_model(rng, max_d=5, max_r=3, entry=3)
            report = kq.verify_qr(m, 6)
            if not report.verdict:
                mismatches += 1
        assert mismatches == 0


def test_c6_product_multiplicativity():
    rng = random.Random(106)
    with budget(10.0):
        for _ in range(30):
            a = lazy_disk_family(shift=rng.randint(-2, 2))
            parts = tuple(
                (rng.choice((1, 1, -1)), kq.f_sphere(rng.randint(-3, 3)))
                for _ in range(rng.randint(1, 2)))
            b = kq.DiscreteKCycle(T1, parts)
            _, cert = kq.certify_product(a, b, 8)
            assert cert.verdict


def test_c7_polarization_independence():
    rng = random.Random(107)
    with budget(10.0):
        corpus = [random_closed_cycle_t1(rng) for _ in range(12)]
        corpus += [random_closed_cycle_t2(rng) for _ in range(8)]
        for k in corpus:
            w = 8
            exact = kq.FormalCharacter.from_weight_polynomial(
                k.datum, kq.closed_sum(k), w)
            if k.datum.rank == 1:
                xis = ((1,), (-1,), (3,))
            else:
                xis = ((1, 5), (-2, 7), (3, -1))
            for xi in xis:
                assert kq.polarized_index(k, xi, w).agrees_with(exact)


def test_c8_vanishing_decomposition():
    rng = random.Random(108)
    with budget(10.0):
        comps = kq.vanishing_decomposition(
            kq.linear_model([(1, 0), (0, 1)], (-1, -1)))
        assert [c.support for c in comps] == [(), (0,), (1,), (0, 1)]
        assert all(c.compact for c in comps)
        for _ in range(25):
            m = random_proper_model(rng, max_d=4, max_r=3)
            for c in kq.vanishing_decomposition(m):
                assert c.compact
                assert c.mu_diameter == 0


def test_c9_move_certificates():
    rng = random.Random(109)
    with budget(10.0):
        for _ in range(10):
            a = random_closed_cycle_t1(rng)
            b = random_closed_cycle_t1(rng)
            _, cert = kq.certify_disjoint_union(a, b, 10)
            assert cert.verdict
        for sign in (1, -1):
            _, cert = kq.certify_disk_decomposition(sign, rng.randint(5, 15), 10)
            assert cert.verdict
        for _ in range(10):
            comp = kq.ClosedComponent("s", (
                kq.point((rng.randint(-3, 3),), (1,)),
                kq.point((rng.randint(-3, 3),), (-1,))))
            _, cert = kq.certify_glue_split(comp, [[0], [1]], T1, 10)
            assert cert.verdict
        for _ in range(10):
            k = random_closed_cycle_t1(rng)
            _, cert = kq.bundle_modification(k, kq.o_sphere(0), window=10)
            assert cert.verdict
        rejected = False
        try:
            kq.bundle_modification(random_closed_cycle_t1(rng), kq.o_sphere(2))
        except kq.FiberIndexNotUnit:
            rejected = True
        assert rejected
