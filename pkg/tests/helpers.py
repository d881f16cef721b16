"""Shared corpus builders for the test suite.

Random data is always drawn from a seeded Random instance passed in by
the caller, so every test run sees the same corpus.
"""

import random

import kquant as kq

T1 = kq.build_root_datum("torus", 1)
T2 = kq.build_root_datum("torus", 2)
A1 = kq.build_root_datum("A", 1)
A2 = kq.build_root_datum("A", 2)

AXES2 = ((1, 0), (0, 1))


def axis_sphere(axis, kind, n):
    """A rank-one sphere embedded along one coordinate axis of T2."""
    e = AXES2[axis]
    ne = tuple(-x for x in e)
    emb = lambda k: tuple(k * x for x in e)
    if kind == "f":
        pts = (kq.point(emb(n), e), kq.point(emb(n), ne))
    else:
        pts = (kq.point(emb(0), ne), kq.point(emb(n), e))
    return kq.ClosedComponent(f"{kind}{n}@{axis}", pts)


def random_sphere(rng, lo=-4, hi=4):
    if rng.random() < 0.5:
        return kq.f_sphere(rng.randint(lo, hi))
    return kq.o_sphere(rng.randint(0, hi))


def random_closed_cycle_t1(rng, ncomp=(1, 3)):
    comps = tuple((rng.choice((1, 1, -1)), random_sphere(rng))
                  for _ in range(rng.randint(*ncomp)))
    return kq.DiscreteKCycle(T1, comps)


def random_closed_cycle_t2(rng, ncomp=(1, 2)):
    """Products of two axis spheres; closed by construction."""
    comps = []
    for _ in range(rng.randint(*ncomp)):
        c1 = axis_sphere(0, rng.choice("fo"), rng.randint(-3, 3))
        c2 = axis_sphere(1, rng.choice("fo"), rng.randint(-3, 3))
        a = kq.DiscreteKCycle(T2, ((1, c1),))
        b = kq.DiscreteKCycle(T2, ((1, c2),))
        prod = kq.product_cycle(a, b)
        comps.append((rng.choice((1, -1)), prod.components[0][1]))
    return kq.DiscreteKCycle(T2, tuple(comps))


def lazy_disk_family(shift=0, bound=200):
    """The disk as the infinite sum of weight-n sphere models."""
    fam = lambda i: (1, kq.f_sphere(i + shift))
    return kq.DiscreteKCycle(T1, (), fam, enumeration_bound=bound)


def random_formal_character(rng, datum, window, regular_only=False):
    coeffs = {}
    for _ in range(rng.randint(1, 4)):
        while True:
            w = tuple(rng.randint(-window, window) for _ in range(datum.rank))
            if not datum.is_torus:
                w = tuple(abs(x) for x in w)
                if regular_only and not kq.is_regular_dominant(datum, w):
                    continue
            if max(abs(x) for x in w) <= window:
                break
        coeffs[w] = rng.choice([-2, -1, 1, 2, 3])
    return kq.FormalCharacter(datum, window, coeffs)


def random_proper_model(rng, max_d=5, max_r=3, entry=3):
    r = rng.randint(1, max_r)
    d = rng.randint(1, max_d)
    while True:
        ws = []
        while len(ws) < d:
            w = tuple(rng.randint(-entry, entry) for _ in range(r))
            if any(w):
                ws.append(w)
        shift = tuple(rng.randint(-entry, entry) for _ in range(r))
        m = kq.linear_model(ws, shift)
        if kq.check_proper(m):
            return m
