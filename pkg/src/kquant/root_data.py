"""Root data for rank-r tori and the type A series.

Weights are plain tuples of ints.  For a torus the coordinates live in
the standard character lattice basis.  For type A_n they are coordinates
in the fundamental-weight basis, so the pairing of a weight with the
i-th simple coroot is just its i-th coordinate, dominance is a
componentwise sign test, and the simple roots are the rows of the
Cartan matrix.

Weyl group elements are never materialized as words or permutations;
orbits and orbit data are computed by breadth-first closure under the
simple reflections.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotDominant, UnsupportedKind

Weight = tuple


def as_weight(v) -> Weight:
    """Coerce a sequence of integer-like entries to a weight tuple."""
    return tuple(int(x) for x in v)


def sup_norm(w) -> int:
    """Max absolute coordinate; sup_norm(()) is 0."""
    return max((abs(x) for x in w), default=0)


def add(v, w):
    return tuple(a + b for a, b in zip(v, w))


def sub(v, w):
    return tuple(a - b for a, b in zip(v, w))


def neg(v):
    return tuple(-a for a in v)


def scale(k, v):
    return tuple(k * a for a in v)


def dot(v, w):
    return sum(a * b for a, b in zip(v, w))


@dataclass(frozen=True)
class RootDatum:
    """A torus or type A root datum at a fixed rank.

    simple_roots and positive_roots are tuples of weights (empty for a
    torus); rho is the half sum of positive roots, which in the
    fundamental-weight basis of type A is the all-ones tuple.
    """

    kind: str
    rank: int
    simple_roots: tuple
    positive_roots: tuple
    rho: Weight

    @property
    def is_torus(self) -> bool:
        return self.kind == "torus"

    def check_weight(self, w) -> Weight:
        w = as_weight(w)
        if len(w) != self.rank:
            raise ValueError(f"weight {w} has length {len(w)}, datum rank is {self.rank}")
        return w

    def to_dict(self) -> dict:
        return {"kind": self.kind, "rank": self.rank}

    @staticmethod
    def from_dict(d: dict) -> "RootDatum":
        return build_root_datum(d["kind"], d["rank"])

    def __repr__(self):
        return f"RootDatum({self.kind!r}, rank={self.rank})"


def build_root_datum(kind: str, rank: int) -> RootDatum:
    """Construct the torus or A-series datum of the given rank.

    kind is "torus" or "A" (case insensitive).  Any other series raises
    UnsupportedKind.  rank must be at least 1.
    """
    if rank < 1:
        raise ValueError(f"rank must be >= 1, got {rank}")
    k = str(kind).strip().lower()
    if k == "torus":
        return RootDatum("torus", rank, (), (), (0,) * rank)
    if k == "a":
        # Simple root i in fundamental coordinates is row i of the Cartan matrix.
        simple = []
        for i in range(rank):
            row = [0] * rank
            row[i] = 2
            if i > 0:
                row[i - 1] = -1
            if i + 1 < rank:
                row[i + 1] = -1
            simple.append(tuple(row))
        positive = []
        for i in range(rank):
            acc = (0,) * rank
            for j in range(i, rank):
                acc = add(acc, simple[j])
                positive.append(acc)
        return RootDatum("A", rank, tuple(simple), tuple(positive), (1,) * rank)
    raise UnsupportedKind(f"unsupported series {kind!r}; only torus and A are available")


def is_dominant(datum: RootDatum, w) -> bool:
    """Dominance test; every torus weight is dominant."""
    w = datum.check_weight(w)
    if datum.is_torus:
        return True
    return all(x >= 0 for x in w)


def is_regular_dominant(datum: RootDatum, w) -> bool:
    """Strict dominance: positive pairing with every simple coroot."""
    w = datum.check_weight(w)
    if datum.is_torus:
        return True
    return all(x >= 1 for x in w)


def simple_reflection(datum: RootDatum, i: int, w) -> Weight:
    """Apply the i-th simple reflection; identity map for a torus."""
    if datum.is_torus:
        return datum.check_weight(w)
    alpha = datum.simple_roots[i]
    # <w, alpha_i^vee> is the i-th fundamental coordinate.
    return sub(w, scale(w[i], alpha))


def weyl_orbit(datum: RootDatum, w) -> set:
    """Weyl orbit of a weight, computed by reflection closure."""
    w = datum.check_weight(w)
    if datum.is_torus:
        return {w}
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(datum.rank):
                u = simple_reflection(datum, i, v)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return seen


def signed_orbit_with_images(datum: RootDatum, anchor, extras=()):
    """Orbit of a regular anchor with determinant signs and companion images.

    Returns a list of (anchor_image, sign, extra_images) triples, one per
    Weyl group element, where extra_images tracks how each weight in
    `extras` transforms alongside the anchor.  The anchor must have a
    free orbit (be regular), otherwise signs would be ill defined; this
    is asserted.
    """
    anchor = datum.check_weight(anchor)
    extras = tuple(datum.check_weight(e) for e in extras)
    if datum.is_torus:
        return [(anchor, 1, extras)]
    state = (anchor, 1, extras)
    seen = {anchor: state}
    frontier = [state]
    while frontier:
        nxt = []
        for a, s, ex in frontier:
            for i in range(datum.rank):
                a2 = simple_reflection(datum, i, a)
                if a2 in seen:
                    assert seen[a2][1] == -s, "anchor is not regular"
                    continue
                st = (a2, -s, tuple(simple_reflection(datum, i, e) for e in ex))
                seen[a2] = st
                nxt.append(st)
        frontier = nxt
    return list(seen.values())


def weyl_order(datum: RootDatum) -> int:
    """Order of the Weyl group: 1 for a torus, (n+1)! for A_n."""
    if datum.is_torus:
        return 1
    out = 1
    for k in range(2, datum.rank + 2):
        out *= k
    return out


def inner_product(datum: RootDatum, v, w) -> Fraction:
    """Invariant inner product on the weight space, exact.

    Torus: the fundamental basis is orthonormal.  Type A: the standard
    A-series form, whose Gram matrix in the fundamental-weight basis is
    the inverse Cartan matrix (A^-1)_{ij} = min(i,j) * (n+1-max(i,j)) / (n+1)
    with 1-based indices.
    """
    v = datum.check_weight(v)
    w = datum.check_weight(w)
    if datum.is_torus:
        return Fraction(dot(v, w))
    n = datum.rank
    total = Fraction(0)
    for i in range(n):
        for j in range(n):
            g = Fraction(min(i + 1, j + 1) * (n + 1 - max(i + 1, j + 1)), n + 1)
            total += g * v[i] * w[j]
    return total


def weyl_dimension(datum: RootDatum, lam) -> int:
    """Dimension of the irreducible with highest weight lam.

    Product over positive roots of <lam+rho, alpha> / <rho, alpha>; a
    torus character is one dimensional.  Raises NotDominant off the cone.
    """
    lam = datum.check_weight(lam)
    if not is_dominant(datum, lam):
        raise NotDominant(f"{lam} is not dominant")
    if datum.is_torus:
        return 1
    num = Fraction(1)
    lam_rho = add(lam, datum.rho)
    for alpha in datum.positive_roots:
        num *= inner_product(datum, lam_rho, alpha) / inner_product(datum, datum.rho, alpha)
    assert num.denominator == 1
    return int(num)


def dominant_window(datum: RootDatum, bound: int):
    """Iterate the dominant weights of sup-norm <= bound, lex order.

    For a torus this is the full box [-bound, bound]^r; for type A the
    box [0, bound]^n of dominant fundamental coordinates.
    """
    if bound < 0:
        return
    lo = -bound if datum.is_torus else 0
    for w in itertools.product(range(lo, bound + 1), repeat=datum.rank):
        yield w
