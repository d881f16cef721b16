"""Proper linear torus models: quantization, reduction, and vanishing sets.

A model is a torus representation C^d given by d nonzero action weights
plus a constant shift c of the quadratic moment map
mu(z) = 1/2 sum |z_j|^2 w_j + c.  Properness of mu is equivalent to all
weights lying in an open half space, decided exactly through the
minimum-norm point of their convex hull (a Farkas-style certificate:
either a separating vector xi with <w_j, xi> > 0 for all j, or an
explicit nonnegative combination of weights equal to zero).

Two independent routes compute the same invariant:

* formal_quantization expands t^c prod (1 - t^{w_j})^{-1} as a polarized
  geometric series on a window (through the localization engine);
* reduction_multiplicity counts lattice points
  #{a in Z_{>=0}^d : sum a_j w_j + c = gamma} by bounded enumeration,
  with bounds derived from the separating vector.

verify_qr compares them weight by weight.  vanishing_decomposition
solves V^mu = 0 exactly: on the stratum where exactly the coordinates
in S are nonzero the condition is <w_j, mu(z)> = 0 for j in S, a linear
system in the action variables a_j = |z_j|^2 / 2 whose solution set is a
rational polytope; connected components of the full zero set are
obtained by gluing strata whose closures touch.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .characters import FormalCharacter, WeightPolynomial
from .errors import NotOnVanishingSet, NotProper, WindowExhausted
from .localization import (ClosedComponent, DiscreteKCycle, FixedPointDatum,
                           polarized_index)
from .root_data import (RootDatum, build_root_datum, dominant_window, dot,
                        neg, scale, sub)


@dataclass(frozen=True)
class LinearModel:
    """Torus rank, nonzero action weights, and moment map shift."""

    datum: RootDatum
    weights: tuple
    shift: tuple

    def __post_init__(self):
        if not self.datum.is_torus:
            raise ValueError("linear models are defined over torus data")
        ws = tuple(self.datum.check_weight(w) for w in self.weights)
        for w in ws:
            if not any(w):
                raise ValueError("action weights must be nonzero")
        object.__setattr__(self, "weights", ws)
        object.__setattr__(self, "shift", self.datum.check_weight(self.shift))

    @property
    def rank(self):
        return self.datum.rank

    def to_dict(self):
        return {"rank": self.rank,
                "weights": [list(w) for w in self.weights],
                "shift": list(self.shift)}

    @staticmethod
    def from_dict(d: dict) -> "LinearModel":
        datum = build_root_datum("torus", int(d["rank"]))
        return LinearModel(datum, tuple(tuple(w) for w in d["weights"]),
                           tuple(d["shift"]))


def linear_model(weights, shift) -> LinearModel:
    """Build a model, inferring the rank from the shift vector."""
    return LinearModel(build_root_datum("torus", len(tuple(shift))),
                       tuple(tuple(w) for w in weights), tuple(shift))


# ---------------------------------------------------------------- exact LA

def _solve_unique(mat, rhs):
    """Solve a square Fraction system; None when singular."""
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = a[col][col]
        a[col] = [x / inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def _rref(rows, width):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    mat = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for col in range(width):
        piv = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = mat[r][col]
        mat[r] = [x / inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def _primitive_directed(vec):
    """Clear denominators and common factors, keeping the direction."""
    import math

    fr = [Fraction(x) for x in vec]
    lcm = 1
    for f in fr:
        lcm = lcm * f.denominator // math.gcd(lcm, f.denominator)
    ints = [int(f * lcm) for f in fr]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g:
        ints = [v // g for v in ints]
    return tuple(ints)


def _primitive(vec):
    """Clear denominators and common factors; first nonzero entry > 0."""
    ints = _primitive_directed(vec)
    lead = next((v for v in ints if v), 0)
    if lead < 0:
        ints = tuple(-v for v in ints)
    return ints


def _nullspace_int(rows, width):
    """Primitive integer basis of {x : row . x = 0 for all rows}."""
    rref, pivots = _rref(rows, width)
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for fcol in free:
        vec = [Fraction(0)] * width
        vec[fcol] = Fraction(1)
        for rrow, pcol in zip(rref, pivots):
            vec[pcol] = -rrow[fcol]
        basis.append(_primitive(vec))
    return basis


def _min_norm_in_hull(points, rank):
    """Minimum-norm point of conv(points) with its convex certificate.

    Returns (x, subset, lam): x has <p, x> >= <x, x> for every input
    point, and x = sum lam_i * points[subset_i] with lam >= 0 summing
    to one.  Enumerates affinely independent subsets of size <= rank+1,
    which always contain the optimal face (Caratheodory).
    """
    pts = sorted(set(tuple(Fraction(x) for x in p) for p in points))
    best = None
    for size in range(1, min(len(pts), rank + 1) + 1):
        for subset in itertools.combinations(range(len(pts)), size):
            s0 = pts[subset[0]]
            if size == 1:
                x, lam = s0, [Fraction(1)]
            else:
                vs = [sub(pts[i], s0) for i in subset[1:]]
                gram = [[dot(u, v) for v in vs] for u in vs]
                rhs = [-dot(s0, v) for v in vs]
                y = _solve_unique(gram, rhs)
                if y is None:
                    continue
                lam = [Fraction(1) - sum(y)] + y
                if any(l < 0 for l in lam):
                    continue
                x = tuple(s + sum(yi * v[k] for yi, v in zip(y, vs))
                          for k, s in enumerate(s0))
            norm = dot(x, x)
            if best is None or norm < best[0]:
                best = (norm, x, [pts[i] for i in subset], lam)
    _, x, used, lam = best
    return x, used, lam


@functools.lru_cache(maxsize=None)
def _separating_cached(weights, rank):
    """(primitive integer xi, None) if separable, else (None, witness)."""
    if not weights:
        return (1,) * rank, None
    x, used, lam = _min_norm_in_hull(weights, rank)
    if not any(x):
        return None, tuple(zip(used, lam))
    xi = _primitive_directed(x)
    assert all(dot(w, xi) > 0 for w in weights), "separation certificate failed"
    return xi, None


def check_proper(m: LinearModel) -> bool:
    """True iff all action weights lie in an open half space."""
    return _separating_cached(m.weights, m.rank)[0] is not None


def farkas_vector(m: LinearModel) -> tuple:
    """Primitive integer xi with <w_j, xi> >= 1 for every action weight.

    Raises NotProper with an explicit nonnegative combination of the
    weights equal to zero when no such vector exists.
    """
    xi, witness = _separating_cached(m.weights, m.rank)
    if xi is None:
        combo = " + ".join(
            f"{l}*({','.join(str(x) for x in w)})" for w, l in witness if l)
        raise NotProper(f"0 = {combo}; weights span no open half space")
    return xi


def model_cycle(m: LinearModel) -> DiscreteKCycle:
    """The one-point K-cycle shadow of the model.

    The origin carries fiber t^shift and, in the contribution
    convention of the localization engine, tangent weights equal to the
    negated action weights, so its polarized expansion at the Farkas
    vector is exactly t^c prod (1 - t^{w_j})^{-1}.
    """
    pt = FixedPointDatum(tuple(neg(w) for w in m.weights),
                         WeightPolynomial.monomial(m.shift))
    return DiscreteKCycle(m.datum, ((1, ClosedComponent("C^d", (pt,))),))


def formal_quantization(m: LinearModel, window: int) -> FormalCharacter:
    """Window-exact polarized expansion of t^c prod (1 - t^{w_j})^{-1}."""
    if window < 0:
        raise WindowExhausted(f"window {window} is empty")
    xi = farkas_vector(m)
    out = polarized_index(model_cycle(m), xi, max(window, 1))
    return out if window >= 1 else out.restrict(window)


@functools.lru_cache(maxsize=None)
def _wall_normals(weights, rank):
    """Integer normal systems of the walls spanned by < rank weights."""
    distinct = sorted(set(weights))
    walls = {}
    for size in range(0, rank):
        for subset in itertools.combinations(distinct, size):
            normals = tuple(sorted(_nullspace_int(subset, rank)))
            walls[normals] = True
    return list(walls)


def _int_det(mat):
    """Determinant of a small integer matrix by cofactor expansion."""
    n = len(mat)
    if n == 0:
        return 1
    if n == 1:
        return mat[0][0]
    if n == 2:
        return mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]
    total = 0
    for j in range(n):
        if mat[0][j]:
            minor = [row[:j] + row[j + 1:] for row in mat[1:]]
            total += (-1) ** j * mat[0][j] * _int_det(minor)
    return total


def _cramer_kit(cols, rank):
    """Row choice making the column system square and invertible.

    Returns (rowset, matrix, det) for a full-column-rank integer system,
    or None when the columns are dependent or too many.
    """
    k = len(cols)
    if k > rank:
        return None
    for rowset in itertools.combinations(range(rank), k):
        mat = [[cols[i][t] for i in range(k)] for t in rowset]
        d = _int_det(mat)
        if d:
            return rowset, mat, d
    return None


def _solve_suffix(cols, kit, target):
    """1 if the unique rational solution is a nonnegative integer vector."""
    rowset, mat, det = kit
    k = len(cols)
    a = []
    for i in range(k):
        m2 = [row[:i] + [target[t]] + row[i + 1:]
              for row, t in zip(mat, rowset)]
        q, rem = divmod(_int_det(m2), det)
        if rem or q < 0:
            return 0
        a.append(q)
    for t in range(len(target)):
        if sum(a[i] * cols[i][t] for i in range(k)) != target[t]:
            return 0
    return 1


def _count_solutions(weights, pairings, target, budget):
    """Number of a in Z_{>=0}^d with sum a_j weights_j = target.

    Leading coefficients are enumerated with Farkas pairing bounds; the
    longest linearly independent suffix has at most one solution, found
    exactly by Cramer's rule, so only dependent directions are looped.
    """
    d = len(weights)
    rank = len(target)
    free = d
    kit = _cramer_kit((), rank)
    while free > 0:
        nxt = _cramer_kit(weights[free - 1:], rank)
        if nxt is None:
            break
        free -= 1
        kit = nxt
    suffix = weights[free:]

    def rec(j, t, b):
        if j == free:
            return _solve_suffix(suffix, kit, t)
        w, pw = weights[j], pairings[j]
        total = 0
        for _ in range(b // pw + 1):
            total += rec(j + 1, t, b)
            t = sub(t, w)
            b -= pw
        return total

    return rec(0, target, budget)


class ReductionCount(tuple):
    """(count, regular) with named access."""

    def __new__(cls, count, regular):
        return super().__new__(cls, (count, regular))

    @property
    def count(self):
        return self[0]

    @property
    def regular(self):
        return self[1]


def reduction_multiplicity(m: LinearModel, gamma) -> ReductionCount:
    """Lattice count of mu^{-1}(gamma) data, with a regularity flag.

    Counts #{a in Z_{>=0}^d : sum a_j w_j + c = gamma} by depth-first
    enumeration bounded through the Farkas vector: a_j <= <gamma-c, xi>
    / <w_j, xi>.  gamma is regular iff gamma - c avoids every wall
    spanned by fewer than rank weights.
    """
    gamma = m.datum.check_weight(gamma)
    xi = farkas_vector(m)
    target = sub(gamma, m.shift)
    budget = dot(target, xi)
    if budget < 0:
        count = 0
    else:
        order = sorted(range(len(m.weights)),
                       key=lambda j: -dot(m.weights[j], xi))
        ws = [m.weights[j] for j in order]
        ps = [dot(w, xi) for w in ws]
        count = _count_solutions(ws, ps, target, budget)
    regular = True
    for normals in _wall_normals(m.weights, m.rank):
        if all(dot(target, nrm) == 0 for nrm in normals):
            regular = False
            break
    return ReductionCount(count, regular)


# ------------------------------------------------------------- vanishing

@dataclass(frozen=True)
class VanishingComponent:
    """One connected component of the moment-flow zero set.

    support lists the coordinates allowed to be nonzero (the union over
    the glued strata, each recorded in strata); the stabilizer
    subalgebra is cut out by the support's weights; mu is constant on
    the component, with value mu_value and exact diameter mu_diameter.
    """

    support: tuple
    strata: tuple
    stabilizer_basis: tuple
    mu_value: tuple
    compact: bool
    mu_diameter: Fraction

    def to_dict(self):
        return {"support": list(self.support),
                "strata": [list(s) for s in self.strata],
                "stabilizer_basis": [[str(x) for x in b] for b in self.stabilizer_basis],
                "mu_value": [str(x) for x in self.mu_value],
                "compact": self.compact,
                "mu_diameter": str(self.mu_diameter)}


def _stratum_vertices(m: LinearModel, support):
    """Vertices of {a >= 0 on support : <w_i, mu> = 0 for i in support}."""
    ws = [m.weights[j] for j in support]
    k = len(ws)
    gram = [[dot(u, v) for v in ws] for u in ws]
    rhs = [-dot(u, m.shift) for u in ws]
    verts = set()
    for size in range(0, k + 1):
        for cols in itertools.combinations(range(k), size):
            if size == 0:
                if all(x == 0 for x in rhs):
                    verts.add((Fraction(0),) * k)
                continue
            sq = [[gram[i][c] for c in cols] for i in cols]
            sol = _solve_unique(sq, [rhs[i] for i in cols])
            if sol is None or any(x < 0 for x in sol):
                continue
            full = [Fraction(0)] * k
            for c, x in zip(cols, sol):
                full[c] = x
            # candidate must satisfy every equation, not just the chosen ones
            if all(sum(gram[i][j] * full[j] for j in range(k)) == rhs[i]
                   for i in range(k)):
                verts.add(tuple(full))
    return sorted(verts)


def vanishing_decomposition(m: LinearModel):
    """Connected components of V^mu = 0, exactly, for a proper model.

    Enumerates the 2^d coordinate supports, solves each stratum's
    rational system, and glues strata whose closures touch.  Mu is
    pinned to one value per component; all components of a proper model
    are compact, which is certified by the Farkas vector.
    """
    farkas_vector(m)  # NotProper for improper models
    d = len(m.weights)
    strata = {}
    for size in range(0, d + 1):
        for support in itertools.combinations(range(d), size):
            verts = _stratum_vertices(m, support)
            if not verts:
                continue
            if not all(any(v[i] > 0 for v in verts) for i in range(size)):
                continue  # no point with support exactly this set
            mu = list(Fraction(x) for x in m.shift)
            v0 = verts[0]
            for pos, j in enumerate(support):
                for t in range(m.rank):
                    mu[t] += v0[pos] * m.weights[j][t]
            strata[support] = (verts, tuple(mu))

    parent = {s: s for s in strata}

    def find(s):
        while parent[s] != s:
            parent[s] = parent[parent[s]]
            s = parent[s]
        return s

    keys = sorted(strata, key=len)
    for small, big in itertools.combinations(keys, 2):
        if not set(small) < set(big):
            continue
        verts, _ = strata[big]
        idx = {j: pos for pos, j in enumerate(big)}
        face = [v for v in verts
                if all(v[pos] == 0 for pos, j in enumerate(big) if j not in small)]
        if face and all(any(v[idx[j]] > 0 for v in face) for j in small):
            ra, rb = find(small), find(big)
            if ra != rb:
                parent[rb] = ra

    groups = {}
    for s in strata:
        groups.setdefault(find(s), []).append(s)
    out = []
    for members in groups.values():
        members = sorted(members, key=lambda s: (len(s), s))
        union = tuple(sorted(set().union(*[set(s) for s in members]) or set()))
        mus = {strata[s][1] for s in members}
        assert len(mus) == 1, "glued strata disagree on the mu value"
        rows = [m.weights[j] for j in union]
        basis = tuple(_nullspace_int(rows, m.rank))
        out.append(VanishingComponent(
            support=union, strata=tuple(members), stabilizer_basis=basis,
            mu_value=mus.pop(), compact=True, mu_diameter=Fraction(0)))
    out.sort(key=lambda comp: (len(comp.support), comp.support))
    return out


def check_compatibility(m: LinearModel, phi_offset, bound) -> bool:
    """Check |<mu - phi, xi>| <= bound * ||xi|| on every component.

    phi_offset maps a component's support tuple to the constant
    deviation vector mu - phi there; a missing component raises
    NotOnVanishingSet.  The comparison is done squared, so it is exact
    for rational bounds even when ||xi|| is irrational.
    """
    bound = Fraction(bound)
    offsets = {tuple(sorted(k)): tuple(Fraction(x) for x in v)
               for k, v in dict(phi_offset).items()}
    for comp in vanishing_decomposition(m):
        if comp.support not in offsets:
            raise NotOnVanishingSet(f"no deviation given on component {comp.support}")
        v = offsets[comp.support]
        for xi in comp.stabilizer_basis:
            if dot(v, xi) ** 2 > bound ** 2 * dot(xi, xi):
                return False
    return True


# ------------------------------------------------------------ verify_qr

@dataclass(frozen=True)
class QRRow:
    gamma: tuple
    q_top: int
    q_red: int
    regular: bool
    match: bool

    def to_dict(self):
        return {"gamma": list(self.gamma), "q_top": self.q_top,
                "q_red": self.q_red, "regular": self.regular,
                "match": self.match}


@dataclass
class QRReport:
    """Per-weight comparison of the two quantization routes."""

    model: LinearModel
    window: int
    rows: list
    verdict: bool

    def to_dict(self):
        return {"model": self.model.to_dict(), "window": self.window,
                "verdict": self.verdict,
                "rows": [r.to_dict() for r in self.rows]}

    def table(self) -> str:
        lines = ["gamma\tq_top\tq_red\tregular\tmatch"]
        for r in self.rows:
            lines.append(f"{list(r.gamma)}\t{r.q_top}\t{r.q_red}"
                         f"\t{str(r.regular).lower()}\t{str(r.match).lower()}")
        lines.append(f"verdict\t{str(self.verdict).lower()}")
        return "\n".join(lines)


def verify_qr(m: LinearModel, window: int) -> QRReport:
    """Compare series multiplicities against lattice counts on a window."""
    fq = formal_quantization(m, window)
    rows = []
    verdict = True
    for gamma in dominant_window(m.datum, window):
        q_top = fq.coeffs.get(gamma, 0)
        q_red, regular = reduction_multiplicity(m, gamma)
        ok = q_top == q_red
        verdict = verdict and ok
        rows.append(QRRow(gamma, q_top, q_red, regular, ok))
    return QRReport(m, window, rows, verdict)
