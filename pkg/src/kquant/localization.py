"""Equivariant indices of discrete K-cycles by fixed point localization.

A discrete K-cycle is a signed list of closed components, each carrying
only the localized data of a closed stable-complex torus orbifold with
isolated fixed points: per point a list of nonzero tangent weights, a
fiber character, and a cyclic orbifold order.  Orientation of the
stable complex structure is absorbed into the signs of the tangent
weights supplied by the data; a component sign of -1 denotes the
reversed structure and negates the contribution.

closed_index sums chi_p * prod_j (1 - t^{-w_pj})^{-1} over fixed points
as one rational function and certifies that the numerator is exactly
divisible by the denominator, so the result is a genuine Laurent
polynomial.  polarized_index expands each factor as a geometric series
supported in the xi-positive half space and reports exact multiplicities
on a finite window, which also works for infinite component families
with an enumeration bound.

Orbifold orders m > 1 are handled by exact cyclic averaging along the
diagonal circle: only terms whose coordinate sum is divisible by m
survive, which is the lattice-level shadow of averaging the character
over the m-th roots of unity and keeps every coefficient an integer.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .characters import FormalCharacter, WeightPolynomial, decompose, exact_divide
from .errors import (DatumMismatch, DegeneratePolarization,
                     EnumerationUnbounded, NonIsolatedFixedPoint, NotClosed,
                     OrbifoldAveragingUnsupported, WindowExhausted)
from .root_data import (RootDatum, add, as_weight, dominant_window, dot, neg,
                        scale, signed_orbit_with_images, sub, sup_norm)


@dataclass(frozen=True)
class FixedPointDatum:
    """Localized data at one isolated fixed point.

    tangent_weights: nonzero weights of the tangent representation.
    fiber_character: restriction of the cycle's bundle, a nonzero
    WeightPolynomial (virtual fibers are allowed).
    orbifold_order: order of the local cyclic isotropy, >= 1.
    """

    tangent_weights: tuple
    fiber_character: WeightPolynomial
    orbifold_order: int = 1

    def __post_init__(self):
        object.__setattr__(self, "tangent_weights",
                           tuple(as_weight(w) for w in self.tangent_weights))
        for w in self.tangent_weights:
            if not any(w):
                raise NonIsolatedFixedPoint(f"zero tangent weight in {self.tangent_weights}")
        if not isinstance(self.fiber_character, WeightPolynomial):
            object.__setattr__(self, "fiber_character",
                               WeightPolynomial(self.fiber_character))
        if not self.fiber_character:
            raise ValueError("fiber character must be nonzero")
        if self.orbifold_order < 1:
            raise ValueError(f"orbifold order must be >= 1, got {self.orbifold_order}")

    def to_dict(self):
        return {"tangent": [list(w) for w in self.tangent_weights],
                "fiber": self.fiber_character.to_list(),
                "order": self.orbifold_order}

    @staticmethod
    def from_dict(d):
        return FixedPointDatum(tuple(tuple(w) for w in d["tangent"]),
                               WeightPolynomial.from_list(d["fiber"]),
                               int(d.get("order", 1)))


def point(fiber, *tangent_weights, order=1) -> FixedPointDatum:
    """Shorthand constructor; fiber may be a weight tuple or a polynomial."""
    if not isinstance(fiber, WeightPolynomial):
        fiber = WeightPolynomial.monomial(fiber)
    return FixedPointDatum(tuple(tangent_weights), fiber, order)


@dataclass(frozen=True)
class ClosedComponent:
    """Fixed point data of one closed piece; at least one point."""

    label: str
    fixed_points: tuple

    def __post_init__(self):
        object.__setattr__(self, "fixed_points", tuple(self.fixed_points))
        if not self.fixed_points:
            raise ValueError("a closed component needs at least one fixed point")

    def to_dict(self, sign=1):
        return {"sign": sign, "label": self.label,
                "fixed_points": [p.to_dict() for p in self.fixed_points]}

    @staticmethod
    def from_dict(d):
        pts = tuple(FixedPointDatum.from_dict(p) for p in d["fixed_points"])
        return int(d.get("sign", 1)), ClosedComponent(str(d.get("label", "")), pts)


@dataclass
class DiscreteKCycle:
    """Signed, finite or bounded-enumerable, list of closed components.

    components is a sequence of (sign, ClosedComponent) with sign +-1.
    An infinite family is a callable index -> (sign, ClosedComponent)
    together with enumeration_bound, the largest index that will ever be
    materialized; window-exactness of truncations is certified at use
    time through the monotone escape of the family's minimal pairing.
    """

    datum: RootDatum
    components: tuple = ()
    family: object = None
    enumeration_bound: int = None

    def __post_init__(self):
        comps = []
        for sign, comp in self.components:
            sign = int(sign)
            if sign not in (-1, 1):
                raise ValueError(f"component sign must be +-1, got {sign}")
            self._check_component(comp)
            comps.append((sign, comp))
        self.components = tuple(comps)

    def _check_component(self, comp: ClosedComponent):
        for p in comp.fixed_points:
            for w in p.tangent_weights:
                self.datum.check_weight(w)
            for w in p.fiber_character.terms:
                self.datum.check_weight(w)

    @property
    def is_finite(self) -> bool:
        return self.family is None

    def negate(self) -> "DiscreteKCycle":
        comps = tuple((-s, c) for s, c in self.components)
        fam = None
        if self.family is not None:
            base = self.family
            fam = lambda i: (lambda sc: (-sc[0], sc[1]))(base(i))
        return DiscreteKCycle(self.datum, comps, fam, self.enumeration_bound)

    def materialized(self) -> "DiscreteKCycle":
        """Expand the family (if any) into an explicit component list."""
        if self.family is None:
            return self
        if self.enumeration_bound is None:
            raise EnumerationUnbounded("infinite component family without enumeration_bound")
        extra = []
        for i in range(self.enumeration_bound + 1):
            s, c = self.family(i)
            self._check_component(c)
            extra.append((int(s), c))
        return DiscreteKCycle(self.datum, self.components + tuple(extra))

    def iter_certified(self, xi, maxpair):
        """Yield components whose terms can reach pairing <= maxpair.

        For a family this checks the monotonicity certificate (minimal
        fiber pairing nondecreasing along the enumeration) and raises
        EnumerationUnbounded unless the family provably escapes the
        window within the enumeration bound.
        """
        yield from self.components
        if self.family is None:
            return
        if self.enumeration_bound is None:
            raise EnumerationUnbounded("infinite component family without enumeration_bound")
        prev = None
        for i in range(self.enumeration_bound + 1):
            s, c = self.family(i)
            self._check_component(c)
            low = min(dot(w, xi) for p in c.fixed_points for w in p.fiber_character.terms)
            if prev is not None and low < prev:
                raise EnumerationUnbounded(
                    f"family violates the monotonicity certificate at index {i}")
            prev = low
            if low > maxpair:
                return
            yield (int(s), c)
        raise EnumerationUnbounded(
            f"enumeration bound {self.enumeration_bound} does not certify the window")

    def to_dict(self) -> dict:
        cycle = self if self.family is None else self.materialized()
        out = {"datum": self.datum.to_dict(),
               "components": [c.to_dict(s) for s, c in cycle.components]}
        if self.enumeration_bound is not None:
            out["enumeration_bound"] = self.enumeration_bound
        return out

    @staticmethod
    def from_dict(d: dict) -> "DiscreteKCycle":
        datum = RootDatum.from_dict(d["datum"])
        comps = tuple(ClosedComponent.from_dict(c) for c in d.get("components", []))
        return DiscreteKCycle(datum, comps,
                              enumeration_bound=d.get("enumeration_bound"))


def cycle_negate(k: DiscreteKCycle) -> DiscreteKCycle:
    """Orientation reversal: negates every component sign."""
    return k.negate()


def _divisible_part(terms: dict, m: int) -> dict:
    if m == 1:
        return terms
    return {w: c for w, c in terms.items() if sum(w) % m == 0}


def closed_index(component: ClosedComponent, datum: RootDatum = None) -> WeightPolynomial:
    """Exact index of a closed component as a Laurent polynomial.

    Sums the fixed point contributions over a common denominator and
    divides exactly; failure of divisibility means the data cannot come
    from a closed orbifold and raises NotClosed.  Orbifold orders act by
    diagonal cyclic averaging as described in the module docstring.
    """
    pts = component.fixed_points
    rank = len(next(iter(pts[0].fiber_character.terms)))
    one = WeightPolynomial.one(rank)
    denoms = []
    numers = []
    for p in pts:
        m = p.orbifold_order
        if m > 1 and datum is not None and not datum.is_torus:
            raise OrbifoldAveragingUnsupported(
                "orbifold averaging outside a torus lattice is not expressible")
        dfac = one
        scaler = p.fiber_character
        for w in p.tangent_weights:
            dfac = dfac * (one - WeightPolynomial.monomial(scale(-m, w)))
            if m > 1:
                scaler = scaler * WeightPolynomial(
                    (scale(-i, w), 1) for i in range(m))
        num = WeightPolynomial()
        num.terms = dict(_divisible_part(scaler.terms, m))
        denoms.append(dfac)
        numers.append(num)
    n = len(pts)
    prefix = [one]
    for d in denoms:
        prefix.append(prefix[-1] * d)
    suffix = [one] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = denoms[i] * suffix[i + 1]
    total_num = WeightPolynomial.zero()
    for i in range(n):
        total_num = total_num + numers[i] * (prefix[i] * suffix[i + 1])
    try:
        return exact_divide(total_num, prefix[n])
    except ArithmeticError as exc:
        raise NotClosed(f"component {component.label!r}: {exc}") from exc


def closed_sum(k: DiscreteKCycle) -> WeightPolynomial:
    """Signed sum of the exact closed indices of all components."""
    cycle = k.materialized()
    out = WeightPolynomial.zero()
    for s, c in cycle.components:
        out = out + s * closed_index(c, k.datum)
    return out


def normalize_polarization(xi) -> tuple:
    """Scale a rational polarization to a primitive integer vector."""
    fr = [Fraction(x) for x in xi]
    if not any(fr):
        raise DegeneratePolarization("polarization vector is zero")
    lcm = 1
    for f in fr:
        lcm = lcm * f.denominator // math.gcd(lcm, f.denominator)
    ints = [int(f * lcm) for f in fr]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return tuple(v // g for v in ints)


def auto_polarization(k: DiscreteKCycle) -> tuple:
    """A certified-generic integer polarization for a cycle.

    Uses xi = (1, b, b^2, ...) with b one more than the largest tangent
    coordinate in absolute value: a zero pairing would be a vanishing
    base-b expansion with digits below b, forcing a zero weight.
    """
    cycle = k.materialized() if k.family is not None else k
    big = 0
    for _, comp in cycle.components:
        for p in comp.fixed_points:
            for w in p.tangent_weights:
                big = max(big, sup_norm(w))
    base = big + 1
    return tuple(base ** i for i in range(k.datum.rank))


def _extraction_points(datum: RootDatum, window: int):
    """Weight-level points needed to report the window, with extractors.

    Returns (needed, plan) where plan maps each dominant window weight
    lam to a list of (point, sign) pairs such that the irreducible
    multiplicity of lam is sum of sign * coefficient(point).  For a
    torus the plan is the identity; for type A it is the alternating
    sum over w(lam+rho)-rho, which inverts the character formula.
    """
    plan = {}
    needed = set()
    if datum.is_torus:
        for lam in dominant_window(datum, window):
            plan[lam] = [(lam, 1)]
            needed.add(lam)
        return needed, plan
    for lam in dominant_window(datum, window):
        rows = []
        for img, sgn, _ in signed_orbit_with_images(datum, add(lam, datum.rho)):
            pt = sub(img, datum.rho)
            rows.append((pt, sgn))
            needed.add(pt)
        plan[lam] = rows
    return needed, plan


def _int_nullspace(vectors, rank):
    """Primitive integer basis of the functionals vanishing on all vectors."""
    rows = [[Fraction(x) for x in v] for v in vectors]
    pivots = []
    r = 0
    for c in range(rank):
        sel = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    basis = []
    for fc in (c for c in range(rank) if c not in pivots):
        vec = [Fraction(0)] * rank
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -rows[i][fc]
        den = 1
        for x in vec:
            den = den * x.denominator // math.gcd(den, x.denominator)
        ints = [int(x * den) for x in vec]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        basis.append(tuple(v // g for v in ints))
    return basis


def _window_guards(dirs, needed, rank):
    """Linear guards that certified window terms can never violate.

    A partial product term u can still contribute to a reported weight
    only if some gamma in `needed` differs from u by a nonnegative
    combination of the remaining series directions.  Any functional phi
    that is nonnegative on those directions therefore forces <u, phi> <=
    max over needed of <gamma, phi>.  Candidates come from hyperplanes
    spanned by direction subsets, from the annihilator of the whole
    direction span, and from coordinate functionals; validity against a
    concrete suffix is re-checked by the caller before use.
    """
    cands = set()
    uniq = sorted(set(dirs))
    for phi in _int_nullspace(uniq, rank):
        cands.add(phi)
        cands.add(neg(phi))
    for size in range(1, rank):
        for subset in itertools.combinations(uniq, size):
            ns = _int_nullspace(subset, rank)
            if len(ns) == 1:
                cands.add(ns[0])
                cands.add(neg(ns[0]))
    for t in range(rank):
        e = tuple(1 if i == t else 0 for i in range(rank))
        cands.add(e)
        cands.add(neg(e))
    cands.discard(tuple([0] * rank))
    return [(phi, max(dot(v, phi) for v in needed)) for phi in sorted(cands)]


_PRUNE_THRESHOLD = 4096


def _expand_point(p: FixedPointDatum, xi, maxpair, needed=None):
    """Polarized series of one fixed point, exact below the pairing cap.

    Returns (terms, low): the series terms with pairing <= maxpair,
    restricted to the weights in `needed` when that set is given, and a
    lower bound valid for the pairing of every term of the full series:
    the minimal fiber pairing plus one mandatory step from each factor
    whose geometric series starts at k = 1.  Terms are kept as packed
    integers internally; a weight and its pairing occupy disjoint digit
    blocks, so vector addition is plain int addition and the pairing
    cap is a single comparison.
    """
    rank = len(xi)
    fiber = p.fiber_character.terms
    steps = []
    for w in p.tangent_weights:
        pw = dot(w, xi)
        if pw == 0:
            raise DegeneratePolarization(f"tangent weight {w} pairs to zero")
        steps.append((w, pw))
    steps.sort(key=lambda wp: -abs(wp[1]))
    fmin = min(dot(v, xi) for v in fiber)
    low = fmin + sum(pw for _, pw in steps if pw > 0)
    budget0 = maxpair - fmin
    if budget0 < 0:
        return {}, low
    # digit capacity: every coordinate a partial term can ever reach
    big = max((abs(c) for v in fiber for c in v), default=0)
    if needed:
        big = max(big, max(abs(c) for v in needed for c in v))
    growth = sum((budget0 // abs(pw)) * max(abs(c) for c in w)
                 for w, pw in steps)
    base = 1 << ((big + growth).bit_length() + 1)
    half = base >> 1
    pows = [base ** t for t in range(rank)]
    shift = base ** rank
    cap = maxpair * shift + shift // 2

    def pack(v):
        return dot(v, xi) * shift + sum(v[t] * pows[t] for t in range(rank))

    def unpack(u):
        coords = []
        for _ in range(rank):
            d = ((u + half) % base) - half
            coords.append(d)
            u = (u - d) // base
        return tuple(coords)

    dirs = [neg(w) if pw < 0 else w for w, pw in steps]
    guards = _window_guards(dirs, needed, rank) if needed else []
    needed_packed = {pack(v) for v in needed} if needed is not None else None

    cur = {}
    for v, c in fiber.items():
        cur[pack(v)] = cur.get(pack(v), 0) + c
    nfac = len(steps)
    for j, (w, pw) in enumerate(steps):
        if not cur:
            return {}, low
        last = j == nfac - 1
        stride = pack(dirs[j])
        if pw < 0:
            # (1 - t^{-w})^{-1} = sum_{k>=0} t^{-kw}, pairing step -pw > 0
            factor = [(k * stride, 1) for k in range(budget0 // -pw + 1)]
        else:
            # (1 - t^{-w})^{-1} = -t^w (1 - t^w)^{-1} = -sum_{k>=1} t^{kw}
            factor = [(k * stride, -1) for k in range(1, budget0 // pw + 1)]
        nxt = {}
        get = nxt.get
        if last and needed_packed is not None:
            for vp, c in cur.items():
                for ep, s in factor:
                    u = vp + ep
                    if u > cap:
                        break
                    if u not in needed_packed:
                        continue
                    cc = get(u, 0) + (c if s > 0 else -c)
                    if cc:
                        nxt[u] = cc
                    else:
                        del nxt[u]
        else:
            for vp, c in cur.items():
                for ep, s in factor:
                    u = vp + ep
                    if u > cap:
                        break
                    cc = get(u, 0) + (c if s > 0 else -c)
                    if cc:
                        nxt[u] = cc
                    else:
                        del nxt[u]
        cur = nxt
        if not last and guards and len(cur) > _PRUNE_THRESHOLD:
            rest = dirs[j + 1:]
            active = [(phi, b) for phi, b in guards
                      if all(dot(d, phi) >= 0 for d in rest)]
            if active:
                kept = {}
                for u, c in cur.items():
                    v = unpack(u)
                    if all(dot(v, phi) <= b for phi, b in active):
                        kept[u] = c
                cur = kept
    m = p.orbifold_order
    out = {}
    for u, c in cur.items():
        v = unpack(u)
        if m > 1 and sum(v) % m:
            continue
        out[v] = c
    return out, low


def polarized_index(k: DiscreteKCycle, xi, window: int) -> FormalCharacter:
    """Window-exact polarized index of a discrete K-cycle.

    Each factor (1 - t^{-w})^{-1} is expanded as the geometric series
    supported in the xi-positive half space.  Terms whose pairing
    exceeds the largest pairing any reported weight can need are pruned;
    since every remaining factor only adds nonnegative pairing, pruning
    never loses a contribution.  The result reports irreducible
    multiplicities for every dominant weight of sup-norm <= window.
    """
    if window <= 0:
        raise WindowExhausted(f"window must be >= 1, got {window}")
    if xi is None:
        xi = auto_polarization(k)
    xi = normalize_polarization(xi)
    if len(xi) != k.datum.rank:
        raise ValueError(f"polarization rank {len(xi)} != datum rank {k.datum.rank}")
    datum = k.datum
    needed, plan = _extraction_points(datum, window)
    maxpair = max(dot(v, xi) for v in needed)
    acc = {}
    lows = []
    for sign, comp in k.iter_certified(xi, maxpair):
        if comp.fixed_points and any(p.orbifold_order > 1 for p in comp.fixed_points):
            if not datum.is_torus:
                raise OrbifoldAveragingUnsupported(
                    "orbifold averaging outside a torus lattice is not expressible")
        for p in comp.fixed_points:
            terms, low = _expand_point(p, xi, maxpair, needed)
            if low is not None:
                lows.append(low)
            for v, c in terms.items():
                cc = acc.get(v, 0) + sign * c
                if cc:
                    acc[v] = cc
                else:
                    del acc[v]
    coeffs = {}
    for lam, rows in plan.items():
        m = sum(sgn * acc.get(pt, 0) for pt, sgn in rows)
        if m:
            coeffs[lam] = m
    lowbound = min(lows, default=Fraction(0))
    return FormalCharacter(datum, window, coeffs,
                           support_certificate=(tuple(xi), lowbound))


def character_window(k: DiscreteKCycle, window: int) -> FormalCharacter:
    """Exact closed-route window character of a finite cycle of closed pieces."""
    return FormalCharacter.from_weight_polynomial(k.datum, closed_sum(k), window)
