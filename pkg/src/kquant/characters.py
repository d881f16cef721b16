"""Virtual characters, formal completions, and exact Laurent arithmetic.

Three layers:

* WeightPolynomial: a finitely supported integer combination of lattice
  weights, i.e. an element of the group ring Z[weight lattice].  Stored
  as a dict weight -> nonzero coefficient.
* Character: a finite virtual character written in the basis of
  irreducibles (dominant highest weights).
* FormalCharacter: a window truncation of a possibly infinite character,
  exact inside the window, unspecified outside.

weyl_character produces the full weight polynomial of an irreducible by
the antisymmetrization quotient; decompose inverts it by stripping
maximal dominant terms.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NotDominant, NotInvariant, WindowExhausted
from .root_data import (RootDatum, add, as_weight, dominant_window,
                        is_dominant, neg, signed_orbit_with_images,
                        simple_reflection, sub, sup_norm)


class WeightPolynomial:
    """Finitely supported Z-linear combination of lattice weights.

    Supports +, -, unary -, * (by int or by another polynomial,
    convolution product), == and bool.  Zero coefficients are never
    stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        acc = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for w, c in items:
            w = as_weight(w)
            c = int(c)
            if not c:
                continue
            c += acc.get(w, 0)
            if c:
                acc[w] = c
            else:
                acc.pop(w, None)
        self.terms = acc

    @staticmethod
    def monomial(w, c=1) -> "WeightPolynomial":
        return WeightPolynomial([(w, c)])

    @staticmethod
    def one(rank: int) -> "WeightPolynomial":
        return WeightPolynomial([((0,) * rank, 1)])

    @staticmethod
    def zero() -> "WeightPolynomial":
        return WeightPolynomial()

    def coeff(self, w) -> int:
        return self.terms.get(as_weight(w), 0)

    def items(self):
        return self.terms.items()

    def sorted_items(self):
        return sorted(self.terms.items())

    def dimension(self) -> int:
        """Evaluation at the identity: sum of all coefficients."""
        return sum(self.terms.values())

    def mapped(self, f) -> "WeightPolynomial":
        """Push forward along a weight map f (e.g. a reflection)."""
        return WeightPolynomial((f(w), c) for w, c in self.terms.items())

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return isinstance(other, WeightPolynomial) and self.terms == other.terms

    def __neg__(self):
        return WeightPolynomial((w, -c) for w, c in self.terms.items())

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            c += out.get(w, 0)
            if c:
                out[w] = c
            else:
                del out[w]
        p = WeightPolynomial()
        p.terms = out
        return p

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return WeightPolynomial((w, other * c) for w, c in self.terms.items())
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = add(w1, w2)
                c = out.get(w, 0) + c1 * c2
                if c:
                    out[w] = c
                else:
                    del out[w]
        p = WeightPolynomial()
        p.terms = out
        return p

    __rmul__ = __mul__

    def __repr__(self):
        if not self.terms:
            return "WeightPolynomial(0)"
        bits = [f"{c}*t^{w}" for w, c in self.sorted_items()]
        return "WeightPolynomial(" + " + ".join(bits) + ")"

    def to_list(self):
        """Serialize as a sorted list of {"weight": [...], "mult": m}."""
        return [{"weight": list(w), "mult": c} for w, c in self.sorted_items()]

    @staticmethod
    def from_list(rows) -> "WeightPolynomial":
        return WeightPolynomial((row["weight"], row["mult"]) for row in rows)


def exact_divide(num: WeightPolynomial, den: WeightPolynomial) -> WeightPolynomial:
    """Exact quotient of Laurent polynomials, or ArithmeticError.

    Uses leading-term elimination in lexicographic order.  If the
    division is exact the quotient's support lies in the coordinate box
    [min_i(num) - min_i(den), max_i(num) - max_i(den)] (the per-coordinate
    extremes of a product add), so any step leaving that box certifies
    inexactness and the box also bounds the number of steps.
    """
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    if not num:
        return WeightPolynomial.zero()
    rank = len(next(iter(den.terms)))
    lo = tuple(min(w[i] for w in num.terms) - min(w[i] for w in den.terms) for i in range(rank))
    hi = tuple(max(w[i] for w in num.terms) - max(w[i] for w in den.terms) for i in range(rank))
    if any(a > b for a, b in zip(lo, hi)):
        raise ArithmeticError("not divisible: empty quotient box")
    lead = max(den.terms)
    lead_c = den.terms[lead]
    rem = dict(num.terms)
    quot = {}
    while rem:
        lw = max(rem)
        lc = rem[lw]
        mw = sub(lw, lead)
        if any(x < a or x > b for x, a, b in zip(mw, lo, hi)) or lc % lead_c:
            raise ArithmeticError(f"not divisible: stuck at term {lw}")
        mc = lc // lead_c
        quot[mw] = mc
        for w, c in den.terms.items():
            v = add(mw, w)
            r = rem.get(v, 0) - mc * c
            if r:
                rem[v] = r
            else:
                rem.pop(v, None)
    out = WeightPolynomial()
    out.terms = quot
    return out


@functools.lru_cache(maxsize=None)
def _weyl_character_cached(kind: str, rank: int, lam: tuple) -> WeightPolynomial:
    from .root_data import build_root_datum

    datum = build_root_datum(kind, rank)
    lam_rho = add(lam, datum.rho)
    numer = WeightPolynomial((img, s) for img, s, _ in signed_orbit_with_images(datum, lam_rho))
    denom = WeightPolynomial((img, s) for img, s, _ in signed_orbit_with_images(datum, datum.rho))
    return exact_divide(numer, denom)


def weyl_character(datum: RootDatum, lam) -> WeightPolynomial:
    """Full weight polynomial of the irreducible with highest weight lam.

    Computed by the antisymmetrization quotient:
    sum_w det(w) t^{w(lam+rho)} divided by sum_w det(w) t^{w(rho)}.
    For a torus the character is the single monomial t^lam.
    """
    lam = datum.check_weight(lam)
    if not is_dominant(datum, lam):
        raise NotDominant(f"{lam} is not dominant for {datum}")
    if datum.is_torus:
        return WeightPolynomial.monomial(lam)
    return _weyl_character_cached(datum.kind, datum.rank, lam)


def _check_invariant(datum: RootDatum, p: WeightPolynomial):
    for i in range(datum.rank if not datum.is_torus else 0):
        if p.mapped(lambda w, i=i: simple_reflection(datum, i, w)) != p:
            raise NotInvariant(f"polynomial is not invariant under reflection {i}")


def _strip_key(w):
    return (sum(w), w)


def decompose(datum: RootDatum, p: WeightPolynomial) -> "Character":
    """Write a Weyl-invariant weight polynomial in the irreducible basis.

    Repeatedly strips the maximal dominant term, where maximal means
    largest sum of pairings with the simple coroots (the coordinate sum
    in the fundamental basis), ties broken lexicographically.  Raises
    NotInvariant when the input is not a virtual character.
    """
    _check_invariant(datum, p)
    mults = {}
    rem = p
    guard = 0
    while rem:
        guard += 1
        assert guard <= 10_000, "decomposition did not terminate"
        dom = [w for w in rem.terms if is_dominant(datum, w)]
        if not dom:
            raise NotInvariant("nonzero invariant polynomial with no dominant term")
        top = max(dom, key=_strip_key)
        m = rem.terms[top]
        mults[top] = m
        rem = rem - m * weyl_character(datum, top)
    return Character(datum, mults)


@dataclass
class Character:
    """Finite virtual character: dominant highest weight -> multiplicity."""

    datum: RootDatum
    mults: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for w, m in dict(self.mults).items():
            w = self.datum.check_weight(w)
            if not is_dominant(self.datum, w):
                raise NotDominant(f"character key {w} is not dominant")
            m = int(m)
            if m:
                clean[w] = m
        self.mults = clean

    def mult(self, w) -> int:
        return self.mults.get(as_weight(w), 0)

    def sorted_items(self):
        return sorted(self.mults.items())

    def __eq__(self, other):
        return (isinstance(other, Character) and self.datum == other.datum
                and self.mults == other.mults)

    def __add__(self, other):
        if self.datum != other.datum:
            raise ValueError("datum mismatch")
        out = dict(self.mults)
        for w, m in other.mults.items():
            m += out.get(w, 0)
            if m:
                out[w] = m
            else:
                del out[w]
        return Character(self.datum, out)

    def __neg__(self):
        return Character(self.datum, {w: -m for w, m in self.mults.items()})

    def weight_polynomial(self) -> WeightPolynomial:
        """Expand back to the weight level."""
        out = WeightPolynomial.zero()
        for w, m in self.mults.items():
            out = out + m * weyl_character(self.datum, w)
        return out

    def weight_system_bound(self) -> int:
        """Sup-norm bound over all weights of all constituents."""
        bound = 0
        for w in self.mults:
            for v in weyl_character(self.datum, w).terms:
                bound = max(bound, sup_norm(v))
        return bound

    def to_list(self):
        return [{"weight": list(w), "mult": m} for w, m in self.sorted_items()]

    @staticmethod
    def from_list(datum: RootDatum, rows) -> "Character":
        return Character(datum, {as_weight(r["weight"]): int(r["mult"]) for r in rows})


def char_product(a: Character, b: Character) -> Character:
    """Tensor product decomposition, by multiplying weight polynomials."""
    if a.datum != b.datum:
        raise ValueError("datum mismatch")
    return decompose(a.datum, a.weight_polynomial() * b.weight_polynomial())


@dataclass
class FormalCharacter:
    """Window truncation of an element of the character completion.

    Multiplicities of irreducibles are exact for every dominant weight
    of sup-norm <= window and unspecified outside.  An optional support
    certificate (xi, bound) promises that every nonzero multiplicity
    gamma anywhere satisfies <gamma, xi> >= bound.
    """

    datum: RootDatum
    window: int
    coeffs: dict = field(default_factory=dict)
    support_certificate: tuple = None

    def __post_init__(self):
        if self.window < 0:
            raise WindowExhausted(f"window {self.window} is empty")
        clean = {}
        for w, m in dict(self.coeffs).items():
            w = self.datum.check_weight(w)
            if not is_dominant(self.datum, w):
                raise NotDominant(f"formal character key {w} is not dominant")
            if sup_norm(w) > self.window:
                raise WindowExhausted(f"key {w} outside window {self.window}")
            m = int(m)
            if m:
                clean[w] = m
        self.coeffs = clean

    def mult(self, w) -> int:
        w = self.datum.check_weight(w)
        if sup_norm(w) > self.window:
            raise WindowExhausted(f"{w} is outside window {self.window}")
        return self.coeffs.get(w, 0)

    def sorted_items(self):
        return sorted(self.coeffs.items())

    def restrict(self, window: int) -> "FormalCharacter":
        if window > self.window:
            raise WindowExhausted(f"cannot grow window {self.window} to {window}")
        kept = {w: m for w, m in self.coeffs.items() if sup_norm(w) <= window}
        return FormalCharacter(self.datum, window, kept, self.support_certificate)

    def agrees_with(self, other: "FormalCharacter") -> bool:
        """Equality of multiplicities over the shared window."""
        if self.datum != other.datum:
            return False
        b = min(self.window, other.window)
        for w in dominant_window(self.datum, b):
            if self.coeffs.get(w, 0) != other.coeffs.get(w, 0):
                return False
        return True

    def __add__(self, other):
        if self.datum != other.datum:
            raise ValueError("datum mismatch")
        b = min(self.window, other.window)
        out = {}
        for w in dominant_window(self.datum, b):
            m = self.coeffs.get(w, 0) + other.coeffs.get(w, 0)
            if m:
                out[w] = m
        return FormalCharacter(self.datum, b, out)

    def __neg__(self):
        return FormalCharacter(self.datum, self.window,
                               {w: -m for w, m in self.coeffs.items()},
                               self.support_certificate)

    def __sub__(self, other):
        return self + (-other)

    @staticmethod
    def from_character(ch: Character, window: int) -> "FormalCharacter":
        kept = {w: m for w, m in ch.mults.items() if sup_norm(w) <= window}
        return FormalCharacter(ch.datum, window, kept)

    @staticmethod
    def from_weight_polynomial(datum: RootDatum, p: WeightPolynomial,
                               window: int) -> "FormalCharacter":
        """Decompose a full (finite) weight polynomial, then truncate."""
        return FormalCharacter.from_character(decompose(datum, p), window)

    def to_dict(self) -> dict:
        return {"window": self.window,
                "terms": [{"weight": list(w), "mult": m} for w, m in self.sorted_items()]}

    @staticmethod
    def from_dict(datum: RootDatum, d: dict) -> "FormalCharacter":
        coeffs = {as_weight(r["weight"]): int(r["mult"]) for r in d.get("terms", [])}
        return FormalCharacter(datum, int(d["window"]), coeffs)


@functools.lru_cache(maxsize=None)
def _tensor_mults_cached(kind, rank, lam, mu):
    from .root_data import build_root_datum

    datum = build_root_datum(kind, rank)
    prod = weyl_character(datum, lam) * weyl_character(datum, mu)
    return decompose(datum, prod).mults


def formal_multiply(f: FormalCharacter, c: Character) -> FormalCharacter:
    """Multiply a window-truncated character by a finite virtual character.

    The result window shrinks by the sup-norm bound of the finite
    factor's full weight system, which is exactly the margin needed for
    every contributing term of f to lie inside f's window.  Raises
    WindowExhausted when the shrunken window is empty (negative).
    """
    if f.datum != c.datum:
        raise ValueError("datum mismatch")
    margin = c.weight_system_bound()
    window = f.window - margin
    if window < 0:
        raise WindowExhausted(f"window {f.window} cannot absorb margin {margin}")
    datum = f.datum
    out = {}
    if datum.is_torus:
        for lam, a in f.coeffs.items():
            for mu, b in c.mults.items():
                w = add(lam, mu)
                if sup_norm(w) <= window:
                    out[w] = out.get(w, 0) + a * b
    else:
        for lam, a in f.coeffs.items():
            for mu, b in c.mults.items():
                for nu, m in _tensor_mults_cached(datum.kind, datum.rank, lam, mu).items():
                    if sup_norm(nu) <= window:
                        out[nu] = out.get(nu, 0) + a * b * m
    return FormalCharacter(datum, window, out)
