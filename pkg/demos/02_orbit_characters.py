"""Coadjoint orbit cycles and irreducible characters.

The orbit cycle of a regular dominant weight carries one fixed point
per Weyl chamber; its closed index is the full irreducible character,
and decomposing formal characters back into orbit cycles inverts the
quantization map on the reported window.
"""

import kquant as kq

A2 = kq.build_root_datum("A", 2)

# Adjoint orbit of A2: highest weight (1,1), six fixed points.
oc = kq.orbit_cycle(A2, (1, 1))
print("fixed points:", len(oc.component.fixed_points))
poly = kq.closed_index(oc.component, A2)
print("index dimension:", poly.dimension())          # adjoint rep: 8
print("decomposition:", kq.decompose(A2, poly).mults)

# The closed index is the Weyl character, weight by weight.
assert poly == kq.weyl_character(A2, (1, 1))
print("orbit index == Weyl character for (1,1)")

# Same story across a window of regular dominant weights.
checked = 0
for lam in kq.dominant_window(A2, 3):
    if not kq.is_regular_dominant(A2, lam):
        continue
    c = kq.orbit_cycle(A2, lam)
    assert kq.closed_index(c.component, A2) == kq.weyl_character(A2, lam)
    checked += 1
print(f"Borel-Weil agreement on {checked} regular weights, window 3")

# p_map sends a formal character to a disjoint union of orbit cycles;
# quantizing that cycle returns the character: a certified round trip.
fc = kq.FormalCharacter(A2, 4, {(1, 1): 2, (2, 1): 1, (1, 3): -1})
k = kq.p_map(fc)
back = kq.character_window(k, 4)
assert back.agrees_with(fc)
print("p_map round trip on window 4:", dict(back.sorted_items()))

# Singular weights have no regular orbit cycle.
try:
    kq.orbit_cycle(A2, (1, 0))
except kq.SingularOrbitUnsupported as exc:
    print("singular weight rejected:", exc)
