"""Two-route verification of [Q,R] = 0 on proper linear models.

A linear model is a torus action on C^d given by integer weights and a
shift.  Quantization expands a polarized series; reduction counts
lattice points fiber by fiber.  The two computations share no code
path, so their agreement on a window is a genuine cross-check.
"""

from fractions import Fraction

import kquant as kq

# d = 2, r = 1: weights {1, 1}, proper since the hull misses the origin.
m = kq.linear_model([(1,), (1,)], (0,))
print("proper:", kq.check_proper(m), "| farkas:", kq.farkas_vector(m))

fq = kq.formal_quantization(m, 6)
print("quantization:", {w[0]: c for w, c in fq.sorted_items()})
for n in (0, 3, 6):
    print(f"reduction at {n}:", tuple(kq.reduction_multiplicity(m, (n,))))

report = kq.verify_qr(m, 6)
print(report.table())

# An improper model is rejected with a convex-combination witness.
bad = kq.linear_model([(1, 2), (-1, 0), (0, -1)], (0, 0))
try:
    kq.farkas_vector(bad)
except kq.NotProper as exc:
    print("improper:", exc)

# Vanishing set of a rank-2 model: components, stabilizers, mu values.
mv = kq.linear_model([(1, 0), (0, 1), (1, 2)], (-1, -2))
for comp in kq.vanishing_decomposition(mv):
    print("component", comp.support, "mu =", comp.mu_value,
          "compact =", comp.compact, "diameter =", comp.mu_diameter)

# Compatibility of a putative moment-map offset, checked exactly.
offsets = {comp.support: comp.mu_value
           for comp in kq.vanishing_decomposition(mv)}
print("compatible with K=3:",
      kq.check_compatibility(mv, offsets, Fraction(3)))
