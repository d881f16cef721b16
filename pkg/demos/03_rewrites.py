"""Index-preserving rewrites of K-cycles, each with a certificate.

A rewrite returns the new cycle together with a RewriteCertificate that
records the window characters before and after; verdict is the exact
equality of the two.  Illegal rewrites raise typed errors instead of
producing an uncertified cycle.
"""

import kquant as kq

T1 = kq.build_root_datum("torus", 1)


def cycle(*components):
    return kq.DiscreteKCycle(T1, tuple((1, c) for c in components))


# Disjoint union adds indices.
a, b = cycle(kq.o_sphere(1)), cycle(kq.f_sphere(4))
u, cert = kq.certify_disjoint_union(a, b, 6)
print("union verdict:", cert.verdict, "| index:",
      dict(kq.character_window(u, 6).sorted_items()))

# Disk decomposition: the half-space model as an infinite sphere family.
disks, cert = kq.certify_disk_decomposition(1, 12, 6)
print("disk decomposition verdict:", cert.verdict,
      "| window:", dict(kq.polarized_index(disks, (1,), 6).sorted_items()))

# Gluing: O(2) cuts into a piece with index 1 + t and a piece with t^2.
pieces, cert = kq.certify_glue_split(kq.o_sphere(2), [[0], [1]], T1, 8)
print("glue verdict:", cert.verdict)
for p in pieces:
    print("  piece index:", dict(kq.closed_sum(p).sorted_items()))

# Bundle modification with a unit-index fiber preserves the character.
fiber = kq.o_sphere(0)                      # index 1
mod, cert = kq.bundle_modification(a, fiber, 8)
assert cert.verdict
print("bundle modification verdict:", cert.verdict)

# A fiber with nonunit index is rejected before anything is rewritten.
try:
    kq.bundle_modification(a, kq.o_sphere(1), 8)
except kq.FiberIndexNotUnit as exc:
    print("rejected fiber:", exc)

# Products multiply indices; the finite factor bounds the window loss.
prod, cert = kq.certify_product(disks, cycle(kq.o_sphere(1)), 5)
print("product verdict:", cert.verdict,
      "| window:", dict(kq.polarized_index(prod, (1,), 5).sorted_items()))

# compare_cycles is the bordism-style equality check.
cert = kq.compare_cycles(cycle(kq.o_sphere(2)),
                         cycle(kq.f_sphere(0), kq.f_sphere(1), kq.f_sphere(2)), 8)
print("O(2) vs F_0+F_1+F_2:", cert.verdict)
