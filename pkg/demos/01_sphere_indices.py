"""Closed and polarized indices of rotation-invariant spheres.

Every computation here is exact integer arithmetic: the closed route
sums fixed-point contributions over a common denominator and certifies
divisibility, the polarized route expands geometric series on a finite
window.  The two agree wherever both are defined.
"""

import kquant as kq

T1 = kq.build_root_datum("torus", 1)


def cycle(*components):
    return kq.DiscreteKCycle(T1, tuple((1, c) for c in components))


def show(label, poly):
    terms = ", ".join(f"{m}*t^{w[0]}" for w, m in poly.sorted_items()) or "0"
    print(f"{label:28s} {terms}")


# Spheres with the standard circle action, two fixed points each.
show("F_3 (constant fiber t^3)", kq.closed_sum(cycle(kq.f_sphere(3))))
show("O(4) (degree-4 bundle)", kq.closed_sum(cycle(kq.o_sphere(4))))

# The twisted sphere with fibers t^n, t^{n+1} has index zero for all n.
for n in (0, 2, 7):
    tw = kq.ClosedComponent(f"tw{n}", (kq.point((n,), (1,)),
                                       kq.point((n + 1,), (-1,))))
    show(f"twisted n={n}", kq.closed_sum(cycle(tw)))

# An orbifold football of order 3: only weights divisible by 3 survive.
fb = kq.ClosedComponent("Z3", (kq.point((0,), (-1,), order=3),
                               kq.point((6,), (1,), order=3)))
show("football Z/3, O(6) cover", kq.closed_sum(cycle(fb)))

# Polarized route on a window, checked against the closed answer.
k = cycle(kq.o_sphere(2), kq.f_sphere(5))
closed = kq.character_window(k, 8)
for xi in ((1,), (-1,), (3,)):
    assert kq.polarized_index(k, xi, 8).agrees_with(closed)
print("polarized == closed for xi in {(1,), (-1,), (3,)}")

# A lazy infinite family: the n-th member is F_n, enumeration certified.
fam = kq.DiscreteKCycle(T1, (), family=lambda i: (1, kq.f_sphere(i)),
                        enumeration_bound=50)
fc = kq.polarized_index(fam, (1,), 5)
print("family sum window 5:", {w[0]: m for w, m in fc.sorted_items()})
