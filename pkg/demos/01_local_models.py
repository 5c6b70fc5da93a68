"""Tour of the local model: fibered solid tori and their invariants.

Every fiber of a Seifert fibration sits inside a fibered solid torus,
the quotient of a cylinder D x I by a nu/mu twist. This script walks
through normalization, the three homeomorphism modes, the crossing
invariants, and what happens to fibers and boundary curves in covers.
"""

from seifert import (BoundaryClass, HomeoMode, crossing_invariants,
                     fold_crossing, fst_equivalent, fst_normalize, lift_curve,
                     lift_fiber, meridian_from_crossing)

print("== normal forms ==")
for nu, mu in [(7, 3), (-1, 3), (5, 5), (0, 1)]:
    t = fst_normalize(nu, mu, oriented=True)
    print(f"twist {nu}/{mu} -> {t.frac}")

print()
print("== homeomorphism modes ==")
a = fst_normalize(1, 3, oriented=True)
b = fst_normalize(2, 3, oriented=True)
for mode in (HomeoMode.PRESERVE, HomeoMode.REVERSE, HomeoMode.ANY):
    verdict = "equivalent" if fst_equivalent(a, b, mode) else "distinct"
    print(f"1/3 vs 2/3 under {mode.name}: {verdict}")
# 1/3 and 2/3 are mirror twists, so only the orientation-preserving
# comparison tells them apart

print()
print("== crossing invariants ==")
for nu, mu in [(1, 2), (2, 5), (3, 7)]:
    t = fst_normalize(nu, mu, oriented=True)
    c = crossing_invariants(t)
    m = meridian_from_crossing(c)
    folded = fold_crossing(c)
    print(f"twist {t.frac}: crossing pair ({c.mu},{c.beta}), "
          f"meridian {m.a}H{m.b:+}Q, class-N fold ({folded.mu},{folded.beta})")

print()
print("== lifting to fiberwise cyclic covers ==")
t = fst_normalize(2, 5, oriented=True)
for sigma in (2, 3, 5, 6):
    count, lifted = lift_fiber(sigma, t)
    print(f"core of {t.frac} in {sigma} sheets: {count} component(s), "
          f"each of type {lifted.frac}")

curve = BoundaryClass(1, -4)
count, lifted = lift_curve(6, curve)
print(f"boundary curve m-4l in 6 sheets: {count} components, "
      f"each reading {lifted.a}m{lifted.b:+}l")
