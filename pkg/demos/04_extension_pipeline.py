#!/usr/bin/env python3
"""From a few matched pairs to a total isometry, step by step.

A distance-preserving assignment on finitely many points extends, first
to the convex hull of its domain (by an explicit closed-form formula
that is the unique contractive extension), and then — via orthogonal
complements and base transport — to an isometry of the whole ambient
space.  Every stage below is re-verified by direct distance checks.
"""

from boolmetric import (PartialMap, Point, atomic_algebra, check_map,
                        conv_extend, conv_hull, extend_contraction,
                        extend_isometry, uniqueness_certify, witt_solve)

alg = atomic_algebra(2)


def pt(*lits):
    return Point(tuple(alg.parse(s) for s in lits))


ambient = conv_hull([pt("00", "00"), pt("01", "00"), pt("01", "01"),
                     pt("10", "10"), pt("11", "10"), pt("11", "11")])
seed = PartialMap(((pt("00", "00"), pt("11", "11")),
                   (pt("11", "10"), pt("01", "00"))))
print(f"ambient space: {len(ambient)} points")
print(f"seed pairs   : {len(seed)} (verified "
      f"{check_map(seed).kind})")

hull_map = conv_extend(seed)
print()
print(f"step 1 — extend over the domain hull: {len(hull_map)} pairs")
for s, t in hull_map.pairs:
    mark = "  (seed)" if (s, t) in seed.pairs else ""
    print(f"  {s} -> {t}{mark}")

total = extend_isometry(seed, ambient)
verdict = check_map(total)
print()
print(f"step 2 — extend to the ambient space: {len(total)} pairs, "
      f"verified {verdict.kind}")
for s, t in total.pairs:
    print(f"  {s} -> {t}")

# The same machinery extends mere contractions.
crush = PartialMap(((pt("00", "00"), pt("00", "00")),
                    (pt("01", "01"), pt("01", "00"))))
contraction = extend_contraction(crush, ambient)
print()
print(f"a contraction seed extends too: {len(contraction)} pairs, "
      f"verified {check_map(contraction).kind}")

# Under the hood both pipelines solve triangular join equation systems;
# here is one solved directly, with its uniqueness certificate.
from boolmetric import (WittInstance, alpha_profile, cube_generators,
                        witt_residual)

inner = conv_hull([pt("00", "00"), pt("01", "01")]).with_basepoint(
    pt("00", "00"))
outer = ambient.with_basepoint(pt("00", "00"))
instance = WittInstance(alpha_profile(inner), alpha_profile(outer),
                        length=3)
solution = witt_solve(instance)
print()
print("step 3 — the triangular system relating the profiles of a "
      "subspace and its ambient space:")
print(f"  inner profile : {[v.literal for v in instance.inner.values]}")
print(f"  outer profile : {[v.literal for v in instance.outer.values]}")
print(f"  solution      : {[v.literal for v in solution.values]}")
cert = uniqueness_certify(cube_generators(alg, instance.length),
                          witt_residual(instance))
print(f"  certificate   : hypotheses_ok={cert.hypotheses_ok}, "
      f"zeros={len(cert.zeros)}, certified={cert.certified}")
