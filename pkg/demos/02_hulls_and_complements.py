#!/usr/bin/env python3
"""Convex hulls, membership certificates and orthogonal complements.

A convex combination assigns to each generator a coefficient from a
partition of unity; the hull of a generating set collects every such
combination.  Hull membership therefore comes with an explicit
certificate (the coefficients), and every pointed convex space splits
into a subspace and its orthogonal complement.
"""

from boolmetric import (Point, atomic_algebra, conv_hull, convex_combine,
                        decompose, distance, is_orthogonal, norm,
                        orthogonal_complement)

alg = atomic_algebra(2)


def pt(*lits):
    return Point(tuple(alg.parse(s) for s in lits))


gens = [pt("00", "00"), pt("11", "10"), pt("01", "01")]
hull = conv_hull(gens)
print(f"generators : {', '.join(str(p) for p in gens)}")
print(f"hull size  : {len(hull)}")
for p in hull:
    print(f"  {p}")

print()
probe = pt("10", "10")
coeffs = decompose(probe, gens)
print(f"membership certificate for {probe}:")
for c, g in zip(coeffs.partition(alg, len(gens)), gens):
    print(f"  coefficient {c.literal} on {g}")
rebuilt = convex_combine(coeffs, gens)
print(f"recombined : {rebuilt}   (matches: {rebuilt == probe})")

print()
bp = gens[0]
inner = conv_hull([bp, pt("01", "01")]).with_basepoint(bp)
comp = orthogonal_complement(inner, hull.with_basepoint(bp))
print(f"inner subspace     : {', '.join(str(p) for p in inner)}")
print(f"orthogonal complement: {', '.join(str(p) for p in comp)}")
for u in inner:
    for w in comp:
        if u == bp or w == bp:
            continue
        print(f"  d({u}, {w}) = {distance(u, w).literal} "
              f"= |u| | |w| = {(norm(u, bp) | norm(w, bp)).literal} "
              f"-> orthogonal: {is_orthogonal(u, w, bp)}")
