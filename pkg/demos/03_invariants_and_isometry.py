#!/usr/bin/env python3
"""The alpha profile, bases, and deciding isometry without search.

The alpha profile of a finite space is a decreasing chain of algebra
elements; for convex spaces it is a complete isometry invariant, so two
hulls are isometric exactly when their profiles match, and a witness
isometry can then be constructed by transporting bases.
"""

from boolmetric import (Point, alpha_profile, atomic_algebra, build_base,
                        check_map, construct_isometry, conv_hull,
                        decide_isometric, norm)

alg = atomic_algebra(2)


def pt(*lits):
    return Point(tuple(alg.parse(s) for s in lits))


left = conv_hull([pt("00", "00"), pt("11", "10"), pt("01", "01")])
print(f"left hull  : {len(left)} points")
profile = alpha_profile(left)
for line in profile.lines():
    print(f"  {line}")

bp = pt("00", "00")
base = build_base(left.with_basepoint(bp))
print(f"base at {bp}:")
for i, x in enumerate(base.points, start=1):
    print(f"  base[{i}] = {x}   |x| = {norm(x, bp).literal} "
          f"= alpha[{i}] = {profile.alpha(i).literal}")

# An isometric copy: complement the first coordinate everywhere.
right = conv_hull([Point((~p.coords[0], p.coords[1])) for p in left])
# Same shape with the two atoms swapped: still 6 points, but distances
# now land in different algebra elements, so it is NOT isometric.
swapped = conv_hull([pt("00", "00"), pt("11", "01"), pt("10", "10")])

for name, other in [("complemented copy", right),
                    ("atom-swapped copy", swapped)]:
    verdict = decide_isometric(left, other)
    print()
    print(f"left vs {name}: isometric = {verdict}")
    if verdict:
        witness = construct_isometry(left, other)
        kind = check_map(witness).kind
        print(f"  witness map of {len(witness)} pairs, verified {kind}")
        for s, t in witness.pairs[:3]:
            print(f"    {s} -> {t}")
        print("    ...")
    else:
        other_profile = alpha_profile(other)
        print(f"  profiles differ: rank {profile.rank} with "
              f"{[v.literal for v in profile.values]} vs rank "
              f"{other_profile.rank} with "
              f"{[v.literal for v in other_profile.values]}")
