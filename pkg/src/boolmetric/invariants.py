"""Isometry invariants of finite Boolean metric spaces.

The central invariant is the alpha profile: ``alpha_k`` is the largest
element below which ``k + 1`` points of the space stay pairwise far apart,
formally the join over all (k+1)-subsets of the meet of their pairwise
distances.  The sequence is decreasing, ``alpha_0 = 1`` by convention, and
for convex spaces the profile decides isometry: two convex spaces over the
same algebra are isometric exactly when their profiles agree, and an
isometry can be constructed by transporting bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .algebra import Algebra, Element
from .errors import (CapExceededError, InfeasibleError, StructureError,
                     VerificationError)
from .spaces import (ConvexCoefficients, FiniteSpace, PartialMap, Point,
                     _pattern, _require_atomic, check_map, conv_hull,
                     convex_combine, decompose, distance, is_orthogonal)

_DIRECT_ENUMERATION_CAP = 20


@dataclass(frozen=True)
class AlphaProfile:
    """The nonzero alpha values of a space, indexed from 1.

    ``values[i - 1]`` is ``alpha_i``; the stored values are exactly the
    nonzero ones, so ``rank`` (the largest index with a nonzero value) is
    their count.  ``alpha(0)`` is 1 and indices beyond the rank give 0.
    """

    algebra: Algebra
    values: tuple[Element, ...]

    def __post_init__(self):
        prev = self.algebra.one
        for v in self.values:
            if v.is_zero:
                raise StructureError("profile values must be nonzero; trim trailing zeros")
            if not v <= prev:
                raise StructureError("profile values must be decreasing")
            prev = v

    @property
    def rank(self) -> int:
        return len(self.values)

    def alpha(self, k: int) -> Element:
        if k < 0:
            raise StructureError("alpha index must be a natural")
        if k == 0:
            return self.algebra.one
        if k <= len(self.values):
            return self.values[k - 1]
        return self.algebra.zero

    def lines(self) -> list[str]:
        return [f"alpha[{k}] = {self.values[k - 1].literal}"
                for k in range(1, len(self.values) + 1)]


def alpha_profile_of_points(points: Sequence[Point],
                            cap: int = _DIRECT_ENUMERATION_CAP) -> AlphaProfile:
    """Profile by direct enumeration of subsets of the given points.

    This is the defining computation.  Because the profile of a generator
    set equals the profile of its hull, callers may pass generators instead
    of a whole space.
    """
    pts = sorted(set(points), key=Point.sort_key)
    if not pts:
        raise StructureError("alpha profile of an empty family")
    alg = pts[0].algebra
    if len(pts) > cap:
        raise CapExceededError(
            f"direct profile enumeration over {len(pts)} points refused "
            f"(cap {cap}); pass a smaller generator set")
    dists = {}
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            dists[i, j] = distance(pts[i], pts[j])
    zero = alg.zero
    values = []
    for k in range(1, len(pts)):
        best = zero
        for subset in combinations(range(len(pts)), k + 1):
            m = None
            for a, b in combinations(subset, 2):
                d = dists[a, b]
                m = d if m is None else m & d
                if m.is_zero:
                    break
            if not m.is_zero:
                best = best | m
        if best.is_zero:
            break
        values.append(best)
    return AlphaProfile(alg, tuple(values))


def alpha_profile(source) -> AlphaProfile:
    """Profile of a space or point family.

    Uses the remembered generator set of a hull when available.  For a
    large convex space without a small generator set, a base is constructed
    first and the profile is computed from basepoint plus base, which
    generate the space.
    """
    if isinstance(source, FiniteSpace):
        gens = source.generators if source.generators is not None else source.points
        if len(gens) > _DIRECT_ENUMERATION_CAP and source.convex:
            bp = source.basepoint if source.basepoint is not None else source.points[0]
            base = build_base(source if source.basepoint is not None
                              else source.with_basepoint(bp))
            gens = (bp,) + base.points
        return alpha_profile_of_points(gens)
    return alpha_profile_of_points(list(source))


@dataclass(frozen=True)
class Base:
    """A base of a pointed convex space: pairwise orthogonal points with
    ``|x_i| = alpha_i > 0`` that generate the space together with the
    basepoint."""

    points: tuple[Point, ...]
    basepoint: Point

    @property
    def rank(self) -> int:
        return len(self.points)


def build_base(space: FiniteSpace) -> Base:
    """Construct and verify a base of a pointed convex space.

    Construction is atom by atom: on each atom, list the distinct patterns
    of the space with the basepoint's pattern first, the rest in ascending
    order; the i-th base point copies the i-th pattern where it exists and
    falls back to the basepoint's pattern elsewhere.  The three defining
    conditions are re-checked before returning.
    """
    bp = space.require_basepoint()
    if not space.convex:
        raise StructureError("bases exist for convex spaces; materialize a hull first")
    alg = space.algebra
    _require_atomic(alg, "base construction")
    k = alg.atom_count
    per_atom: list[list[tuple[int, ...]]] = []
    rank = 0
    for t in range(k):
        base_pat = _pattern(bp, t)
        others = sorted({_pattern(p, t) for p in space} - {base_pat})
        per_atom.append([base_pat] + others)
        rank = max(rank, len(others))
    base_points = []
    for i in range(1, rank + 1):
        coord_bits = [0] * space.dim
        for t in range(k):
            pats = per_atom[t]
            pat = pats[i] if i < len(pats) else pats[0]
            for j in range(space.dim):
                coord_bits[j] |= pat[j] << t
        base_points.append(Point(alg._make(b) for b in coord_bits))

    # Condition: basepoint and base generate the space.
    hull = conv_hull([bp] + base_points)
    if set(hull.points) != set(space.points):
        raise VerificationError("base construction failed: wrong hull")
    # Condition: pairwise orthogonality.
    for a, b in combinations(base_points, 2):
        if not is_orthogonal(a, b, bp):
            raise VerificationError("base construction failed: not orthogonal")
    # Condition: norms realize the profile, which also pins the rank.
    profile = alpha_profile_of_points([bp] + base_points)
    if profile.rank != rank:
        raise VerificationError("base construction failed: rank mismatch")
    for i, x in enumerate(base_points, start=1):
        nx = distance(x, bp)
        if nx != profile.alpha(i) or nx.is_zero:
            raise VerificationError("base construction failed: norm != alpha")
    return Base(tuple(base_points), bp)


def decide_isometric(left: FiniteSpace, right: FiniteSpace) -> bool:
    """Profile comparison, a complete isometry criterion for convex spaces
    over a common algebra."""
    if left.algebra != right.algebra:
        raise StructureError("isometry comparison needs a common algebra")
    if not (left.convex and right.convex):
        raise StructureError("the profile criterion applies to convex spaces")
    return alpha_profile(left) == alpha_profile(right)


def construct_isometry(left: FiniteSpace, right: FiniteSpace) -> PartialMap:
    """Build an isometry between convex spaces with equal profiles.

    Bases are built over each space's basepoint (canonical-first when
    unset), matched index by index, and every point is transported through
    its convex decomposition.  The result is re-checked to be a bijective
    isometry before returning.
    """
    if not decide_isometric(left, right):
        raise InfeasibleError("spaces have different profiles, no isometry exists")
    bp_l = left.basepoint if left.basepoint is not None else left.points[0]
    bp_r = right.basepoint if right.basepoint is not None else right.points[0]
    base_l = build_base(left.with_basepoint(bp_l))
    base_r = build_base(right.with_basepoint(bp_r))
    if base_l.rank != base_r.rank:
        raise VerificationError("equal profiles but mismatched base ranks")
    gens_l = [bp_l] + list(base_l.points)
    gens_r = [bp_r] + list(base_r.points)
    pairs = []
    for z in left:
        coeffs = decompose(z, gens_l)
        pairs.append((z, convex_combine(coeffs, gens_r)))
    pm = PartialMap(tuple(pairs), flag="isometric")
    targets = set(pm.targets)
    if check_map(pm).kind != "isometric" or targets != set(right.points):
        raise VerificationError("base transport did not produce an isometry")
    return pm


def homogeneity_isometry(space: FiniteSpace, a: Point, b: Point) -> PartialMap:
    """A self-isometry of a convex space swapping two of its points.

    Each point z is replaced by the convex combination of (b, a, z) with
    coefficients (where z agrees with a, where z agrees with b but not a,
    the rest); atom-wise this transposes the patterns of a and b and fixes
    everything else.  The result is verified to be an isometric involution
    mapping a to b.
    """
    if not space.convex:
        raise StructureError("homogeneity applies to convex spaces")
    if a not in space or b not in space:
        raise StructureError("both points must belong to the space")
    alg = space.algebra
    one = alg.one
    pairs = []
    for z in space:
        near_a = ~distance(z, a)
        near_b = ~distance(z, b) - near_a
        rest = one - (near_a | near_b)
        coeffs = ConvexCoefficients.from_partition([near_a, near_b, rest])
        pairs.append((z, convex_combine(coeffs, [b, a, z])))
    pm = PartialMap(tuple(pairs), flag="isometric")
    if pm(a) != b or pm(b) != a:
        raise VerificationError("homogeneity map does not swap the chosen points")
    for z, w in pm.pairs:
        if pm(w) != z:
            raise VerificationError("homogeneity map is not an involution")
    if check_map(pm).kind != "isometric":
        raise VerificationError("homogeneity map is not isometric")
    return pm


def brute_force_isometry(left: FiniteSpace, right: FiniteSpace,
                         cap: int = 12) -> PartialMap | None:
    """Exhaustive search for an isometry between small finite spaces.

    Independent of the profile machinery; used as an oracle against
    :func:`decide_isometric`.  Returns the first isometry in canonical
    backtracking order, or None.  Spaces larger than ``cap`` are refused.
    """
    if left.algebra != right.algebra:
        raise StructureError("isometry search needs a common algebra")
    if max(len(left), len(right)) > cap:
        raise CapExceededError(f"brute force beyond {cap} points refused")
    if len(left) != len(right):
        return None
    xs = list(left.points)
    ys = list(right.points)

    def row(points, p):
        return sorted(distance(p, q).sort_key() for q in points if q is not p)

    rows_l = {p: row(xs, p) for p in xs}
    rows_r = {q: row(ys, q) for q in ys}
    if sorted(map(tuple, rows_l.values())) != sorted(map(tuple, rows_r.values())):
        return None

    assigned: list[Point] = []
    used = [False] * len(ys)

    def extend(i: int) -> bool:
        if i == len(xs):
            return True
        x = xs[i]
        for j, y in enumerate(ys):
            if used[j] or rows_l[x] != rows_r[y]:
                continue
            if all(distance(x, xs[t]) == distance(y, assigned[t]) for t in range(i)):
                assigned.append(y)
                used[j] = True
                if extend(i + 1):
                    return True
                assigned.pop()
                used[j] = False
        return False

    if not extend(0):
        return None
    return PartialMap(tuple(zip(xs, assigned)), flag="isometric")
