"""Seeded verification suites.

Each suite generates reproducible random instances (all randomness comes
from one seeded generator), exercises a library construction, and checks
it for exact equality against either the defining property or an
independent brute-force oracle.  The command line ``verify`` subcommand
and the acceptance tests both run these.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations, product

from .algebra import Algebra, Element, atomic_algebra, fincof_algebra, sup_family
from .counterexamples import (IdealDescriptor, bounded_candidates,
                              contraction_obstruction_witness, flatten_pair,
                              isometry_obstruction_witness, line_extension,
                              unflatten_line_point)
from .errors import BoolmetricError
from .extension import (WittInstance, _profile_tuple, conv_extend,
                        corner_images, cube_generators, extend_contraction,
                        extend_isometry, monotone_decompose, uniqueness_certify,
                        witt_cube_solutions, witt_residual, witt_solve)
from .invariants import (alpha_profile, alpha_profile_of_points, build_base,
                         brute_force_isometry, decide_isometric,
                         homogeneity_isometry)
from .spaces import (ConvexCoefficients, FiniteSpace, PartialMap, Point,
                     check_map, conv_hull, convex_combine, distance,
                     hull_contains, identity_map, is_orthogonal,
                     orthogonal_complement)


@dataclass(frozen=True)
class RunConfig:
    """Knobs shared by the suites and the command line."""

    seed: int = 0
    instances: int = 100
    atoms: int = 3
    dim: int = 2
    max_points: int = 10 ** 6
    max_support: int = 16


@dataclass
class SuiteResult:
    name: str
    total: int = 0
    failures: list[str] = field(default_factory=list)
    info: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> int:
        return self.total - len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        return f"{self.passed}/{self.total} exact"

    def fail(self, message: str):
        self.failures.append(message)


# ---------------------------------------------------------------------------
# Random instances.
# ---------------------------------------------------------------------------


def random_element(rng: random.Random, algebra: Algebra) -> Element:
    return algebra._make(rng.randrange(1 << algebra.atom_count))


def random_point(rng: random.Random, algebra: Algebra, dim: int) -> Point:
    return Point(random_element(rng, algebra) for _ in range(dim))


def random_hull(rng: random.Random, algebra: Algebra, dim: int,
                max_generators: int, max_size: int | None = None) -> FiniteSpace:
    """A random convex space; regenerated until it fits under max_size."""
    while True:
        count = rng.randint(1, max_generators)
        gens = [random_point(rng, algebra, dim) for _ in range(count)]
        hull = conv_hull(gens)
        if max_size is None or len(hull) <= max_size:
            return hull


def random_pointed_hull(rng: random.Random, algebra: Algebra, dim: int,
                        max_generators: int, max_size: int | None = None) -> FiniteSpace:
    hull = random_hull(rng, algebra, dim, max_generators, max_size)
    return hull.with_basepoint(rng.choice(hull.points))


def random_convex_subspace(rng: random.Random, space: FiniteSpace,
                           max_generators: int = 4) -> FiniteSpace:
    """A random convex subspace through the basepoint."""
    bp = space.require_basepoint()
    count = rng.randint(0, max_generators)
    gens = [bp] + [rng.choice(space.points) for _ in range(count)]
    return conv_hull(gens, basepoint=bp)


def random_self_isometry(rng: random.Random, space: FiniteSpace) -> PartialMap:
    """A certified self-isometry: a composition of homogeneity swaps."""
    pm = identity_map(space)
    for _ in range(rng.randint(1, 3)):
        a = rng.choice(space.points)
        b = rng.choice(space.points)
        pm = pm.then(homogeneity_isometry(space, a, b))
    return pm


def random_contractive_self_map(rng: random.Random, space: FiniteSpace) -> PartialMap:
    """A certified self-contraction: an isometry followed by collapses
    that copy a fixed point's coordinates outside a fixed element."""
    pm = random_self_isometry(rng, space)
    for _ in range(rng.randint(1, 2)):
        keep = random_element(rng, space.algebra)
        center = rng.choice(space.points)
        coeffs = ConvexCoefficients.from_partition([keep, ~keep])
        crush = PartialMap(tuple((z, convex_combine(coeffs, [z, center]))
                                 for z in space))
        pm = pm.then(crush)
    return pm


# ---------------------------------------------------------------------------
# Independent oracles.
# ---------------------------------------------------------------------------


def exhaustive_hull_membership(x: Point, generators: list[Point]) -> bool:
    """Hull membership by trying every coefficient assignment."""
    k = x.algebra.atom_count
    for assignment in product(range(len(generators)), repeat=k):
        if convex_combine(ConvexCoefficients(assignment), generators) == x:
            return True
    return False


def enumerate_contractive_extensions(pm: PartialMap, domain: list[Point],
                                     targets: list[Point]) -> list[dict]:
    """All contractive maps domain -> targets extending the given pairs,
    found by backtracking.  Independent of the closed-form extension."""
    fixed = dict(pm.pairs)
    missing = [p for p in domain if p not in fixed]
    solutions: list[dict] = []
    assigned = dict(fixed)

    def consistent(x: Point, y: Point) -> bool:
        return all(distance(y, w) <= distance(x, z) for z, w in assigned.items())

    def walk(i: int):
        if i == len(missing):
            solutions.append(dict(assigned))
            return
        x = missing[i]
        for y in targets:
            if consistent(x, y):
                assigned[x] = y
                walk(i + 1)
                del assigned[x]

    walk(0)
    return solutions


# ---------------------------------------------------------------------------
# Suites.
# ---------------------------------------------------------------------------


def run_sum_law(cfg: RunConfig) -> SuiteResult:
    """Profile of a space against profiles of a convex subspace and its
    orthogonal complement: alpha_n(X) must equal the join over i of
    alpha_i(U) & alpha_(n-i) of the complement, exactly, at every level."""
    res = SuiteResult("sum-law")
    start = time.perf_counter()
    rng = random.Random(cfg.seed)
    for idx in range(cfg.instances):
        res.total += 1
        k = rng.randint(1, min(3, cfg.atoms))
        n = rng.randint(1, min(3, cfg.dim))
        alg = atomic_algebra(k)
        ambient = random_hull(rng, alg, n, max_generators=5)
        ambient = ambient.with_basepoint(rng.choice(ambient.points))
        inner = random_convex_subspace(rng, ambient)
        comp = orthogonal_complement(inner, ambient)
        pa = alpha_profile(ambient)
        pu = alpha_profile(inner)
        pc = alpha_profile(comp)
        for level in range(1, pa.rank + 2):
            rhs = sup_family((pu.alpha(i) & pc.alpha(level - i)
                              for i in range(level + 1)), alg)
            if pa.alpha(level) != rhs:
                res.fail(f"instance {idx}: level {level}: "
                         f"{pa.alpha(level).literal} != {rhs.literal}")
                break
    res.elapsed = time.perf_counter() - start
    return res


def _small_hull(rng: random.Random, alg: Algebra, dim: int, cap: int) -> FiniteSpace:
    return random_hull(rng, alg, dim, max_generators=3, max_size=cap)


def run_isometry_oracle(cfg: RunConfig) -> SuiteResult:
    """decide_isometric against exhaustive isometry search on small pairs."""
    res = SuiteResult("isometry-oracle")
    start = time.perf_counter()
    rng = random.Random(cfg.seed)
    for idx in range(cfg.instances):
        res.total += 1
        k = rng.randint(1, min(3, cfg.atoms))
        n = rng.randint(1, 2)
        alg = atomic_algebra(k)
        left = _small_hull(rng, alg, n, cap=12)
        if rng.random() < 0.5:
            extra = [random_point(rng, alg, n) for _ in range(rng.randint(0, 2))]
            ambient = conv_hull(list(left.points) + extra)
            twist = random_self_isometry(rng, ambient)
            right = conv_hull([twist(p) for p in left])
            if len(right) != len(left):
                res.fail(f"instance {idx}: isometric image changed size")
                continue
        else:
            right = _small_hull(rng, alg, n, cap=12)
        decided = decide_isometric(left, right)
        found = brute_force_isometry(left, right)
        if decided != (found is not None):
            res.fail(f"instance {idx}: criterion says {decided}, "
                     f"search says {found is not None}")
            continue
        if found is not None and check_map(found).kind != "isometric":
            res.fail(f"instance {idx}: search returned a non-isometry")
    res.elapsed = time.perf_counter() - start
    return res


def run_witt(cfg: RunConfig) -> SuiteResult:
    """The profile cancellation solver on instances built from real
    subspace/complement pairs, with exhaustive uniqueness checks on the
    small ones."""
    res = SuiteResult("witt")
    start = time.perf_counter()
    rng = random.Random(cfg.seed)
    cube_checked = 0
    for idx in range(cfg.instances):
        res.total += 1
        k = rng.randint(1, 2) if idx % 2 == 0 else rng.randint(1, min(3, cfg.atoms))
        n = rng.randint(1, min(3, cfg.dim))
        alg = atomic_algebra(k)
        ambient = random_hull(rng, alg, n, max_generators=4)
        ambient = ambient.with_basepoint(rng.choice(ambient.points))
        inner = random_convex_subspace(rng, ambient)
        comp = orthogonal_complement(inner, ambient)
        outer_profile = alpha_profile(ambient)
        inst = WittInstance(alpha_profile(inner), outer_profile,
                            length=outer_profile.rank)
        try:
            inst.validate()
            solved = witt_solve(inst)
        except BoolmetricError as exc:
            res.fail(f"instance {idx}: solver refused a real instance: {exc}")
            continue
        if solved != alpha_profile(comp):
            res.fail(f"instance {idx}: solution differs from the complement profile")
            continue
        if k <= 2 and inst.length <= 3:
            cube_checked += 1
            expected = _profile_tuple(solved, inst.length)
            sols = witt_cube_solutions(inst)
            if sols != [expected]:
                res.fail(f"instance {idx}: cube search found {len(sols)} solutions")
    res.info["cube_checked"] = cube_checked
    res.elapsed = time.perf_counter() - start
    return res


def _profiles_from_counts(alg: Algebra, counts: list[int], length: int):
    from .invariants import AlphaProfile
    values = []
    for i in range(1, length + 1):
        mask = 0
        for t, c in enumerate(counts):
            if c >= i:
                mask |= 1 << t
        values.append(alg._make(mask))
    while values and values[-1].is_zero:
        values.pop()
    return AlphaProfile(alg, tuple(values))


def run_uniqueness_battery(cfg: RunConfig) -> SuiteResult:
    """Exhaustive hypothesis check for the at-most-one-zero lemma: for
    every valid profile pair the staircase images pairwise join to 1, the
    last image has its closed form, and small systems have exactly one
    solution on the cube."""
    res = SuiteResult("uniqueness-battery")
    start = time.perf_counter()
    certified = 0
    for k in range(1, min(3, cfg.atoms) + 1):
        alg = atomic_algebra(k)
        one = alg.one
        for d in range(1, 5):
            atom_choices = [(p, q) for q in range(d + 1) for p in range(q + 1)]
            for combo in product(atom_choices, repeat=k):
                res.total += 1
                inner = _profiles_from_counts(alg, [c[0] for c in combo], d)
                outer = _profiles_from_counts(alg, [c[1] for c in combo], d)
                inst = WittInstance(inner, outer, length=d)
                images = corner_images(inst)
                bad = False
                for i in range(len(images)):
                    for j in range(i + 1, len(images)):
                        if images[i] | images[j] != one:
                            res.fail(f"k={k} d={d} combo={combo}: images "
                                     f"{i},{j} do not join to 1")
                            bad = True
                            break
                    if bad:
                        break
                if bad:
                    continue
                closed_form = ~outer.alpha(d) | inner.alpha(1)
                if images[d] != closed_form:
                    res.fail(f"k={k} d={d} combo={combo}: last image "
                             f"{images[d].literal} != {closed_form.literal}")
                    continue
                if k <= 2 and d <= 3:
                    report = uniqueness_certify(cube_generators(alg, d),
                                                witt_residual(inst))
                    if not report.hypotheses_ok or len(report.zeros) != 1:
                        res.fail(f"k={k} d={d} combo={combo}: certification failed")
                    else:
                        certified += 1
    res.info["certified_unique"] = certified
    res.elapsed = time.perf_counter() - start
    return res


def run_extend_isometry(cfg: RunConfig) -> SuiteResult:
    """Full pipeline: restrict a certified random self-isometry to a random
    subset, extend, and check the result is a self-isometry extending it."""
    res = SuiteResult("extend-isometry")
    start = time.perf_counter()
    rng = random.Random(cfg.seed)
    for idx in range(cfg.instances):
        res.total += 1
        k = rng.randint(1, min(3, cfg.atoms))
        n = rng.randint(1, min(3, cfg.dim))
        alg = atomic_algebra(k)
        ambient = random_hull(rng, alg, n, max_generators=4)
        twist = random_self_isometry(rng, ambient)
        size = rng.randint(1, min(6, len(ambient)))
        subset = rng.sample(ambient.points, size)
        pm = PartialMap(tuple((u, twist(u)) for u in subset))
        try:
            out = extend_isometry(pm, ambient)
        except BoolmetricError as exc:
            res.fail(f"instance {idx}: extension failed: {exc}")
            continue
        if len(out) != len(ambient) or set(out.targets) != set(ambient.points):
            res.fail(f"instance {idx}: extension is not a self-bijection")
            continue
        if check_map(out).kind != "isometric":
            res.fail(f"instance {idx}: extension is not isometric")
            continue
        if any(out(s) != t for s, t in pm.pairs):
            res.fail(f"instance {idx}: extension does not restrict to the input")
    res.elapsed = time.perf_counter() - start
    return res


def run_extend_contraction(cfg: RunConfig) -> SuiteResult:
    """Same shape as extend-isometry, for contractions."""
    res = SuiteResult("extend-contraction")
    start = time.perf_counter()
    rng = random.Random(cfg.seed)
    for idx in range(cfg.instances):
        res.total += 1
        k = rng.randint(1, min(3, cfg.atoms))
        n = rng.randint(1, min(3, cfg.dim))
        alg = atomic_algebra(k)
        ambient = random_hull(rng, alg, n, max_generators=4)
        squash = random_contractive_self_map(rng, ambient)
        size = rng.randint(1, min(6, len(ambient)))
        subset = rng.sample(ambient.points, size)
        pm = PartialMap(tuple((u, squash(u)) for u in subset))
        try:
            out = extend_contraction(pm, ambient)
        except BoolmetricError as exc:
            res.fail(f"instance {idx}: extension failed: {exc}")
            continue
        if len(out) != len(ambient):
            res.fail(f"instance {idx}: extension is not total")
            continue
        if check_map(out).kind == "violation":
            res.fail(f"instance {idx}: extension is not contractive")
            continue
        if any(t not in ambient for _, t in out.pairs):
            res.fail(f"instance {idx}: extension leaves the space")
            continue
        if any(out(s) != t for s, t in pm.pairs):
            res.fail(f"instance {idx}: extension does not restrict to the input")
    res.elapsed = time.perf_counter() - start
    return res


def run_conv_uniqueness(cfg: RunConfig) -> SuiteResult:
    """The hull extension against exhaustive enumeration of all contractive
    extensions: there must be exactly one and it must match pointwise."""
    res = SuiteResult("conv-uniqueness")
    start = time.perf_counter()
    rng = random.Random(cfg.seed)
    for idx in range(cfg.instances):
        res.total += 1
        k = rng.randint(1, 2)
        n = rng.randint(1, 2)
        alg = atomic_algebra(k)
        pool = random_hull(rng, alg, n, max_generators=3, max_size=12)
        while len(pool) < 2:
            pool = random_hull(rng, alg, n, max_generators=3, max_size=12)
        squash = random_contractive_self_map(rng, pool)
        while True:
            size = rng.randint(2, min(3, len(pool)))
            subset = rng.sample(pool.points, size)
            if len(conv_hull(subset)) <= 8:
                break
        pm = PartialMap(tuple((u, squash(u)) for u in subset))
        try:
            out = conv_extend(pm)
        except BoolmetricError as exc:
            res.fail(f"instance {idx}: extension failed: {exc}")
            continue
        domain = list(conv_hull(subset).points)
        found = enumerate_contractive_extensions(pm, domain, list(pool.points))
        if len(found) != 1:
            res.fail(f"instance {idx}: search found {len(found)} contractive extensions")
            continue
        if found[0] != dict(out.pairs):
            res.fail(f"instance {idx}: search disagrees with the closed form")
    res.elapsed = time.perf_counter() - start
    return res


def run_counterexamples(cfg: RunConfig,
                        desc: IdealDescriptor | None = None) -> SuiteResult:
    """Every bounded candidate is refuted by a verified finite witness, for
    both obstruction constructions, and the plane merge map preserves
    distances on sampled pairs."""
    res = SuiteResult("counterexamples")
    start = time.perf_counter()
    desc = desc if desc is not None else IdealDescriptor.evens()
    alg = fincof_algebra()
    for v in bounded_candidates(cfg.max_support, alg):
        res.total += 1
        w = contraction_obstruction_witness(v, desc)
        if not w.verified:
            res.fail(f"contraction candidate {v.literal}: unverified witness")
    for a in bounded_candidates(cfg.max_support, alg):
        res.total += 1
        w = isometry_obstruction_witness((a, ~a), desc)
        if not w.verified:
            res.fail(f"plane candidate ({a.literal}, ~): unverified witness")
    # Candidates hitting the overlap branch: both coordinates cofinite.
    non_members = [n for n in range(8) if not desc.member(n)][:4]
    members = [n for n in range(9) if desc.member(n)][:4]
    for c_bits in range(1 << len(non_members)):
        for d_bits in range(1 << len(members)):
            res.total += 1
            a = alg.cof({n for i, n in enumerate(non_members) if c_bits >> i & 1})
            b = alg.cof({n for i, n in enumerate(members) if d_bits >> i & 1})
            w = isometry_obstruction_witness((a, b), desc)
            if not (w.verified and w.kind == "overlap"):
                res.fail(f"overlap candidate ({a.literal}, {b.literal}): "
                         f"kind {w.kind} unverified")
    # The merge map is distance preserving where defined.
    rng = random.Random(cfg.seed)
    pool = list(range(cfg.max_support + 1))
    for _ in range(50):
        res.total += 1
        pts = []
        for _ in range(2):
            xs = {n for n in rng.sample(pool, rng.randint(0, 4)) if desc.member(n)}
            ys = {n for n in rng.sample(pool, rng.randint(0, 4)) if not desc.member(n)}
            pts.append(Point((alg.fin(xs), alg.fin(ys))))
        merged = [flatten_pair(p) for p in pts]
        if distance(merged[0], merged[1]) != distance(pts[0], pts[1]):
            res.fail(f"merge map moved the distance of {pts[0].literal} / {pts[1].literal}")
            continue
        if any(unflatten_line_point(desc, m) != p for m, p in zip(merged, pts)):
            res.fail("merge map round trip failed")
    res.elapsed = time.perf_counter() - start
    return res


def run_line_extension(cfg: RunConfig) -> SuiteResult:
    """Translations recovered from sampled distance-preserving line maps,
    over both algebras."""
    res = SuiteResult("line-extension")
    start = time.perf_counter()
    rng = random.Random(cfg.seed)

    def random_fincof(alg):
        support = set(rng.sample(range(12), rng.randint(0, 4)))
        return alg.cof(support) if rng.random() < 0.5 else alg.fin(support)

    for idx in range(cfg.instances):
        res.total += 1
        if idx % 2 == 0:
            alg = atomic_algebra(rng.randint(1, 4))
            offset = random_element(rng, alg)
            pool = list(alg.elements())
            domain = rng.sample(pool, rng.randint(2, min(6, len(pool))))
        else:
            alg = fincof_algebra()
            offset = random_fincof(alg)
            domain = []
            while len(domain) < rng.randint(3, 6):
                e = random_fincof(alg)
                if e not in domain:
                    domain.append(e)
        pm = PartialMap(tuple((Point((x,)), Point((x ^ offset,))) for x in domain))
        try:
            ext = line_extension(pm)
        except BoolmetricError as exc:
            res.fail(f"instance {idx}: rejected a translation: {exc}")
            continue
        if ext.offset != offset:
            res.fail(f"instance {idx}: recovered the wrong offset")
            continue
        if alg.kind == "finite-atomic":
            full = ext.full_map()
            if check_map(full).kind != "isometric":
                res.fail(f"instance {idx}: full translation is not isometric")
                continue
            if any(full(s) != t for s, t in pm.pairs):
                res.fail(f"instance {idx}: full translation does not extend the input")
        else:
            sample = [Point((random_fincof(alg),)) for _ in range(4)]
            sample += [s for s, _ in pm.pairs]
            for p, q in combinations(sample, 2):
                if distance(ext(p), ext(q)) != distance(p, q):
                    res.fail(f"instance {idx}: translation moved a distance")
                    break
            else:
                if any(ext(s) != t for s, t in pm.pairs):
                    res.fail(f"instance {idx}: translation does not extend the input")
    res.elapsed = time.perf_counter() - start
    return res


def run_structural(cfg: RunConfig) -> SuiteResult:
    """Exhaustive small-scale law checks: lattice laws, triangle
    inequality, hull idempotence, generator invariance, hull membership
    against coefficient search, base conditions, complement convexity."""
    res = SuiteResult("structural")
    start = time.perf_counter()

    # Lattice laws, finite atomic, up to 4 atoms.
    for k in range(1, 5):
        alg = atomic_algebra(k)
        elems = list(alg.elements())
        for a, b in product(elems, repeat=2):
            res.total += 1
            if (~(a | b) != (~a & ~b) or ~(a & b) != (~a | ~b)
                    or (a & (a | b)) != a or (a | (a & b)) != a
                    or (a ^ b) != ((a - b) | (b - a))):
                res.fail(f"k={k}: lattice law broke on {a.literal}, {b.literal}")
        for a, b, c in product(elems, repeat=3):
            res.total += 1
            if ((a & b) & c != a & (b & c) or (a | b) | c != a | (b | c)
                    or a & (b | c) != (a & b) | (a & c)):
                res.fail(f"k={k}: associativity/distributivity broke")
    # Distributivity over finite families, up to 3 atoms.
    for k in range(1, 4):
        alg = atomic_algebra(k)
        elems = list(alg.elements())
        for x in elems:
            for size in range(0, 3):
                for family in combinations(elems, size):
                    res.total += 1
                    lhs = x & sup_family(family, alg)
                    rhs = sup_family((x & y for y in family), alg)
                    if lhs != rhs:
                        res.fail(f"k={k}: family distributivity broke at {x.literal}")
    # Lattice laws in the finite-cofinite algebra on bounded supports.
    falg = fincof_algebra()
    fincof_elems = [falg.fin(s) for s in _subsets(range(3))] + \
                   [falg.cof(s) for s in _subsets(range(3))]
    for a, b in product(fincof_elems, repeat=2):
        res.total += 1
        if (~(a | b) != (~a & ~b) or ~(a & b) != (~a | ~b)
                or ~~a != a or (a ^ b) != ((a - b) | (b - a))
                or (a & (a | b)) != a):
            res.fail(f"fincof law broke on {a.literal}, {b.literal}")

    # Triangle inequality on full product spaces.
    for k, n in ((1, 1), (1, 2), (2, 1), (2, 2), (3, 1)):
        alg = atomic_algebra(k)
        pts = [Point(c) for c in product(alg.elements(), repeat=n)]
        for x, y, z in combinations(pts, 3):
            res.total += 1
            if not distance(x, z) <= distance(x, y) | distance(y, z):
                res.fail(f"triangle broke at k={k} n={n}")
        for x in pts:
            res.total += 1
            if not distance(x, x).is_zero:
                res.fail("self distance is nonzero")

    # Hull idempotence, generator invariance, membership oracle, bases:
    # every nonempty subset of the one-coordinate space, up to 3 atoms.
    rng = random.Random(cfg.seed)
    families: list[list[Point]] = []
    for k in range(1, 4):
        alg = atomic_algebra(k)
        line = [Point((e,)) for e in alg.elements()]
        for size in range(1, len(line) + 1):
            families.extend(list(s) for s in combinations(line, size))
    alg2 = atomic_algebra(2)
    plane = [Point(c) for c in product(alg2.elements(), repeat=2)]
    for size in (1, 2):
        families.extend(list(s) for s in combinations(plane, size))
    for _ in range(40):
        families.append(rng.sample(plane, 3))
    for gens in families:
        res.total += 1
        hull = conv_hull(gens)
        again = conv_hull(hull.points)
        if set(again.points) != set(hull.points):
            res.fail("hull is not idempotent")
            continue
        if alpha_profile_of_points(gens) != alpha_profile_of_points(hull.points):
            res.fail("profile changed between generators and hull")
            continue
        base = build_base(hull.with_basepoint(hull.points[0]))
        bp = hull.points[0]
        regenerated = conv_hull([bp] + list(base.points))
        cond = (set(regenerated.points) == set(hull.points)
                and all(is_orthogonal(a, b, bp)
                        for a, b in combinations(base.points, 2)))
        profile = alpha_profile_of_points(hull.points)
        cond = cond and all(distance(x, bp) == profile.alpha(i) and not distance(x, bp).is_zero
                            for i, x in enumerate(base.points, start=1))
        if not cond:
            res.fail("base conditions failed")
    # Membership against exhaustive coefficient search (<= 3 atoms, <= 4 gens).
    checked = 0
    for gens in families:
        if len(gens) > 4 or checked >= 60:
            continue
        checked += 1
        alg = gens[0].algebra
        n = gens[0].dim
        for _ in range(4):
            candidate = random_point(rng, alg, n)
            res.total += 1
            if hull_contains(candidate, gens) != exhaustive_hull_membership(candidate, gens):
                res.fail(f"membership predicate disagrees at {candidate.literal}")
    # Orthogonal complements of convex subspaces are convex.
    for _ in range(20):
        k = rng.randint(1, 2)
        alg = atomic_algebra(k)
        ambient = random_pointed_hull(rng, alg, rng.randint(1, 2), max_generators=3)
        inner = random_convex_subspace(rng, ambient, max_generators=2)
        comp = orthogonal_complement(inner, ambient)
        res.total += 1
        combos = product(range(len(comp.points)), repeat=alg.atom_count)
        closed = all(convex_combine(ConvexCoefficients(c), list(comp.points)) in comp
                     for c in combos)
        if not closed:
            res.fail("complement is not closed under convex combinations")
    # Staircase decomposition round trip on all monotone tuples (k=2, d=3).
    alg = atomic_algebra(2)
    gens = cube_generators(alg, 3)
    cube = conv_hull(gens)
    for p in cube:
        res.total += 1
        back = convex_combine(monotone_decompose(p), gens)
        if back != p:
            res.fail(f"staircase round trip failed at {p.literal}")
    res.elapsed = time.perf_counter() - start
    return res


def _subsets(values) -> list[frozenset[int]]:
    vals = list(values)
    return [frozenset(c) for size in range(len(vals) + 1)
            for c in combinations(vals, size)]


SUITES = {
    "sum-law": run_sum_law,
    "isometry-oracle": run_isometry_oracle,
    "witt": run_witt,
    "uniqueness-battery": run_uniqueness_battery,
    "extend-isometry": run_extend_isometry,
    "extend-contraction": run_extend_contraction,
    "conv-uniqueness": run_conv_uniqueness,
    "counterexamples": run_counterexamples,
    "line-extension": run_line_extension,
    "structural": run_structural,
}


def run_suite(name: str, cfg: RunConfig) -> SuiteResult:
    try:
        fn = SUITES[name]
    except KeyError:
        raise BoolmetricError(f"unknown suite {name!r}; choose from "
                              + ", ".join(sorted(SUITES))) from None
    return fn(cfg)
