"""Plumbing of the randomized verification suites (small smoke runs)."""

import pytest

from boolmetric import BoolmetricError
from boolmetric.suites import (SUITES, RunConfig, SuiteResult, random_hull,
                               random_point, random_self_isometry, run_suite)


def test_registry_names():
    assert set(SUITES) == {
        "sum-law", "isometry-oracle", "witt", "uniqueness-battery",
        "extend-isometry", "extend-contraction", "conv-uniqueness",
        "counterexamples", "line-extension", "structural"}


def test_unknown_suite_name():
    with pytest.raises(BoolmetricError):
        run_suite("sum-laws", RunConfig())


def test_result_formatting():
    res = SuiteResult("demo", total=3)
    assert res.ok and res.summary() == "3/3 exact"
    res.fail("one bad case")
    assert not res.ok and res.passed == 2 and res.summary() == "2/3 exact"


def test_generators_are_deterministic():
    import random

    from boolmetric import atomic_algebra
    alg = atomic_algebra(3)
    a = random_point(random.Random(5), alg, 2)
    b = random_point(random.Random(5), alg, 2)
    assert a == b
    ha = random_hull(random.Random(9), alg, 2, 3)
    hb = random_hull(random.Random(9), alg, 2, 3)
    assert ha.points == hb.points


def test_random_self_isometry_is_isometric():
    import random

    from boolmetric import Point, atomic_algebra, check_map
    rng = random.Random(21)
    hull = random_hull(rng, atomic_algebra(3), 2, 3)
    iso = random_self_isometry(rng, hull)
    verdict = check_map(iso)
    assert verdict.kind == "isometric"
    assert sorted((t for _, t in iso.pairs), key=Point.sort_key) \
        == list(hull.points)


@pytest.mark.parametrize("name", ["sum-law", "witt", "extend-isometry",
                                  "conv-uniqueness", "line-extension"])
def test_small_smoke_runs(name):
    res = run_suite(name, RunConfig(seed=4, instances=3))
    assert res.ok and res.total == 3, res.failures[:1]
