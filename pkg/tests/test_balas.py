import random

import pytest

from conftest import system
from polyproj.balas import (TestCone, build_a0, build_w0_direct, initial_test_cone,
                            is_implied, reduced_projection_cone, redundancy_test, restrict,
                            subsumption_cone)
from polyproj.dd import brute_force_rays, dd_method, rays_to_facets
from polyproj.errors import (AlreadyEliminated, DimensionMismatch, NotInCone, NotPointed,
                             StaleVariable, TrivialInequality)
from polyproj.fme import block_eliminate
from polyproj.minrep import minimal_projected_representation
from polyproj.polyhedron import HSystem, Inequality, homogenize, normalize_system
from polyproj.testkit import corpus, oracle_minrep, same_cone


def rays_of(tc):
    return set(dd_method(tc.system()).rays)


def test_build_a0_examples(segment, delta2):
    assert build_a0(segment) == ([[1, 0], [-1, 1]], [0, 1])
    assert build_a0(delta2) == ([[-1, 0, 0], [0, -1, 0], [1, 1, 1]], [0, 1, 2])
    s = system("x y", [[1, 1, 1], [2, 2, 3], [0, 1, 1]])
    A0, perm = build_a0(s)
    assert perm == [0, 2, 1]
    assert A0 == [[1, 1, 0], [0, 1, 0], [2, 2, 1]]
    with pytest.raises(NotPointed):
        build_a0(system("x y", [[1, 1, 1], [2, 2, 3]]))


def test_initial_test_cone_segment(segment):
    tc = initial_test_cone(segment)
    assert same_cone(tc.system(), system("v1 v0", [[1, -1, 0], [0, -1, 0]]))
    assert rays_of(tc) == {(1, 1), (-1, 0)}


def test_initial_test_cone_simplex(delta2):
    tc = initial_test_cone(delta2)
    rays = rays_of(tc)
    assert rays == set(brute_force_rays(tc.system()))
    # (0,0,1) is the sum of the three facet rows, so it is not extreme
    assert rays == {(-1, 0, 0), (0, -1, 0), (1, 1, 1)}


def test_unbounded_test_cone_contains_unit_ray():
    tc = initial_test_cone(system("x", [[-1, 0]]))
    assert rays_of(tc) == {(-1, 0), (0, 1)}
    tc = initial_test_cone(system("x y", [[-1, 0, 0], [0, -1, 0], [-1, 1, 2]]))
    assert (0, 0, 1) in rays_of(tc)


def test_square_system_has_no_projection(delta2):
    s = system("x y", [[1, 2, 3], [-1, 1, 0]])  # m == n
    tc = initial_test_cone(s)
    assert reduced_projection_cone(s).m == 3
    assert rays_of(tc) - {(0, 0, 1)} == {(1, 2, 3), (-1, 1, 0)}


def test_restrict_examples(segment):
    tc = TestCone(((1, -1),), (0,), 1)
    assert restrict(tc, 0).M == ((0, -1),)
    p = restrict(initial_test_cone(segment), 0)
    assert p.active == ()
    assert set(dd_method(p.system()).rays) == {(1,)}
    with pytest.raises(AlreadyEliminated):
        restrict(p, 0)


def test_restrict_commutes():
    for s in corpus(15, seed=21, max_n=4):
        tc = initial_test_cone(normalize_system(s))
        a, b = 0, s.n - 1
        assert set(restrict(restrict(tc, a), b).M) == set(restrict(restrict(tc, b), a).M)


def test_redundancy_test_examples(segment, six_rows):
    tc = initial_test_cone(segment)
    assert redundancy_test(tc, Inequality((1,), 1)) is False
    assert redundancy_test(tc, Inequality((1,), 2)) is True
    assert redundancy_test(tc, Inequality((3,), 3)) is False  # scaling
    tc = restrict(restrict(initial_test_cone(six_rows), 0), 1)
    listed = [(3, -3, 1), (9, -11, 1), (6, -1, 2), (-3, 1, 1), (-18, 13, 4), (9, -8, 1)]
    for a3, a4, c in listed:
        q = Inequality((0, 0, a3, a4), c)
        assert redundancy_test(tc, q) == ((a3, a4, c) == (3, -3, 1))


def test_redundancy_test_errors(segment, delta2):
    tc = initial_test_cone(segment)
    with pytest.raises(DimensionMismatch):
        redundancy_test(tc, Inequality((1, 0), 1))
    with pytest.raises(TrivialInequality):
        redundancy_test(tc, Inequality((0,), 1))
    with pytest.raises(StaleVariable):
        redundancy_test(restrict(initial_test_cone(delta2), 0), Inequality((1, 1), 1))
    with pytest.raises(NotInCone):
        redundancy_test(tc, Inequality((1,), 0), check=True)
    assert not is_implied(tc, Inequality((1,), 0))
    assert is_implied(tc, Inequality((1,), 5))


def test_test_cone_rays_are_the_facets():
    for bounded in (True, False):
        for s in corpus(30, seed=22, bounded=bounded):
            s = normalize_system(s)
            rays = rays_of(initial_test_cone(s))
            rays.discard((0,) * s.n + (1,))
            assert rays == oracle_minrep(s).key_set()


def test_polar_of_homogenized_projection():
    # rays (v, v0) of the restricted cone <-> facets (v, -v0) of HomCone(projection)
    for s in corpus(20, seed=23, max_n=4):
        s = normalize_system(s)
        pr = minimal_projected_representation(s)
        tc = initial_test_cone(s)
        for k in range(s.n):
            if k:
                tc = restrict(tc, k - 1)
            proj = pr.levels[k]
            hom = homogenize(proj).base
            facets = rays_to_facets(dd_method(hom).rays, hom.var_names).key_set()
            polar = {r[:-1] + (-r[-1], 0) for r in dd_method(tc.system()).rays}
            assert polar == facets


def test_subsumption_examples(segment, delta2, square):
    for s in (segment, delta2, square):
        assert same_cone(subsumption_cone(s).system, initial_test_cone(s).system())


def test_w0_direct_examples(delta2, square):
    for s in (delta2, square):
        w0 = build_w0_direct(s, {0})
        q = s.n - 1
        direct = normalize_system(block_eliminate(w0, range(q, q + s.m - q)))
        assert same_cone(direct, restrict(initial_test_cone(s), 0).system())


def test_w0_direct_without_elimination_is_w(delta2):
    w0 = build_w0_direct(delta2, set())
    assert w0.n == delta2.m + 1
    direct = normalize_system(block_eliminate(w0, range(delta2.n, delta2.m)))
    assert same_cone(direct, initial_test_cone(delta2).system())


def test_restriction_matches_direct_construction():
    rng = random.Random(24)
    for s in corpus(20, seed=24, max_m=9):
        s = normalize_system(s)
        block = sorted(rng.sample(range(s.n), rng.randint(1, s.n - 1)))
        tc = initial_test_cone(s)
        for j in block:
            tc = restrict(tc, j)
        w0 = build_w0_direct(s, block)
        q = s.n - len(block)
        assert same_cone(normalize_system(block_eliminate(w0, range(q, s.m))), tc.system())


def test_test_cone_system_names(delta2):
    tc = restrict(initial_test_cone(delta2), 0)
    assert tc.system().var_names == ("v2", "v0")
    assert tc.embed((5, 7)) == (0, 5, 7)
    assert isinstance(tc.system(), HSystem)
