import pytest
from hypothesis import given, settings, strategies as st

from conftest import system
from polyproj.errors import NotPointed
from polyproj.fme import eliminate_sequence
from polyproj.minrep import minimal_projected_representation
from polyproj.polyhedron import is_pointed_fulldim_candidate, normalize_system
from polyproj.testkit import (GeneratorSpec, corpus, gen_cyclic, gen_random, gen_simplex,
                              greedy_minrep, oracle_lp_min, oracle_minrep, random_instance,
                              random_unbounded_instance, recession_rays, same_polyhedron,
                              vertices)


def test_simplex_examples():
    assert gen_simplex(1).key_set() == {(-1, 0), (1, 1)}
    assert gen_simplex(2).m == 3
    assert gen_simplex(24).m == 25


def test_cyclic_examples():
    assert gen_cyclic(2, 3).m == 3
    assert gen_cyclic(5, 10).m == 42
    assert gen_cyclic(5, 6).m == 6
    assert gen_cyclic(4, 8).m == 20  # v(v-3)/2 for d = 4
    with pytest.raises(ValueError):
        gen_cyclic(3, 3)


def test_cyclic_vertices_are_moment_points():
    verts = set(vertices(gen_cyclic(3, 6)))
    assert verts == {(t, t * t, t ** 3) for t in range(1, 7)}


def test_random_is_deterministic():
    a = gen_random(2, 4, 3, seed=1)
    assert a == gen_random(2, 4, 3, seed=1)
    assert a.m == 4
    assert a != gen_random(2, 4, 3, seed=2)


def test_generator_spec():
    assert GeneratorSpec("simplex", (3,)).build() == gen_simplex(3)
    assert GeneratorSpec("random", (2, 4, 3, 1)).build() == gen_random(2, 4, 3, 1)
    with pytest.raises(ValueError):
        GeneratorSpec("random", (3, 3, 1, 0))
    with pytest.raises(ValueError):
        GeneratorSpec("torus", (1,))


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 5), st.integers(0, 6), st.integers(1, 8), st.integers(0, 2 ** 32))
def test_random_instances_are_pointed_with_interior_point(n, extra, bits, seed):
    for make in (random_instance, random_unbounded_instance):
        s, interior = make(n, n + 1 + extra, bits, seed)
        assert is_pointed_fulldim_candidate(s)
        assert all(q.evaluate(interior) < q.rhs for q in s.ineqs)
    s, _ = random_instance(n, n + 1 + extra, bits, seed)
    assert not recession_rays(s)  # bounded
    u, _ = random_unbounded_instance(n, n + 1 + extra, bits, seed)
    assert recession_rays(u)


def test_oracle_minrep_examples(delta2, six_rows):
    assert oracle_minrep(system("x", [[1, 1], [1, 2], [-1, 0]])).rows() == [(1, 1), (-1, 0)]
    assert oracle_minrep(delta2) == delta2
    six = eliminate_sequence(six_rows, 2)
    assert oracle_minrep(six).m == 5
    with pytest.raises(NotPointed):
        oracle_minrep(system("x y", [[1, 1, 1]]))


def test_oracles_agree_and_are_idempotent():
    for bounded in (True, False):
        for s in corpus(30, seed=41, bounded=bounded):
            o = oracle_minrep(s)
            assert oracle_minrep(o) == o
            assert greedy_minrep(s).key_set() == o.key_set()
            assert same_polyhedron(o, s)


def test_oracle_minrep_independent_of_row_order():
    for s in corpus(15, seed=42):
        s = normalize_system(s)
        rev = s.with_ineqs(tuple(reversed(s.ineqs)))
        assert oracle_minrep(rev).key_set() == oracle_minrep(s).key_set()


def test_same_polyhedron_examples(segment):
    assert same_polyhedron(segment, normalize_system(segment))
    assert not same_polyhedron(segment, system("x", [[1, 2], [-1, 0]]))
    s = corpus(1, seed=43)[0]
    raw = eliminate_sequence(s, 1)
    assert same_polyhedron(raw, minimal_projected_representation(s).levels[1])


def test_lp_oracle(delta2):
    assert oracle_lp_min(delta2, (1, 1)) == 0
    assert oracle_lp_min(delta2, (-1, -2)) == -2
    assert oracle_lp_min(system("x", [[-1, 0]]), (-1,)) is None
    assert oracle_lp_min(system("x", [[-1, 0]]), (1,)) == 0
