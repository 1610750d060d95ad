import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from conftest import system
from polyproj.balas import initial_test_cone, redundancy_test, restrict
from polyproj.errors import DimensionMismatch, IndexOutOfRange, NotPointed, TriviallyInfeasible
from polyproj.minrep import extract_projection, minimal_input, minimal_projected_representation
from polyproj.polyhedron import HSystem, Inequality, normalize_system, permute_vars
from polyproj.testkit import (corpus, gen_simplex, oracle_minrep, oracle_projection_levels,
                              random_instance)


def test_minimal_input_examples(delta2):
    s = system("x", [[1, 1], [-1, 0], [1, 2]])
    assert minimal_input(s).rows() == [(1, 1), (-1, 0)]
    assert minimal_input(delta2) == delta2
    s = system("x", [[1, 1], [2, 2], [-1, 0]])
    assert minimal_input(s).rows() == [(1, 1), (-1, 0)]


def test_worked_example(six_rows):
    pr = minimal_projected_representation(six_rows)
    assert len(pr) == 5
    assert extract_projection(pr, 2).key_set() == {
        (9, -11, 1), (6, -1, 2), (-3, 1, 1), (-18, 13, 4), (9, -8, 1)}
    assert extract_projection(pr, 0).key_set() == six_rows.key_set()


def test_unit_square_levels(square):
    pr = minimal_projected_representation(square)
    assert pr.levels[0].m == 4
    assert pr.levels[1].var_names == ("y",)
    assert pr.levels[1].key_set() == {(1, 1), (-1, 0)}
    assert pr.levels[2].n == 0 and pr.levels[2].m == 0


@pytest.mark.parametrize("n", [1, 2, 3, 6])
def test_simplex_levels_any_order(n):
    s = gen_simplex(n)
    rng = random.Random(n)
    for _ in range(3):
        order = list(s.var_names)
        rng.shuffle(order)
        pr = minimal_projected_representation(s, order)
        for k in range(n):
            lev = pr.levels[k]
            assert lev.m == n - k + 1
            assert lev.var_names == tuple(order[k:])
            assert lev.key_set() == gen_simplex(n - k).key_set()


def test_extract_projection_bounds(segment):
    pr = minimal_projected_representation(segment)
    assert extract_projection(pr, 0) == minimal_input(segment)
    assert extract_projection(pr, 1).n == 0
    with pytest.raises(IndexOutOfRange):
        extract_projection(pr, 2)
    with pytest.raises(IndexOutOfRange):
        extract_projection(pr, -1)


def test_errors():
    with pytest.raises(NotPointed):
        minimal_projected_representation(system("x y", [[1, 1, 1], [-1, -1, 0]]))
    with pytest.raises(TriviallyInfeasible):
        minimal_projected_representation(system("x", [[1, -1], [-1, 0]]))
    with pytest.raises(TriviallyInfeasible):
        minimal_input(system("x y", [[1, 0, 0], [-1, 0, -1], [0, 1, 0], [0, -1, 0]]))
    with pytest.raises(DimensionMismatch):
        minimal_projected_representation(system("x y", [[1, 0, 0], [0, 1, 0]]), ["x", "z"])


def test_levels_record_their_origin(six_rows):
    pr = minimal_projected_representation(six_rows)
    for k, lev in enumerate(pr.levels):
        assert all(q.level == k for q in lev.ineqs)


def test_levels_match_oracle_on_corpus():
    for bounded in (True, False):
        for s in corpus(40, seed=31, bounded=bounded):
            pr = minimal_projected_representation(s)
            oracle = oracle_projection_levels(normalize_system(s))
            assert [lev.key_set() for lev in pr.levels] == [o.key_set() for o in oracle]


def test_every_kept_row_is_extreme_at_its_level():
    for s in corpus(25, seed=32):
        s = normalize_system(s)
        pr = minimal_projected_representation(s)
        tc = initial_test_cone(s)
        for k in range(s.n):
            if k:
                tc = restrict(tc, k - 1)
            for q in pr.levels[k].ineqs:
                full = Inequality((0,) * k + q.coeffs, q.rhs)
                assert redundancy_test(tc, full, check=True) is False
            assert pr.levels[k].m <= s.m ** (s.n // 2) + 1


def test_rescaling_rows_does_not_change_output():
    rng = random.Random(33)
    for s in corpus(20, seed=33):
        scaled = HSystem(s.var_names, [
            Inequality(tuple(F(k) * a for a in q.coeffs), F(k) * q.rhs)
            for q, k in ((q, F(rng.randint(1, 9), rng.randint(1, 9))) for q in s.ineqs)])
        a = minimal_projected_representation(s)
        b = minimal_projected_representation(scaled)
        assert [lev.key_set() for lev in a.levels] == [lev.key_set() for lev in b.levels]


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 4), st.integers(0, 6), st.integers(1, 6), st.integers(0, 2 ** 32),
       st.randoms(use_true_random=False))
def test_random_orders_match_oracle(n, extra, bits, seed, rnd):
    s, interior = random_instance(n, n + 1 + extra, bits, seed)
    assert s.contains(interior)
    order = list(s.var_names)
    rnd.shuffle(order)
    pr = minimal_projected_representation(s, order)
    oracle = oracle_projection_levels(normalize_system(permute_vars(s, tuple(order))))
    for k in range(n + 1):
        assert pr.levels[k].key_set() == oracle[k].key_set()
    back = permute_vars(pr.levels[0], s.var_names)
    assert back.key_set() == oracle_minrep(s).key_set()
