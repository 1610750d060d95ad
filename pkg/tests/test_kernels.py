import os

import pytest
from hypothesis import given, settings, strategies as st

from polyproj import _pykernels, kernels
from polyproj.linalg import rref

try:
    from polyproj import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = [_pykernels] + ([_ckernels] if _ckernels is not None else [])
ids = [b.__name__.rsplit(".", 1)[-1] for b in BACKENDS]


def matrices(max_abs):
    return st.integers(1, 6).flatmap(lambda n: st.lists(
        st.lists(st.integers(-max_abs, max_abs), min_size=n, max_size=n),
        min_size=0, max_size=7).map(lambda rows: (rows, n)))


def ref_rank(rows, n):
    return len(rref(rows)[1]) if rows else 0


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")
    forced = os.environ.get("POLYPROJ_PURE_PYTHON", "") not in ("", "0")
    if _ckernels is not None and not forced:
        assert kernels.BACKEND == "cython"
    if forced:
        assert kernels.BACKEND == "python"


@pytest.mark.parametrize("k", BACKENDS, ids=ids)
def test_rank_examples(k):
    assert k.rank([[1, 0], [0, 1]], 2) == 2
    assert k.rank([[0, 0], [0, 0]], 2) == 0
    assert k.rank([[1, 2], [2, 4], [0, 1]], 2) == 2
    assert k.rank([], 3) == 0
    assert k.rank([[0, 0, 5], [0, 0, 7]], 3) == 1


@pytest.mark.parametrize("k", BACKENDS, ids=ids)
def test_overflowing_entries_fall_back(k):
    big = 2 ** 70
    rows = [[big, 1, 0], [big + 1, 1, 0], [0, 0, big * big]]
    assert k.rank(rows, 3) == 3
    assert k.rank([[big, big], [3 * big, 3 * big]], 2) == 1
    assert k.dots([[big, -1]], [big, big * big]) == [0]
    assert k.zero_rank([[big, -1], [1, 1]], [1, big], 2) == 1


@pytest.mark.parametrize("k", BACKENDS, ids=ids)
@settings(max_examples=150, deadline=None)
@given(matrices(50))
def test_rank_matches_rational_rref(k, data):
    rows, n = data
    assert k.rank(rows, n) == ref_rank(rows, n)


@pytest.mark.parametrize("k", BACKENDS, ids=ids)
@settings(max_examples=60, deadline=None)
@given(matrices(2 ** 40))
def test_rank_large_entries(k, data):
    rows, n = data
    assert k.rank(rows, n) == ref_rank(rows, n)


@pytest.mark.parametrize("k", BACKENDS, ids=ids)
@settings(max_examples=100, deadline=None)
@given(matrices(9), st.lists(st.integers(-3, 3), min_size=6, max_size=6), st.integers(0, 127))
def test_zero_set_and_masks(k, data, vec, mask):
    rows, n = data
    vec = vec[:n]
    d = [sum(a * b for a, b in zip(r, vec)) for r in rows]
    assert k.dots(rows, vec) == d
    zs = [i for i, x in enumerate(d) if x == 0]
    assert list(k.zero_set(rows, vec)) == zs
    assert k.zero_rank(rows, vec, n) == ref_rank([rows[i] for i in zs], n)
    mask &= (1 << len(rows)) - 1
    sub = [r for i, r in enumerate(rows) if mask >> i & 1]
    assert k.rank_subset(rows, mask, n) == ref_rank(sub, n)
