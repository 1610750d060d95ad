# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels.

Each routine first tries a fixed-width (int64) path with explicit overflow
checks and falls back to the arbitrary-precision implementations in
``_pykernels`` whenever an input or intermediate value does not fit.
Results are identical to the pure-Python versions.
"""

from libc.stdlib cimport malloc, free

from polyproj import _pykernels as _py

cdef extern from *:
    """
    static inline int pp_mul(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int pp_sub(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    static inline int pp_add(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    bint pp_mul(long long a, long long b, long long *r) nogil
    bint pp_sub(long long a, long long b, long long *r) nogil
    bint pp_add(long long a, long long b, long long *r) nogil


cdef int _rank_i64(long long *a, int m, int n) nogil:
    """Bareiss rank on a row-major m x n buffer; -1 on overflow."""
    cdef int r = 0, c, piv, i, k
    cdef long long prev = 1, p, f, t1, t2, tmp
    for c in range(n):
        if r == m:
            break
        piv = r
        while piv < m and a[piv * n + c] == 0:
            piv += 1
        if piv == m:
            continue
        if piv != r:
            for k in range(n):
                tmp = a[r * n + k]
                a[r * n + k] = a[piv * n + k]
                a[piv * n + k] = tmp
        p = a[r * n + c]
        for i in range(r + 1, m):
            f = a[i * n + c]
            for k in range(c + 1, n):
                if pp_mul(a[i * n + k], p, &t1):
                    return -1
                if pp_mul(f, a[r * n + k], &t2):
                    return -1
                if pp_sub(t1, t2, &t1):
                    return -1
                a[i * n + k] = t1 // prev
            a[i * n + c] = 0
        prev = p
        r += 1
    return r


cdef long long *_load(list rows, int ncols, int *ok):
    cdef int m = len(rows), i, k
    cdef long long *buf = <long long *> malloc(max(m * ncols, 1) * sizeof(long long))
    ok[0] = 1
    try:
        for i in range(m):
            row = rows[i]
            for k in range(ncols):
                buf[i * ncols + k] = row[k]
    except OverflowError:
        ok[0] = 0
    return buf


def rank(rows, int ncols):
    cdef list lrows = list(rows)
    cdef int m = len(lrows), ok, res
    if m == 0 or ncols == 0:
        return 0
    cdef long long *buf = _load(lrows, ncols, &ok)
    try:
        if ok:
            res = _rank_i64(buf, m, ncols)
            if res >= 0:
                return res
    finally:
        free(buf)
    return _py.rank(lrows, ncols)


cdef inline object _dot(row, vec, int n):
    cdef long long acc = 0, x, y, t
    cdef int k
    try:
        for k in range(n):
            x = row[k]
            y = vec[k]
            if pp_mul(x, y, &t) or pp_add(acc, t, &acc):
                raise OverflowError
        return acc
    except OverflowError:
        return sum([row[k] * vec[k] for k in range(n)])


def dots(rows, vec):
    cdef int n = len(vec)
    return [_dot(row, vec, n) for row in rows]


def zero_set(rows, vec):
    cdef int n = len(vec)
    return [i for i, row in enumerate(rows) if _dot(row, vec, n) == 0]


def zero_rank(rows, vec, int ncols):
    cdef int n = len(vec)
    return rank([row for row in rows if _dot(row, vec, n) == 0], ncols)


def rank_subset(rows, mask, int ncols):
    cdef list sub = []
    cdef int i = 0
    while mask:
        if mask & 1:
            sub.append(rows[i])
        mask >>= 1
        i += 1
    return rank(sub, ncols)
