"""Pure-Python integer kernels.

These are the reference implementations of the hot loops (fraction-free
rank, row/vector products, zero-set rank).  The compiled module
``_ckernels`` exposes the same functions; ``polyproj.kernels`` picks one at
import time.  All inputs are sequences of Python ints.
"""


def rank(rows, ncols):
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in rows]
    m = len(a)
    r = 0
    prev = 1
    for c in range(ncols):
        if r == m:
            break
        piv = r
        while piv < m and a[piv][c] == 0:
            piv += 1
        if piv == m:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        pr = a[r]
        p = pr[c]
        for i in range(r + 1, m):
            ai = a[i]
            f = ai[c]
            if f:
                for k in range(c + 1, ncols):
                    ai[k] = (ai[k] * p - f * pr[k]) // prev
            else:
                for k in range(c + 1, ncols):
                    if ai[k]:
                        ai[k] = ai[k] * p // prev
            ai[c] = 0
        prev = p
        r += 1
    return r


def dots(rows, vec):
    """Return ``[row . vec for row in rows]``."""
    return [sum(x * y for x, y in zip(row, vec)) for row in rows]


def zero_set(rows, vec):
    """Indices ``i`` with ``rows[i] . vec == 0``."""
    return [i for i, row in enumerate(rows)
            if sum(x * y for x, y in zip(row, vec)) == 0]


def zero_rank(rows, vec, ncols):
    """Rank of the rows of ``rows`` that are orthogonal to ``vec``."""
    tight = [row for row in rows
             if sum(x * y for x, y in zip(row, vec)) == 0]
    return rank(tight, ncols)


def rank_subset(rows, mask, ncols):
    """Rank of the rows selected by the bit mask ``mask``."""
    sub = []
    i = 0
    while mask:
        if mask & 1:
            sub.append(rows[i])
        mask >>= 1
        i += 1
    return rank(sub, ncols)
