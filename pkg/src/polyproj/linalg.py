"""Exact rational linear algebra on dense row-major matrices.

Scalars are ``int`` or ``fractions.Fraction``; matrices are lists of rows.
Elimination is fraction-free (Bareiss) with first-nonzero pivoting, so
results are deterministic.
"""

from fractions import Fraction
from math import gcd, lcm

from polyproj import kernels
from polyproj.errors import DimensionMismatch, RankMismatch, SingularMatrix


def as_rat(x):
    """Convert an int, Fraction or ``"p/q"`` string to a reduced Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as a rational")


def format_rat(x):
    x = as_rat(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def integer_row(row):
    """Scale a rational row by the lcm of its denominators (a positive factor)."""
    den = 1
    for x in row:
        if isinstance(x, Fraction) and x.denominator != 1:
            den = lcm(den, x.denominator)
    if den == 1:
        return [int(x) for x in row]
    return [int(x * den) for x in row]


def primitive_normalize(v):
    """Clear denominators and divide by the gcd; sign is preserved.

    >>> primitive_normalize([Fraction(2, 3), Fraction(4, 3)])
    (1, 2)
    """
    ints = integer_row(v)
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g <= 1:
        return tuple(ints)
    return tuple(x // g for x in ints)


def rank(m, ncols=None):
    """Exact rank over the rationals."""
    rows = [integer_row(r) for r in m]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    return kernels.rank(rows, ncols)


def matmul(a, b):
    if a and len(a[0]) != len(b):
        raise DimensionMismatch("inner dimensions differ")
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def vecmat(v, a):
    """Row vector times matrix, ``v^t a``."""
    ncols = len(a[0]) if a else 0
    return [sum(v[i] * a[i][j] for i in range(len(a))) for j in range(ncols)]


def transpose(a):
    return [list(col) for col in zip(*a)]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def inverse(m):
    """Inverse of a square nonsingular rational matrix.

    Fraction-free Gauss-Jordan on the integer-scaled augmented matrix
    ``[D m | D]`` where ``D`` clears each row's denominators.
    """
    n = len(m)
    if any(len(r) != n for r in m):
        raise DimensionMismatch("inverse needs a square matrix")
    aug = []
    for i, row in enumerate(m):
        scaled = integer_row(list(row) + [Fraction(int(i == j)) for j in range(n)])
        aug.append(scaled)
    prev = 1
    for k in range(n):
        piv = k
        while piv < n and aug[piv][k] == 0:
            piv += 1
        if piv == n:
            raise SingularMatrix("matrix is singular")
        if piv != k:
            aug[k], aug[piv] = aug[piv], aug[k]
        rk = aug[k]
        p = rk[k]
        for i in range(n):
            if i == k:
                continue
            ai = aug[i]
            f = ai[k]
            for j in range(2 * n):
                if j != k:
                    ai[j] = (p * ai[j] - f * rk[j]) // prev
            ai[k] = 0
        prev = p
    return [[Fraction(aug[i][n + j], aug[i][i]) for j in range(n)]
            for i in range(n)]


def rref(m):
    """Reduced row echelon form over Fractions; returns (rows, pivot_cols)."""
    a = [[as_rat(x) for x in row] for row in m]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = r
        while piv < nrows and a[piv][c] == 0:
            piv += 1
        if piv == nrows:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def solve(m, b):
    """Solve the square nonsingular system ``m x = b`` exactly."""
    inv = inverse(m)
    return matvec(inv, [as_rat(x) for x in b])


def null_space_1d(m, ncols=None):
    """Primitive integer generator of a one-dimensional null space.

    The sign is fixed so the first nonzero entry is positive.
    """
    if ncols is None:
        if not m:
            raise DimensionMismatch("column count unknown for empty matrix")
        ncols = len(m[0])
    rows, pivots = rref(m) if m else ([], [])
    if len(pivots) != ncols - 1:
        raise RankMismatch(f"rank {len(pivots)} != {ncols - 1}")
    free = next(c for c in range(ncols) if c not in pivots)
    vec = [Fraction(0)] * ncols
    vec[free] = Fraction(1)
    for row, pc in zip(rows, pivots):
        vec[pc] = -row[free]
    r = primitive_normalize(vec)
    lead = next(x for x in r if x != 0)
    if lead < 0:
        r = tuple(-x for x in r)
    return r


def independent_rows(m, ncols=None, limit=None):
    """Indices of a maximal set of linearly independent rows, greedily in order."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    if limit is None:
        limit = ncols
    chosen = []
    chosen_rows = []
    for i, row in enumerate(m):
        if len(chosen) == limit:
            break
        cand = chosen_rows + [integer_row(row)]
        if kernels.rank(cand, ncols) == len(cand):
            chosen.append(i)
            chosen_rows = cand
    return chosen


def determinant(m):
    """Exact determinant of a square rational matrix."""
    n = len(m)
    a = [integer_row(r) for r in m]
    scale = Fraction(1)
    for orig, row in zip(m, a):
        nz = next((j for j, x in enumerate(orig) if x != 0), None)
        if nz is not None:
            scale *= as_rat(orig[nz]) / row[nz]
    sign = 1
    prev = 1
    for k in range(n):
        piv = k
        while piv < n and a[piv][k] == 0:
            piv += 1
        if piv == n:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        p = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * p - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = p
    return sign * scale * (a[n - 1][n - 1] if n else 1)
