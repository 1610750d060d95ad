"""Redundancy test cones.

For ``Q = {y | A y <= c}`` (pointed, full-dimensional) the initial test cone
lives in coordinates ``(v_1..v_n, v_0)``; its extreme rays other than
``(0,...,0,1)`` are exactly the facet rows ``(a, c)`` of ``Q``.  Zeroing the
``v`` coordinates of eliminated variables gives the test cone of the
corresponding projection, so one construction serves every FME level.
"""

import logging
import os
from dataclasses import dataclass

from polyproj import kernels
from polyproj.dd import dd_method
from polyproj.errors import (AlreadyEliminated, DimensionMismatch, InternalContradiction,
                             NotInCone, NotPointed, StaleVariable, TrivialInequality)
from polyproj.fme import block_eliminate
from polyproj.linalg import independent_rows, inverse, matmul, matvec, primitive_normalize
from polyproj.polyhedron import HSystem, Inequality, fresh_name, normalize_system

log = logging.getLogger(__name__)

CHECK_MEMBERSHIP = os.environ.get("POLYPROJ_LOG", "").lower() == "debug"


@dataclass(frozen=True)
class TestCone:
    """``{(v, v0) | M (v, v0) <= 0}`` with ``v`` restricted to ``active``."""

    __test__ = False  # not a pytest class

    M: tuple
    active: tuple
    n_total: int

    @property
    def dim(self):
        return len(self.active) + 1

    def system(self):
        """The cone as an HSystem over ``(v_active..., v0)``."""
        cols = list(self.active) + [self.n_total]
        names = tuple(f"v{j + 1}" for j in self.active) + ("v0",)
        return normalize_system(HSystem(names, [Inequality(tuple(r[c] for c in cols), 0)
                                                for r in self.M]))

    def embed(self, ray):
        """Map a ray over ``(v_active..., v0)`` to full ``(v_1..v_n, v0)`` coordinates."""
        full = [0] * (self.n_total + 1)
        for j, x in zip(self.active, ray[:-1]):
            full[j] = x
        full[-1] = ray[-1]
        return tuple(full)


@dataclass(frozen=True)
class SubsumptionCone:
    system: HSystem


def _clean_rows(rows):
    seen = {}
    for r in rows:
        r = primitive_normalize(r)
        if any(r):
            seen.setdefault(r, None)
    return tuple(seen)


def build_a0(s):
    """Return ``(A0, row_perm)`` with ``A0 = [A_perm | e_{n+1} .. e_m]``.

    ``row_perm`` lists original row indices; its first ``n`` rows are the
    first linearly independent rows of ``A`` in listed order.
    """
    n, m = s.n, s.m
    A = s.matrix()
    basis = independent_rows(A, n)
    if len(basis) < n:
        raise NotPointed(f"coefficient matrix has rank {len(basis)} < {n}")
    bset = set(basis)
    perm = basis + [i for i in range(m) if i not in bset]
    A0 = []
    for pos, i in enumerate(perm):
        ext = [int(pos == k) for k in range(n, m)]
        A0.append(list(A[i]) + ext)
    return A0, perm


def _lifted_data(s):
    """Blocks of ``A0^{-1}`` and ``A0^{-1} c`` needed by the reduced cone."""
    n = s.n
    _, perm = build_a0(s)
    A = s.matrix()
    c = s.rhs()
    A1 = [A[i] for i in perm[:n]]
    A2 = [A[i] for i in perm[n:]]
    c1 = [c[i] for i in perm[:n]]
    c2 = [c[i] for i in perm[n:]]
    A1inv = inverse(A1)
    F = matmul(A2, A1inv) if A2 else []  # A2 A1^{-1}; E = -F^t
    g = [ck - sum(f * x for f, x in zip(frow, c1)) for ck, frow in zip(c2, F)]
    return A1inv, F, g, c1


def reduced_projection_cone(s):
    """The cone ``C'`` over ``y' = (y_1..y_n, y_0)``.

    Rows: ``y' >= 0`` and ``F_k . y_v + g_k y_0 >= 0`` for each non-basis
    row ``k``; the latter are the back-substituted nonnegativity
    constraints of the eliminated multipliers.
    """
    n = s.n
    _, F, g, _ = _lifted_data(s)
    rows = [[-x for x in frow] + [-gk] for frow, gk in zip(F, g)]
    rows += [[-int(t == k) for t in range(n + 1)] for k in range(n + 1)]
    names = tuple(f"y{k + 1}" for k in range(n)) + ("y0",)
    return HSystem(names, [Inequality(tuple(r), 0) for r in rows])


def initial_test_cone(s):
    """Representation of the initial redundancy test cone.

    Built from the extreme rays of the reduced projection cone ``C'``; each
    ray ``(y_v, y_0)`` yields the row ``(A1^{-1}(y_0 c1 - y_v), -y_0)``.
    """
    s = normalize_system(s)
    n = s.n
    A1inv, F, g, c1 = _lifted_data(s)
    cprime = normalize_system(reduced_projection_cone(s))
    rays = dd_method(cprime).rays
    rows = []
    for y in rays:
        yv, y0 = y[:n], y[n]
        for frow, gk in zip(F, g):
            if sum(f * x for f, x in zip(frow, yv)) + gk * y0 < 0:
                raise InternalContradiction(f"negative multiplier recovered from {y}")
        rhs_part = [y0 * ck - yk for ck, yk in zip(c1, yv)]
        v = matvec(A1inv, rhs_part)
        rows.append(list(v) + [-y0])
    M = _clean_rows(rows)
    log.debug("initial test cone: %d rays of C', %d rows", len(rays), len(M))
    return TestCone(M, tuple(range(n)), n)


def restrict(tc, j):
    """Zero the ``v_j`` column and drop ``j`` from the active variables."""
    if j not in tc.active:
        raise AlreadyEliminated(f"variable {j} is not active")
    rows = [r[:j] + (0,) + r[j + 1:] for r in tc.M]
    return TestCone(_clean_rows(rows), tuple(a for a in tc.active if a != j), tc.n_total)


def redundancy_test(tc, ineq, check=None):
    """True iff ``ineq`` is redundant, i.e. ``(a, c)`` is not an extreme ray.

    ``ineq`` has full width ``n_total``; eliminated coordinates must be
    zero.  With ``check`` (default: debug logging) membership ``M (a,c) <= 0``
    is verified and NotInCone raised otherwise.
    """
    if ineq.n != tc.n_total:
        raise DimensionMismatch(f"inequality has {ineq.n} coefficients, expected {tc.n_total}")
    if ineq.is_trivial:
        raise TrivialInequality("0 <= c carries no information")
    active = set(tc.active)
    for j, a in enumerate(ineq.coeffs):
        if a and j not in active:
            raise StaleVariable(f"variable {j} has been eliminated")
    vec = ineq.row
    if check is None:
        check = CHECK_MEMBERSHIP
    if check and any(x > 0 for x in kernels.dots(tc.M, vec)):
        raise NotInCone(f"{ineq} is not implied by the system")
    return kernels.zero_rank(tc.M, vec, tc.n_total + 1) != len(tc.active)


def is_implied(tc, ineq):
    """Whether ``ineq`` lies in the test cone (is valid for the projection)."""
    return all(x <= 0 for x in kernels.dots(tc.M, ineq.row))


def build_w0_direct(s, eliminated):
    """The lifted cone ``W^0`` for eliminating the variables in ``eliminated``.

    Variables are ``(v_u (kept), w_u (m - q), v_u0)``.  Equalities are
    written as pairs of inequalities.
    """
    s = normalize_system(s)
    n, m = s.n, s.m
    eliminated = set(eliminated)
    kept = [j for j in range(n) if j not in eliminated]
    q = len(kept)
    A = s.matrix()
    B = [[row[j] for j in kept] for row in A]
    basis = independent_rows(B, q)
    if len(basis) < q:
        raise NotPointed("kept columns are rank deficient")
    bset = set(basis)
    perm = basis + [i for i in range(m) if i not in bset]
    B0 = [B[i] + [int(pos == k) for k in range(q, m)] for pos, i in enumerate(perm)]
    B0inv = inverse(B0)
    Ap = [[A[i][j] for j in sorted(eliminated)] for i in perm]
    cp = [s.ineqs[i].rhs for i in perm]
    # row vector z = [v_u, w_u] B0^{-1}; constraints are linear in (v_u, w_u)
    coeff_of = lambda col: [sum(B0inv[k][i] * col[i] for i in range(m)) for k in range(m)]
    rows = []
    for jj in range(len(eliminated)):
        e = coeff_of([Ap[i][jj] for i in range(m)])
        rows.append(e + [0])
        rows.append([-x for x in e] + [0])
    rows.append(coeff_of(cp) + [-1])
    for i in range(m):
        rows.append([-B0inv[k][i] for k in range(m)] + [0])
    names = ([f"v{kept[k] + 1}" for k in range(q)] + [f"w{k + 1}" for k in range(m - q)])
    names.append(fresh_name("v0", set(names)))
    return HSystem(tuple(names), [Inequality(tuple(r), 0) for r in rows])


def subsumption_cone(s):
    """Project ``{(lam, alpha, beta) | lam^t A = alpha^t, lam^t c <= beta, lam >= 0}``
    onto ``(alpha, beta)``."""
    s = normalize_system(s)
    n, m = s.n, s.m
    A = s.matrix()
    c = s.rhs()
    width = m + n + 1
    rows = []
    for j in range(n):
        r = [A[i][j] for i in range(m)] + [-int(k == j) for k in range(n)] + [0]
        rows.append(r)
        rows.append([-x for x in r])
    rows.append(list(c) + [0] * n + [-1])
    for i in range(m):
        rows.append([-int(k == i) for k in range(width)])
    names = (tuple(f"lam{i + 1}" for i in range(m)) + tuple(f"alpha{j + 1}" for j in range(n))
             + ("beta",))
    T = HSystem(names, [Inequality(tuple(r), 0) for r in rows])
    return SubsumptionCone(block_eliminate(T, range(m)))
