"""Parametric linear programs ``z(theta) = min c.x  s.t.  A x <= B theta + b``.

The objective is rotated onto the last coordinate by a unimodular change of
variables, every other variable is eliminated with ``minrep``, and the
lower bounds on the remaining objective coordinate give the pieces of the
optimal value function.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from polyproj.dd import dd_method
from polyproj.errors import (DimensionMismatch, NotPointed, PreconditionError, Unbounded,
                             ZeroObjective)
from polyproj.linalg import as_rat, determinant, format_rat, matmul
from polyproj.minrep import minimal_input, minimal_projected_representation
from polyproj.polyhedron import (HSystem, Inequality, default_var_names, format_linear,
                                 homogenize, is_pointed_fulldim_candidate, normalize_system)


@dataclass(frozen=True)
class Affine:
    """``coeffs . theta + const``."""

    coeffs: tuple
    const: Fraction

    def __call__(self, theta):
        return sum(a * t for a, t in zip(self.coeffs, theta)) + self.const

    def scale(self, k):
        return Affine(tuple(k * a for a in self.coeffs), k * self.const)

    def format(self, names):
        lin = format_linear(self.coeffs, names)
        if lin == "0":
            return format_rat(self.const)
        if self.const == 0:
            return lin
        sign = "-" if self.const < 0 else "+"
        return f"{lin} {sign} {format_rat(abs(self.const))}"


@dataclass(frozen=True)
class PlpProblem:
    A: tuple
    B: tuple
    b: tuple
    c: tuple
    x_names: tuple = None
    theta_names: tuple = None

    def __post_init__(self):
        A = tuple(tuple(as_rat(x) for x in row) for row in self.A)
        B = tuple(tuple(as_rat(x) for x in row) for row in self.B)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "b", tuple(as_rat(x) for x in self.b))
        object.__setattr__(self, "c", tuple(as_rat(x) for x in self.c))
        m = len(A)
        if len(B) != m or len(self.b) != m:
            raise DimensionMismatch("A, B and b must have the same number of rows")
        n = len(self.c)
        p = len(B[0]) if B else 0
        if any(len(r) != n for r in A) or any(len(r) != p for r in B):
            raise DimensionMismatch("ragged constraint matrices")
        if not any(self.c):
            raise ZeroObjective("objective vector is zero")
        if self.x_names is None:
            object.__setattr__(self, "x_names", default_var_names(n))
        if self.theta_names is None:
            object.__setattr__(self, "theta_names", default_var_names(p, "theta"))

    @property
    def n(self):
        return len(self.c)

    @property
    def p(self):
        return len(self.theta_names)

    def system(self):
        """Constraints over ``(x, theta)`` as ``A x - B theta <= b``."""
        rows = [list(a) + [-x for x in bb] + [r] for a, bb, r in zip(self.A, self.B, self.b)]
        return HSystem.from_rows(self.x_names + self.theta_names, rows)


@dataclass(frozen=True)
class PlpPiece:
    region: HSystem
    value: Affine
    lower_bound: Affine


@dataclass(frozen=True)
class PlpSolution:
    pieces: tuple
    global_region: HSystem
    projection: HSystem
    projected_rep: HSystem
    U: tuple
    g: Fraction

    def evaluate(self, theta):
        """Optimal value at ``theta``: ``g`` times the largest lower bound."""
        return max(p.value(theta) for p in self.pieces)


def _egcd(a, b):
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a - (a // b) * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def unimodular_reduce(c):
    """Integer ``U`` with ``|det U| = 1`` and ``c U = (0, ..., 0, g)``, ``g = gcd(c) > 0``.

    Each non-final entry is folded into the last one with a 2x2 unimodular
    column operation built from the extended gcd.
    """
    c = [as_rat(x) for x in c]
    if any(x.denominator != 1 for x in c):
        raise PreconditionError("objective must have integer entries")
    c = [int(x) for x in c]
    if not any(c):
        raise ZeroObjective("objective vector is zero")
    n = len(c)
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    r = list(c)
    last = n - 1
    for j in range(n - 1):
        a, b = r[j], r[last]
        if a == 0:
            continue
        d, x, y = _egcd(a, b)
        if d < 0:
            d, x, y = -d, -x, -y
        # columns (j, last) <- (b/d * col_j - a/d * col_last, x * col_j + y * col_last)
        p, q = b // d, -a // d
        for row in U:
            cj, cl = row[j], row[last]
            row[j], row[last] = p * cj + q * cl, x * cj + y * cl
        r[j], r[last] = 0, d
    if r[last] < 0:
        for row in U:
            row[last] = -row[last]
        r[last] = -r[last]
    return U, r[last]


def verify_unimodular(c, U, g):
    """Whether ``U`` is integral with ``|det U| = 1`` and ``c U = (0, ..., 0, g)``, ``g = gcd(c)``."""
    n = len(c)
    if len(U) != n or any(len(r) != n for r in U):
        return False
    if any(as_rat(x).denominator != 1 for r in U for x in r):
        return False
    cu = [sum(as_rat(c[i]) * U[i][j] for i in range(n)) for j in range(n)]
    expected = [0] * (n - 1) + [g]
    g_ok = g > 0 and all(as_rat(x).denominator == 1 for x in c) and g == reduce(gcd, map(int, c), 0)
    return cu == expected and g_ok and abs(determinant(U)) == 1


def _bound_from_row(q, p):
    """Rewrite ``a_t t + a . theta <= c`` as ``t >= / <= L(theta)``; returns L."""
    at = Fraction(q.coeffs[0])
    coeffs = tuple(-Fraction(a) / at for a in q.coeffs[1:])
    return Affine(coeffs, Fraction(q.rhs) / at)


def _is_nonempty(s):
    rays = dd_method(homogenize(s).base).rays
    return any(r[-1] > 0 for r in rays)


def _tidy_region(region):
    region = normalize_system(region)
    if region.n and region.m and is_pointed_fulldim_candidate(region) and _is_nonempty(region):
        return minimal_input(region)
    return region


def projected_rows(pr, k):
    """Rows of every ProjRep level from ``k`` on, padded to the level-``k`` variables."""
    names = pr.levels[k].var_names
    seen, out = set(), []
    for lev in pr.levels[k:]:
        pad = len(names) - lev.n
        for q in lev.ineqs:
            full = Inequality((0,) * pad + tuple(q.coeffs), q.rhs)
            if full.row not in seen:
                seen.add(full.row)
                out.append(full)
    return HSystem(names, tuple(out))


def solve_plp(problem):
    c = problem.c
    scale = 1
    for x in c:
        scale = lcm(scale, x.denominator)
    U, g = unimodular_reduce([x * scale for x in c])
    n, p = problem.n, problem.p
    AU = matmul([list(r) for r in problem.A], U)
    t_names = tuple(f"t{k + 1}" for k in range(n))
    rows = [list(a) + [-x for x in bb] + [r] for a, bb, r in zip(AU, problem.B, problem.b)]
    system = HSystem.from_rows(t_names + problem.theta_names, rows)
    if not is_pointed_fulldim_candidate(normalize_system(system)):
        raise NotPointed("constraint system over (x, theta) is not pointed")
    pr = minimal_projected_representation(system)
    phi = projected_rows(pr, n - 1)
    theta_names = problem.theta_names
    lowers = [_bound_from_row(q, p) for q in phi.ineqs if q.coeffs[0] < 0]
    uppers = [_bound_from_row(q, p) for q in phi.ineqs if q.coeffs[0] > 0]
    free = [Inequality(q.coeffs[1:], q.rhs) for q in phi.ineqs if q.coeffs[0] == 0]
    if not lowers:
        raise Unbounded("the objective has no lower bound")
    gval = Fraction(g, scale)
    pieces = []
    for i, L in enumerate(lowers):
        rows = list(free)
        for j, other in enumerate(lowers):
            if j != i:
                rows.append(Inequality(tuple(a - b for a, b in zip(other.coeffs, L.coeffs)),
                                       L.const - other.const))
        for up in uppers:
            rows.append(Inequality(tuple(a - b for a, b in zip(L.coeffs, up.coeffs)),
                                   up.const - L.const))
        region = _tidy_region(HSystem(theta_names, rows))
        pieces.append(PlpPiece(region, L.scale(gval), L))
    return PlpSolution(tuple(pieces), pr.levels[n], pr.levels[n - 1], phi,
                       tuple(map(tuple, U)), gval)
