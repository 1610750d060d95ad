"""Instance generators and LP-free oracles for property tests and acceptance.

The oracles work on the primal side (vertex/ray enumeration of the
homogenized cone by double description) and share no code with the test
cone machinery in ``balas``.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from polyproj import kernels
from polyproj.dd import dd_method, rays_to_facets
from polyproj.errors import NotPointed
from polyproj.fme import eliminate_one
from polyproj.linalg import primitive_normalize
from polyproj.polyhedron import (HSystem, default_var_names, homogenize,
                                 is_pointed_fulldim_candidate, normalize_system)


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    params: tuple

    def __post_init__(self):
        if self.kind == "cyclic":
            d, v = self.params
            if not v > d >= 2:
                raise ValueError("cyclic polytope needs v > d >= 2")
        elif self.kind == "random":
            n, m = self.params[:2]
            if m < n + 1:
                raise ValueError("random instance needs m >= n + 1")
        elif self.kind != "simplex":
            raise ValueError(f"unknown generator {self.kind!r}")

    def build(self):
        return {"simplex": gen_simplex, "cyclic": gen_cyclic,
                "random": gen_random}[self.kind](*self.params)


def gen_simplex(n):
    """``{x >= 0, sum(x) <= 1}`` in dimension ``n``."""
    if n < 1:
        raise ValueError("n must be positive")
    rows = [[-int(i == j) for j in range(n)] + [0] for i in range(n)]
    rows.append([1] * n + [1])
    return HSystem.from_rows(n, rows)


def gen_cyclic(d, v):
    """Cyclic polytope: convex hull of ``(t, t^2, ..., t^d)`` for ``t = 1..v``."""
    GeneratorSpec("cyclic", (d, v))
    rays = [tuple(t ** k for k in range(1, d + 1)) + (1,) for t in range(1, v + 1)]
    facets = rays_to_facets(rays)
    rows = [list(q.coeffs[:-1]) + [-q.coeffs[-1]] for q in facets.ineqs]
    return HSystem.from_rows(d, rows)


def gen_random(n, m, coeff_bits, seed):
    """Seeded bounded full-dimensional polytope; see ``random_instance``."""
    return random_instance(n, m, coeff_bits, seed)[0]


def random_instance(n, m, coeff_bits, seed):
    """Seeded bounded full-dimensional polytope with ``m`` rows in ``n`` variables.

    The first ``n + 1`` rows form a perturbed simplex (normals ``-k_i e_i``
    and a strictly positive vector), which positively spans the space and
    makes the polytope bounded.  Right-hand sides are translated so a random
    point is strictly interior; that point is returned alongside.
    """
    GeneratorSpec("random", (n, m))
    rng = random.Random(seed)
    hi = 2 ** coeff_bits
    normals = []
    for i in range(n):
        k = rng.randint(1, hi)
        normals.append([-k * int(i == j) for j in range(n)])
    normals.append([rng.randint(1, hi) for _ in range(n)])
    while len(normals) < m:
        row = [rng.randint(-hi, hi) for _ in range(n)]
        if any(row):
            normals.append(row)
    order = list(range(m))
    rng.shuffle(order)
    normals = [normals[i] for i in order]
    interior = [rng.randint(-hi, hi) for _ in range(n)]
    rows = []
    for a in normals:
        val = sum(x * y for x, y in zip(a, interior))
        rows.append(a + [val + rng.randint(1, hi)])
    return HSystem.from_rows(n, rows), tuple(interior)


def random_unbounded_instance(n, m, coeff_bits, seed):
    """Seeded pointed polyhedron whose characteristic cone is full-dimensional.

    Rows ``-k_i x_i <= c_i`` make it pointed; every other normal has a
    negative coordinate sum, so ``(1, ..., 1)`` is an interior recession
    direction.
    """
    GeneratorSpec("random", (n, m))
    rng = random.Random(seed)
    hi = 2 ** coeff_bits
    normals = [[-rng.randint(1, hi) * int(i == j) for j in range(n)] for i in range(n)]
    while len(normals) < m:
        row = [rng.randint(-hi, hi) for _ in range(n)]
        if sum(row) < 0:
            normals.append(row)
    rng.shuffle(normals)
    interior = [rng.randint(-hi, hi) for _ in range(n)]
    rows = []
    for a in normals:
        val = sum(x * y for x, y in zip(a, interior))
        rows.append(a + [val + rng.randint(1, hi)])
    return HSystem.from_rows(n, rows), tuple(interior)


def gen_random_cone(n, m, coeff_bits, seed):
    """Seeded pointed cone (rank ``n``) with ``m >= n`` rows."""
    rng = random.Random(seed)
    hi = 2 ** coeff_bits
    while True:
        rows = [[rng.randint(-hi, hi) for _ in range(n)] + [0] for _ in range(m)]
        s = normalize_system(HSystem.from_rows(n, rows))
        if is_pointed_fulldim_candidate(s):
            return s


def corpus(count, seed=0, max_n=5, max_m=12, coeff_bits=8, bounded=True):
    """Deterministic list of random pointed systems (n in 2..max_n).

    With ``bounded=False`` every system has a full-dimensional
    characteristic cone.
    """
    rng = random.Random(seed)
    make = random_instance if bounded else random_unbounded_instance
    out = []
    for _ in range(count):
        n = rng.randint(2, max_n)
        m = rng.randint(n + 1, max_m)
        bits = rng.randint(1, coeff_bits)
        out.append(make(n, m, bits, rng.randrange(2 ** 32))[0])
    return out


# ---------------------------------------------------------------- oracles

def homogenized_rays(s):
    """Extreme rays of HomCone(s) (vertices get last coordinate > 0)."""
    return list(dd_method(homogenize(normalize_system(s)).base).rays)


def implies(s, ineq, rays=None):
    """Whether every point of the nonempty pointed polyhedron ``s`` satisfies ``ineq``."""
    if rays is None:
        rays = homogenized_rays(s)
    h = ineq.coeffs + (-ineq.rhs,)
    return all(d <= 0 for d in kernels.dots(rays, h))


def is_redundant(s, i):
    """Row ``i`` is implied by the other rows of ``s``."""
    rest = s.with_ineqs(s.ineqs[:i] + s.ineqs[i + 1:])
    if not is_pointed_fulldim_candidate(rest):
        return False
    return implies(rest, s.ineqs[i])


def greedy_minrep(s):
    """Remove implied rows one at a time, re-testing after each removal."""
    s = normalize_system(s)
    changed = True
    while changed:
        changed = False
        for i in range(s.m):
            if is_redundant(s, i):
                s = s.with_ineqs(s.ineqs[:i] + s.ineqs[i + 1:])
                changed = True
                break
    return s


def oracle_minrep(s):
    """Minimal representation of a pointed full-dimensional polyhedron.

    Enumerates the rays of the homogenized cone once; a row is kept iff the
    rays on its hyperplane span a facet (rank ``n``).  The result is
    re-checked until it is a fixpoint.
    """
    s = normalize_system(s)
    if not is_pointed_fulldim_candidate(s):
        raise NotPointed("oracle needs a pointed polyhedron")
    while True:
        rays = [list(r) for r in homogenized_rays(s)]
        keep = []
        for q in s.ineqs:
            h = q.coeffs + (-q.rhs,)
            if kernels.zero_rank(rays, h, s.n + 1) == s.n:
                keep.append(q)
        if len(keep) == s.m:
            return s
        s = s.with_ineqs(keep)


def same_polyhedron(s1, s2):
    """Mutual containment of two nonempty pointed polyhedra."""
    if s1.n != s2.n:
        return False
    r1 = homogenized_rays(s1)
    r2 = homogenized_rays(s2)
    return (all(implies(s2, q, r2) for q in s1.ineqs)
            and all(implies(s1, q, r1) for q in s2.ineqs))


def same_cone(c1, c2):
    """Mutual containment of two pointed cones via their extreme rays."""
    if c1.n != c2.n:
        return False
    r1 = dd_method(normalize_system(c1)).rays
    r2 = dd_method(normalize_system(c2)).rays
    m1 = c1.matrix()
    m2 = c2.matrix()
    return (all(d <= 0 for r in r2 for d in kernels.dots(m1, r))
            and all(d <= 0 for r in r1 for d in kernels.dots(m2, r)))


def oracle_projection_levels(s):
    """Minimal representation of every level: prune, then one raw FME step."""
    levels = [oracle_minrep(s)]
    cur = levels[0]
    for _ in range(s.n):
        cur = eliminate_one(cur, 0).system
        if cur.n:
            cur = oracle_minrep(cur)
        levels.append(cur)
    return levels


def vertices(s):
    """Vertices of a nonempty pointed polyhedron, as Fraction tuples."""
    out = []
    for r in homogenized_rays(s):
        if r[-1] > 0:
            out.append(tuple(Fraction(x, r[-1]) for x in r[:-1]))
    return out


def recession_rays(s):
    return [r[:-1] for r in homogenized_rays(s) if r[-1] == 0]


def oracle_lp_min(s, c):
    """Exact ``min c.x`` over ``s`` by vertex enumeration; None if unbounded.

    ``s`` must be nonempty and pointed.
    """
    for r in recession_rays(s):
        if sum(a * b for a, b in zip(c, r)) < 0:
            return None
    vals = [sum(Fraction(a) * x for a, x in zip(c, v)) for v in vertices(s)]
    if not vals:
        raise ValueError("empty polyhedron")
    return min(vals)


def primitive_rows(s):
    return {primitive_normalize(q.row) for q in s.ineqs}


__all__ = ["GeneratorSpec", "gen_simplex", "gen_cyclic", "gen_random", "random_instance",
           "random_unbounded_instance", "gen_random_cone", "corpus", "oracle_minrep", "greedy_minrep", "same_polyhedron",
           "same_cone", "implies", "is_redundant", "oracle_projection_levels", "vertices",
           "oracle_lp_min", "homogenized_rays", "default_var_names"]
