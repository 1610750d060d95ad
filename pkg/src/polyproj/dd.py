"""Extreme rays of pointed cones ``{x | A x <= 0}`` by the double description method."""

import logging
from dataclasses import dataclass
from itertools import combinations

from polyproj import kernels
from polyproj.errors import DimensionMismatch, NotInCone, NotPointed, RankMismatch
from polyproj.linalg import independent_rows, inverse, null_space_1d, primitive_normalize
from polyproj.polyhedron import HSystem, Inequality, default_var_names

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class DDPair:
    rep: HSystem
    rays: tuple


def _cone_rows(cone):
    if not cone.is_cone:
        raise ValueError("expected a cone (all right-hand sides zero)")
    return [list(q.coeffs) for q in cone.ineqs]


def _check_ray(cone, rows, r):
    if len(r) != cone.n:
        raise DimensionMismatch(f"ray has length {len(r)}, expected {cone.n}")
    if not any(r):
        raise NotInCone("zero vector is not a ray")
    if any(d > 0 for d in kernels.dots(rows, r)):
        raise NotInCone(f"{tuple(r)} violates the cone")


def extreme_ray_test(cone, r):
    """Algebraic test: rank of the rows tight at ``r`` equals ``n - 1``."""
    rows = _cone_rows(cone)
    r = primitive_normalize(r)
    _check_ray(cone, rows, r)
    return kernels.zero_rank(rows, r, cone.n) == cone.n - 1


def adjacency_test(cone, r1, r2):
    """Two extreme rays are adjacent iff their common tight rows have rank ``n - 2``."""
    rows = _cone_rows(cone)
    r1 = primitive_normalize(r1)
    r2 = primitive_normalize(r2)
    _check_ray(cone, rows, r1)
    _check_ray(cone, rows, r2)
    n = cone.n
    for r in (r1, r2):
        if kernels.zero_rank(rows, r, n) != n - 1:
            raise NotInCone(f"{r} is not an extreme ray")
    if r1 == r2:
        raise ValueError("rays are positive multiples of each other")
    z1 = set(kernels.zero_set(rows, r1))
    common = [rows[i] for i in kernels.zero_set(rows, r2) if i in z1]
    return kernels.rank(common, n) == n - 2


def dd_method(cone):
    """Enumerate the extreme rays of a pointed cone.

    Starts from the first ``n`` linearly independent rows (rays are the
    columns of ``-(A_K)^{-1}``) and inserts the remaining rows in listed
    order.  Rays on the feasible side of each new row are kept; adjacent
    pairs straddling it are combined.
    """
    rows = _cone_rows(cone)
    n = cone.n
    basis = independent_rows(rows, n)
    if len(basis) < n:
        raise NotPointed(f"cone has rank {len(basis)} < {n}")
    inv = inverse([rows[i] for i in basis])
    rays = []
    zsets = []
    all_basis = 0
    for i in basis:
        all_basis |= 1 << i
    for j, i in enumerate(basis):
        rays.append(primitive_normalize([-inv[k][j] for k in range(n)]))
        zsets.append(all_basis & ~(1 << i))
    basis_set = set(basis)
    for i, a in enumerate(rows):
        if i in basis_set:
            continue
        d = kernels.dots([list(r) for r in rays], a) if rays else []
        bit = 1 << i
        pos = [j for j, x in enumerate(d) if x > 0]
        neg = [j for j, x in enumerate(d) if x < 0]
        new_rays = []
        new_z = []
        for j, x in enumerate(d):
            if x <= 0:
                new_rays.append(rays[j])
                new_z.append(zsets[j] | bit if x == 0 else zsets[j])
        seen = set(new_rays)
        for jp in pos:
            for jn in neg:
                common = zsets[jp] & zsets[jn]
                if n < 2 or common.bit_count() < n - 2:
                    continue
                if kernels.rank_subset(rows, common, n) != n - 2:
                    continue
                dp, dn = d[jp], d[jn]
                r = primitive_normalize(
                    [dp * y - dn * x for x, y in zip(rays[jp], rays[jn])])
                if r in seen:
                    continue
                seen.add(r)
                new_rays.append(r)
                new_z.append(common | bit)
        rays, zsets = new_rays, new_z
        log.debug("dd: row %d -> %d rays", i, len(rays))
    return DDPair(cone, tuple(rays))


def brute_force_rays(cone):
    """Independent oracle: null spaces of all rank-(n-1) row subsets."""
    rows = _cone_rows(cone)
    n = cone.n
    if kernels.rank(rows, n) < n:
        raise NotPointed("cone is not pointed")
    found = []
    seen = set()
    for subset in combinations(range(len(rows)), n - 1):
        sub = [rows[i] for i in subset]
        try:
            r = null_space_1d(sub, n)
        except RankMismatch:
            continue
        for cand in (r, tuple(-x for x in r)):
            if cand in seen:
                continue
            if any(x > 0 for x in kernels.dots(rows, cand)):
                continue
            if kernels.zero_rank(rows, cand, n) == n - 1:
                seen.add(cand)
                found.append(cand)
    return found


def rays_to_facets(rays, var_names=None):
    """Minimal H-representation of ``cone(rays)`` via its polar cone."""
    rays = [primitive_normalize(r) for r in rays]
    if not rays:
        raise NotPointed("no rays given")
    n = len(rays[0])
    if var_names is None:
        var_names = default_var_names(n)
    polar = HSystem(var_names, [Inequality(r, 0) for r in dict.fromkeys(rays)])
    normals = dd_method(polar).rays
    return HSystem(var_names, [Inequality(y, 0) for y in normals])


def cone_rays(cone):
    return list(dd_method(cone).rays)
