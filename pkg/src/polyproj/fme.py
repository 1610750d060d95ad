"""Fourier-Motzkin elimination: single-variable steps and block elimination."""

from dataclasses import dataclass

from polyproj.dd import dd_method
from polyproj.errors import DimensionMismatch, NotPointed, PreconditionError, SignPrecondition
from polyproj.polyhedron import (HSystem, Inequality, is_pointed_fulldim_candidate,
                                 normalize_system)


@dataclass(frozen=True)
class FmeStepResult:
    system: HSystem
    combined_count: int


def combine(l1, l2, i):
    """Positive combination of ``l1`` (coefficient > 0 on var i) and ``l2`` (< 0).

    The result has a zero coefficient on variable ``i``; it keeps full width.
    """
    a = l1.coeffs[i]
    b = l2.coeffs[i]
    if a <= 0 or b >= 0:
        raise SignPrecondition(f"need coeff(l1) > 0 and coeff(l2) < 0, got {a}, {b}")
    coeffs = tuple(-b * x + a * y for x, y in zip(l1.coeffs, l2.coeffs))
    return Inequality(coeffs, -b * l1.rhs + a * l2.rhs)


def drop_var(q, i):
    return Inequality(q.coeffs[:i] + q.coeffs[i + 1:], q.rhs, q.level)


def eliminate_one(s, i):
    """One FME step on variable index ``i``; no redundancy removal."""
    if not 0 <= i < s.n:
        raise DimensionMismatch(f"variable index {i} out of range")
    pos = [q for q in s.ineqs if q.coeffs[i] > 0]
    neg = [q for q in s.ineqs if q.coeffs[i] < 0]
    out = [combine(p, q, i) for p in pos for q in neg]
    count = len(out)
    out.extend(q for q in s.ineqs if q.coeffs[i] == 0)
    names = s.var_names[:i] + s.var_names[i + 1:]
    reduced = HSystem(names, [drop_var(q, i) for q in out])
    return FmeStepResult(normalize_system(reduced), count)


def projection_cone(s, block):
    """``{y | y^t A_block = 0, y >= 0}`` as an inequality system over y."""
    m = s.m
    names = tuple(f"y{k + 1}" for k in range(m))
    rows = []
    for j in sorted(block):
        col = tuple(q.coeffs[j] for q in s.ineqs)
        rows.append(Inequality(col, 0))
        rows.append(Inequality(tuple(-x for x in col), 0))
    for k in range(m):
        rows.append(Inequality(tuple(-int(t == k) for t in range(m)), 0))
    return normalize_system(HSystem(names, rows))


def block_eliminate(s, block):
    """Project out the variables in ``block`` via the projection cone's rays.

    The output may contain redundant rows.
    """
    block = set(block)
    if not block:
        raise PreconditionError("block must be nonempty")
    if not block <= set(range(s.n)):
        raise DimensionMismatch(f"block {sorted(block)} out of range")
    if not is_pointed_fulldim_candidate(s):
        raise NotPointed("input system is not pointed")
    keep = [j for j in range(s.n) if j not in block]
    rays = dd_method(projection_cone(s, block)).rays
    out = []
    for y in rays:
        coeffs = tuple(sum(y[k] * s.ineqs[k].coeffs[j] for k in range(s.m)) for j in keep)
        rhs = sum(y[k] * s.ineqs[k].rhs for k in range(s.m))
        out.append(Inequality(coeffs, rhs))
    return normalize_system(HSystem(tuple(s.var_names[j] for j in keep), out))


def eliminate_sequence(s, count):
    """Raw FME of the first ``count`` variables, one at a time."""
    for _ in range(count):
        s = eliminate_one(s, 0).system
    return s
