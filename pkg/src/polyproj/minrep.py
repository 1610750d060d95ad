"""Minimal projected representations.

Levels are produced by Fourier-Motzkin steps whose output is filtered,
inequality by inequality, through the progressively restricted test cone.
"""

import logging
from dataclasses import dataclass

from polyproj.balas import initial_test_cone, redundancy_test, restrict
from polyproj.errors import IndexOutOfRange, NotPointed, TriviallyInfeasible
from polyproj.fme import combine
from polyproj.polyhedron import (HSystem, Inequality, is_pointed_fulldim_candidate,
                                 normalize_system, permute_vars)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProjRep:
    """Level ``k`` is the minimal representation of the projection onto
    ``order[k:]`` (level 0 is the minimized input, level ``n`` is empty)."""

    order: tuple
    levels: tuple

    def __len__(self):
        return len(self.levels)


def prepare_system(s):
    s = normalize_system(s)
    if not is_pointed_fulldim_candidate(s):
        raise NotPointed("the input polyhedron is not pointed (coefficient matrix rank < n)")
    return s


def check_feasible(tc):
    # (0,...,0,-1) lies in the test cone iff the system is infeasible (Farkas).
    if all(r[-1] >= 0 for r in tc.M):
        raise TriviallyInfeasible("the system has no solution")


def minimal_input(s):
    """Keep exactly the rows whose ``(a, c)`` is an extreme ray of the test cone."""
    s = prepare_system(s)
    tc = initial_test_cone(s)
    check_feasible(tc)
    return s.with_ineqs([q for q in s.ineqs if not redundancy_test(tc, q)])


def minimal_projected_representation(s, order=None):
    s = prepare_system(s)
    if order is not None:
        s = permute_vars(s, tuple(order))
    n = s.n
    tc = initial_test_cone(s)
    check_feasible(tc)
    current = [Inequality(q.coeffs, q.rhs, 0) for q in s.ineqs
               if not redundancy_test(tc, q)]
    levels = [HSystem(s.var_names, current)]
    log.info("level 0: %d of %d input rows kept", len(current), s.m)
    for i in range(n):
        tc = restrict(tc, i)
        pos = [q for q in current if q.coeffs[i] > 0]
        neg = [q for q in current if q.coeffs[i] < 0]
        candidates = [combine(p, q, i) for p in pos for q in neg]
        candidates += [q for q in current if q.coeffs[i] == 0]
        kept = []
        seen = set()
        tested = 0
        for cand in candidates:
            if cand.is_trivial:
                if cand.rhs < 0:
                    raise TriviallyInfeasible(f"contradiction 0 <= {cand.rhs} at level {i + 1}")
                continue
            if cand in seen:
                continue
            seen.add(cand)
            tested += 1
            if not redundancy_test(tc, cand):
                kept.append(Inequality(cand.coeffs, cand.rhs, i + 1))
        current = kept
        names = s.var_names[i + 1:]
        levels.append(HSystem(names, [Inequality(q.coeffs[i + 1:], q.rhs, q.level)
                                      for q in kept]))
        log.info("level %d (eliminated %s): %d candidates, %d tested, %d kept",
                 i + 1, s.var_names[i], len(candidates), tested, len(kept))
    return ProjRep(s.var_names, tuple(levels))


def extract_projection(pr, k):
    """Minimal representation of the projection onto ``pr.order[k:]``."""
    if not 0 <= k < len(pr.levels):
        raise IndexOutOfRange(f"level {k} not in 0..{len(pr.levels) - 1}")
    return pr.levels[k]
