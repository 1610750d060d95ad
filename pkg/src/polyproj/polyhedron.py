"""Inequality systems, cones, zero sets, homogenization, characteristic cones."""

from dataclasses import dataclass, field
from fractions import Fraction

from polyproj import kernels
from polyproj.errors import DimensionMismatch, TriviallyInfeasible
from polyproj.linalg import format_rat, primitive_normalize


@dataclass(frozen=True)
class Inequality:
    """``coeffs . y <= rhs``, stored as a primitive integer row.

    Any rational input is rescaled by a positive factor on construction, so
    two inequalities compare equal iff one is a positive multiple of the
    other.
    """

    coeffs: tuple
    rhs: int
    level: int = field(default=None, compare=False)

    def __post_init__(self):
        row = primitive_normalize(list(self.coeffs) + [self.rhs])
        object.__setattr__(self, "coeffs", row[:-1])
        object.__setattr__(self, "rhs", row[-1])

    @property
    def n(self):
        return len(self.coeffs)

    @property
    def is_trivial(self):
        return not any(self.coeffs)

    @property
    def row(self):
        return self.coeffs + (self.rhs,)

    def evaluate(self, point):
        return sum(a * x for a, x in zip(self.coeffs, point))

    def satisfied_by(self, point):
        return self.evaluate(point) <= self.rhs

    def format(self, var_names):
        return format_linear(self.coeffs, var_names) + f" <= {format_rat(self.rhs)}"


def format_linear(coeffs, var_names):
    terms = []
    for a, name in zip(coeffs, var_names):
        if a == 0:
            continue
        a = Fraction(a)
        mag = abs(a)
        sign = "-" if a < 0 else "+"
        body = name if mag == 1 else f"{format_rat(mag)}*{name}"
        terms.append((sign, body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def default_var_names(n, prefix="x"):
    return tuple(f"{prefix}{i + 1}" for i in range(n))


@dataclass(frozen=True)
class HSystem:
    """An ordered list of inequalities ``A y <= c`` over named variables."""

    var_names: tuple
    ineqs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "var_names", tuple(self.var_names))
        object.__setattr__(self, "ineqs", tuple(self.ineqs))
        if len(set(self.var_names)) != len(self.var_names):
            raise DimensionMismatch(f"duplicate variable names in {self.var_names}")
        n = len(self.var_names)
        for q in self.ineqs:
            if q.n != n:
                raise DimensionMismatch(
                    f"inequality has {q.n} coefficients, expected {n}")

    @classmethod
    def from_rows(cls, var_names, rows):
        """Build from rows ``(a_1, ..., a_n, c)``; ``var_names`` may be a count."""
        if isinstance(var_names, int):
            var_names = default_var_names(var_names)
        return cls(var_names, [Inequality(tuple(r[:-1]), r[-1]) for r in rows])

    @property
    def n(self):
        return len(self.var_names)

    @property
    def m(self):
        return len(self.ineqs)

    def matrix(self):
        return [list(q.coeffs) for q in self.ineqs]

    def rhs(self):
        return [q.rhs for q in self.ineqs]

    def rows(self):
        return [q.row for q in self.ineqs]

    def key_set(self):
        return frozenset(q.row for q in self.ineqs)

    @property
    def is_cone(self):
        return all(q.rhs == 0 for q in self.ineqs)

    def contains(self, point):
        return all(q.satisfied_by(point) for q in self.ineqs)

    def with_ineqs(self, ineqs):
        return HSystem(self.var_names, ineqs)

    def format(self):
        return "\n".join(q.format(self.var_names) for q in self.ineqs)


@dataclass(frozen=True)
class HomogenizedSystem:
    base: HSystem
    marker: int


def normalize_system(s):
    """Normalize rows, drop ``0 <= c`` (c >= 0) rows and exact duplicates.

    Raises TriviallyInfeasible on a row ``0 <= c`` with ``c < 0``.
    """
    seen = set()
    out = []
    for q in s.ineqs:
        if q.is_trivial:
            if q.rhs < 0:
                raise TriviallyInfeasible(f"contradiction 0 <= {q.rhs}")
            continue
        if q.row in seen:
            continue
        seen.add(q.row)
        out.append(q)
    return HSystem(s.var_names, out)


def zero_set(s, t):
    """Indices (0-based) of the rows of ``s`` whose left side vanishes at ``t``."""
    if len(t) != s.n:
        raise DimensionMismatch(f"point has length {len(t)}, expected {s.n}")
    return {i for i, q in enumerate(s.ineqs) if q.evaluate(t) == 0}


def fresh_name(base, taken):
    name = base
    while name in taken:
        name = "_" + name
    return name


def homogenize(p):
    """``a.y <= c`` becomes ``a.y - c*x_last <= 0``; ``-x_last <= 0`` is appended."""
    last = fresh_name("x_last", set(p.var_names))
    rows = [Inequality(q.coeffs + (-q.rhs,), 0) for q in p.ineqs]
    rows.append(Inequality((0,) * p.n + (-1,), 0))
    base = HSystem(p.var_names + (last,), rows)
    return HomogenizedSystem(base, len(rows) - 1)


def char_cone(p):
    return normalize_system(HSystem(p.var_names, [Inequality(q.coeffs, 0) for q in p.ineqs]))


def coefficient_rank(p):
    return kernels.rank([list(q.coeffs) for q in p.ineqs], p.n)


def is_pointed_fulldim_candidate(p):
    """True iff the coefficient matrix has full column rank (pointedness).

    Full-dimensionality is not decided here; it is the caller's obligation.
    """
    return coefficient_rank(p) == p.n


def permute_vars(s, order):
    """Reorder the columns of ``s`` so its variables appear in ``order``."""
    if sorted(order) != sorted(s.var_names) or len(order) != s.n:
        raise DimensionMismatch(f"{order} is not a permutation of {s.var_names}")
    idx = [s.var_names.index(v) for v in order]
    return HSystem(tuple(order),
                   [Inequality(tuple(q.coeffs[i] for i in idx), q.rhs, q.level)
                    for q in s.ineqs])
