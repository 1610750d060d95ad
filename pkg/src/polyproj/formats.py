"""Text formats: the native ``.poly`` format, cdd's ``.ine`` H-format, and
single inequalities written as ``2*x - y/3 <= 4``.

``.poly``::

    # comment
    vars x y
    1 1 1        # x + y <= 1

``.ine`` rows ``b a1 ... an`` mean ``b + a.x >= 0``.
"""

import re
from fractions import Fraction

from polyproj.errors import DimensionMismatch, ParseError, UnsupportedNumberType
from polyproj.linalg import format_rat
from polyproj.polyhedron import HSystem, Inequality, default_var_names

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")


def _rat(tok, line, col):
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {tok!r}", line, col) from None


def _tokens(text):
    """Yield ``(line_no, [(column, token), ...])`` for non-blank, non-comment lines."""
    for no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        toks = [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", body)]
        if toks:
            yield no, toks


def parse_poly(text):
    names = None
    rows = []
    for no, toks in _tokens(text):
        if toks[0][1] == "vars":
            if names is not None:
                raise ParseError("duplicate vars header", no, toks[0][0])
            if rows:
                raise ParseError("vars header must precede the inequalities", no, toks[0][0])
            names = tuple(t for _, t in toks[1:])
            for col, t in toks[1:]:
                if not _NAME.match(t):
                    raise ParseError(f"bad variable name {t!r}", no, col)
            if len(set(names)) != len(names):
                raise ParseError("duplicate variable names", no, toks[0][0])
            continue
        if names is None:
            raise ParseError("missing vars header", no, toks[0][0])
        if len(toks) != len(names) + 1:
            raise DimensionMismatch(
                f"line {no}: expected {len(names) + 1} numbers, found {len(toks)}")
        rows.append([_rat(t, no, col) for col, t in toks])
    if names is None:
        raise ParseError("missing vars header")
    return HSystem.from_rows(names, rows)


def emit_poly(s):
    out = ["vars " + " ".join(s.var_names)]
    out += [" ".join(format_rat(x) for x in q.row) for q in s.ineqs]
    return "\n".join(out) + "\n"


_INE_TYPES = {"rational", "integer"}


def parse_ine(text):
    lines = list(_ine_lines(text))
    it = iter(lines)
    for no, toks in it:
        if toks[0][1] == "linearity":
            raise ParseError("linearity (equations) is not supported", no, toks[0][0])
        if toks[0][1] == "V-representation":
            raise ParseError("only H-representations are supported", no, toks[0][0])
        if toks[0][1] == "begin":
            break
    else:
        raise ParseError("missing 'begin'")
    try:
        no, toks = next(it)
    except StopIteration:
        raise ParseError("missing size line after 'begin'") from None
    if len(toks) != 3:
        raise ParseError("size line must read 'm n+1 rational'", no, toks[0][0])
    kind_col, kind = toks[2]
    if kind not in _INE_TYPES:
        raise UnsupportedNumberType(f"number type {kind!r} is not supported", no, kind_col)
    try:
        m, width = int(toks[0][1]), int(toks[1][1])
    except ValueError:
        raise ParseError("row and column counts must be integers", no, toks[0][0]) from None
    n = width - 1
    rows = []
    for no, toks in it:
        if toks[0][1] == "end":
            break
        if len(toks) != width:
            raise DimensionMismatch(f"line {no}: expected {width} numbers, found {len(toks)}")
        vals = [_rat(t, no, col) for col, t in toks]
        if kind == "integer" and any(v.denominator != 1 for v in vals):
            raise ParseError("non-integer entry in an integer file", no, toks[0][0])
        rows.append([-a for a in vals[1:]] + [vals[0]])
    else:
        raise ParseError("missing 'end'")
    if len(rows) != m:
        raise DimensionMismatch(f"size line declares {m} rows, found {len(rows)}")
    return HSystem.from_rows(default_var_names(n), rows)


def _ine_lines(text):
    for no, raw in enumerate(text.splitlines(), 1):
        if raw.lstrip().startswith("*"):
            continue
        toks = [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", raw)]
        if toks:
            yield no, toks


def emit_ine(s):
    out = ["H-representation", "begin", f" {s.m} {s.n + 1} rational"]
    for q in s.ineqs:
        out.append(" " + " ".join(format_rat(x) for x in (q.rhs,) + tuple(-a for a in q.coeffs)))
    out.append("end")
    return "\n".join(out) + "\n"


_TERM = re.compile(r"\s*([+-])?\s*([0-9]+(?:/[0-9]+)?)?\s*(\*)?\s*([A-Za-z_][A-Za-z0-9_]*)?"
                   r"(?:\s*/\s*([0-9]+))?")


def parse_linear(side, names):
    """``2*x - y/3 + 1`` -> (coefficients over ``names``, constant)."""
    names = list(names)
    coeffs = [Fraction(0)] * len(names)
    const = Fraction(0)
    pos = 0
    side = side.strip()
    if not side:
        raise ParseError("empty linear expression")
    first = True
    while pos < len(side):
        m = _TERM.match(side, pos)
        sign, num, star, name, div = m.groups()
        if m.end() == pos or (num is None and name is None):
            raise ParseError(f"cannot parse {side[pos:]!r}", 1, pos + 1)
        if sign is None and not first:
            raise ParseError(f"missing operator before {side[pos:]!r}", 1, pos + 1)
        if star and (num is None or name is None):
            raise ParseError("dangling '*'", 1, pos + 1)
        val = Fraction(num) if num is not None else Fraction(1)
        if div:
            val /= int(div)
        if sign == "-":
            val = -val
        if name is None:
            const += val
        else:
            if name not in names:
                raise ParseError(f"unknown variable {name!r}", 1, pos + 1)
            coeffs[names.index(name)] += val
        pos = m.end()
        first = False
    return coeffs, const


def parse_inequality(text, var_names):
    """Parse ``lhs <= rhs`` or ``lhs >= rhs`` (linear on both sides)."""
    names = list(var_names)
    for op in ("<=", ">="):
        if text.count(op) == 1:
            left, right = text.split(op)
            break
    else:
        raise ParseError(f"expected exactly one '<=' or '>=' in {text!r}")
    la, lc = parse_linear(left, names)
    ra, rc = parse_linear(right, names)
    coeffs = [a - b for a, b in zip(la, ra)]
    rhs = rc - lc
    if op == ">=":
        coeffs, rhs = [-a for a in coeffs], -rhs
    return Inequality(tuple(coeffs), rhs)


def parse_system(text, fmt="poly"):
    if fmt == "poly":
        return parse_poly(text)
    if fmt == "ine":
        return parse_ine(text)
    raise ParseError(f"unknown format {fmt!r}")


def emit_system(s, fmt="poly"):
    if fmt == "poly":
        return emit_poly(s)
    if fmt == "ine":
        return emit_ine(s)
    raise ParseError(f"unknown format {fmt!r}")
