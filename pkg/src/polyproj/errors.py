"""Exception hierarchy shared by every polyproj module."""


class PolyprojError(Exception):
    """Base class for all errors raised by polyproj."""


class PreconditionError(PolyprojError, ValueError):
    """An input violates a documented precondition (CLI exit code 2)."""


class DimensionMismatch(PreconditionError):
    pass


class SingularMatrix(PreconditionError):
    pass


class RankMismatch(PreconditionError):
    pass


class NotPointed(PreconditionError):
    """The coefficient matrix does not have full column rank."""


class NotInCone(PreconditionError):
    pass


class SignPrecondition(PreconditionError):
    pass


class AlreadyEliminated(PreconditionError):
    pass


class TrivialInequality(PreconditionError):
    pass


class StaleVariable(PreconditionError):
    pass


class ZeroObjective(PreconditionError):
    pass


class IndexOutOfRange(PreconditionError, IndexError):
    pass


class ParseError(PreconditionError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class UnsupportedNumberType(ParseError):
    pass


class TriviallyInfeasible(PolyprojError):
    """The system contains (or implies) a contradiction 0 <= c with c < 0."""


class Unbounded(PolyprojError):
    """A parametric program has no lower bound on the objective."""


class InternalContradiction(PolyprojError, AssertionError):
    """An internal invariant failed; this is a bug, not a user error."""
