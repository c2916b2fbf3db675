"""Exception hierarchy.

Two families: :class:`InvalidInput` for requests outside the supported domain
(the CLI maps these to exit status 2) and :class:`ConsistencyError` for
internal invariants that failed (exit status 3).
"""


class MotiveError(Exception):
    pass


class InvalidInput(MotiveError, ValueError):
    pass


class ConsistencyError(MotiveError, ArithmeticError):
    pass


class NotCoprime(InvalidInput):
    pass


class UnsupportedRank(InvalidInput):
    pass


class UnsupportedPartition(InvalidInput):
    pass


class FieldTooSmall(InvalidInput):
    pass


class TooLarge(InvalidInput):
    pass


class NonExactDivision(ConsistencyError):
    pass


class UnsupportedHom(ConsistencyError):
    pass


class UnsupportedSchubert(ConsistencyError):
    pass


class NoBranch(ConsistencyError):
    pass
