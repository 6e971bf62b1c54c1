"""Exception hierarchy.

Two families matter to callers: :class:`InvalidInput` (the user handed us
something malformed) and :class:`ConsistencyError` (two computations that
must agree did not, which means a bug).
"""

from __future__ import annotations


class UpsilonTorsionError(Exception):
    """Base class for every error raised by this package."""


class InvalidInput(UpsilonTorsionError, ValueError):
    pass


class ConsistencyError(UpsilonTorsionError, RuntimeError):
    pass


class NonZeroRemainder(UpsilonTorsionError, ArithmeticError):
    """Polynomial division left a remainder."""


class DivisionByZero(UpsilonTorsionError, ZeroDivisionError):
    pass


class NotLSpaceForm(InvalidInput):
    """Polynomial is not of the alternating +1/-1 symmetric shape."""


class InvalidGaps(InvalidInput):
    pass


class OddGapSum(InvalidInput):
    pass


class InvalidKnotSpec(InvalidInput):
    pass


class ParameterOutOfRange(InvalidInput):
    pass


class UnsupportedP(InvalidInput):
    pass


class NonzeroAtOrigin(InvalidInput):
    pass


class DiscontinuityDetected(ConsistencyError):
    pass


class PieceMismatch(ConsistencyError):
    pass


class OracleMismatch(ConsistencyError):
    pass
