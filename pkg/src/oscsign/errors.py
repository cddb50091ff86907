"""Exception types raised across the package.

Every error derives from :class:`OscSignError` so callers (notably the CLI)
can map whole families onto exit codes.
"""


class OscSignError(Exception):
    """Base class for all package errors."""


class UsageError(OscSignError, ValueError):
    """Malformed input: bad selector, bad weight, unparseable option."""


class PrecisionError(OscSignError, ArithmeticError):
    """A computation cannot meet its stated error budget."""


class DataError(OscSignError, ValueError):
    """Not enough (or unsuitable) coefficient data for the request."""


# qexp
class NonIntegralWeight(UsageError):
    pass


class NonIntegralPrefactor(UsageError):
    pass


class OddWeight(UsageError):
    pass


class WeightTooSmall(UsageError):
    pass


class EmptySpace(UsageError):
    pass


class NotOneDimensional(UsageError):
    pass


class IrrationalEigenvalues(DataError):
    pass


class NonCuspidal(DataError):
    pass


class InsufficientPrecision(PrecisionError):
    pass


# lfun
class OutsideConvergence(PrecisionError):
    pass


class NonConvergence(PrecisionError):
    pass


class InsufficientCoefficients(DataError):
    pass


class QuadratureFailure(PrecisionError):
    pass


class TruncationTooSmall(PrecisionError):
    pass


class DegenerateFit(DataError):
    pass


# signs / landau
class EmptySequence(DataError):
    pass


class MissingLedgerEntry(OscSignError, KeyError):
    pass


class NoNegativeEntry(DataError):
    pass
