"""Exception types raised across the package."""


class BchAtlasError(ValueError):
    """Base class for every error raised by bch_atlas."""


class NotPrime(BchAtlasError):
    pass


class DegreeOverflow(BchAtlasError):
    pass


class DivisionByZero(BchAtlasError, ZeroDivisionError):
    pass


class MixedFields(BchAtlasError):
    pass


class LengthMismatch(BchAtlasError):
    pass


class NotCoprime(BchAtlasError):
    pass


class ResidueOutOfRange(BchAtlasError):
    pass


class WidthTooSmall(BchAtlasError):
    pass


class WrongFamily(BchAtlasError):
    pass


class BudgetExceeded(BchAtlasError):
    """An enumeration would exceed the configured step budget."""


class RankOutOfRange(BchAtlasError):
    pass


class OutOfBand(BchAtlasError):
    pass


class WrongParity(BchAtlasError):
    pass


class Unsupported(BchAtlasError):
    """The closed form has no statement for these parameters.

    This is a normal outcome, not a bug: several parameter combinations
    are simply not covered by a known formula.
    """


class IntegralityViolation(BchAtlasError):
    """A closed form produced a non-integer where an integer is required."""


class DeltaOutOfRange(BchAtlasError):
    pass


class RangeWraparound(BchAtlasError):
    pass


class RedundancyTooLarge(BchAtlasError):
    pass
