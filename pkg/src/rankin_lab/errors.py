"""Exception hierarchy shared by every module."""


class RankinLabError(ValueError):
    """Base class for all domain errors raised by rankin_lab."""


class NotDominant(RankinLabError):
    pass


class NotPure(RankinLabError):
    pass


class DimensionMismatch(RankinLabError):
    pass


class NegativeSymPower(RankinLabError):
    pass


class OutOfRange(RankinLabError):
    pass


class MalformedCharacter(RankinLabError):
    """A weight function is not the character of a genuine representation."""


class BadIndex(RankinLabError):
    pass


class UnsupportedCase(RankinLabError):
    pass


class NotHalfOdd(RankinLabError):
    pass


class InfeasibleScale(RankinLabError):
    """An enumeration would exceed the configured subset budget."""


class AssumptionViolated(RankinLabError):
    pass
