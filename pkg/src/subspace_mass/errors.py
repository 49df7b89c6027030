"""Exception types shared across the package."""


class SubspaceMassError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(SubspaceMassError, ValueError):
    pass


class RankDeficient(SubspaceMassError, ValueError):
    pass


class DomainError(SubspaceMassError, ValueError):
    pass


class TooLarge(SubspaceMassError, ValueError):
    pass


class InvalidGenerator(SubspaceMassError, ValueError):
    pass


class NotUnit(SubspaceMassError, ValueError):
    pass


class NonPositiveMass(SubspaceMassError, ValueError):
    pass
