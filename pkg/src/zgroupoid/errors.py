"""Exception types raised across the package."""


class ZGroupoidError(Exception):
    pass


class InvalidArgument(ZGroupoidError, ValueError):
    pass


class ComposabilityError(ZGroupoidError):
    """Raised when two arrows are multiplied but t(a) != s(b)."""


class PartitionError(ZGroupoidError):
    pass


class AbsoluteContinuityError(ZGroupoidError):
    pass


class DegenerateCenterError(ZGroupoidError):
    pass


class PreconditionError(ZGroupoidError):
    pass


class ConfigError(ZGroupoidError):
    pass
