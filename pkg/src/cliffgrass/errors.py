"""Exception hierarchy shared by every module."""


class CliffgrassError(ValueError):
    """Base class; every library error is also a ValueError."""


class DimensionMismatchError(CliffgrassError):
    pass


class PreconditionError(CliffgrassError):
    pass


class NoSolutionError(CliffgrassError):
    pass


class NotUniqueError(CliffgrassError):
    pass


class NotInSpin8Error(CliffgrassError):
    """Raised when a matrix has no (unique) infinitesimal triality companion."""


class NotComplexLinearError(CliffgrassError):
    pass


class ValidationError(CliffgrassError):
    pass


class DualityViolationError(CliffgrassError):
    pass
