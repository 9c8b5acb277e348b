"""Exception types raised by the library."""


class TropicalError(ValueError):
    """Base class for all library errors."""


class DimensionMismatch(TropicalError):
    pass


class ZeroVector(TropicalError):
    pass


class NotOnSphere(TropicalError):
    pass


class NotMonomial(TropicalError):
    pass


class NotInvertible(TropicalError):
    pass


class NotOrthogonal(TropicalError):
    pass


class TooLarge(TropicalError):
    pass


class NotIndependent(TropicalError):
    pass


class NotAConfiguration(TropicalError):
    pass


class NotConvexPosition(TropicalError):
    pass
