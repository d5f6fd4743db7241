"""Exception types shared across the library."""


class PolyadjError(Exception):
    """Base class for all library errors."""


class ZeroVector(PolyadjError):
    pass


class DimensionMismatch(PolyadjError):
    pass


class SingularSystem(PolyadjError):
    pass


class EmptyInput(PolyadjError):
    pass


class NotFullDimensional(PolyadjError):
    pass


class UnboundedPolyhedron(PolyadjError):
    pass


class NotSimple(PolyadjError):
    pass


class NegativeParameter(PolyadjError):
    pass


class NotStrict(PolyadjError):
    pass


class IncompleteFan(PolyadjError):
    pass


class NonSimplicial(PolyadjError):
    pass


class InternalInconsistency(PolyadjError):
    """Two independent computations of the same quantity disagreed.

    This always signals an implementation bug, never bad input data.
    """


class ParseError(PolyadjError):
    pass
