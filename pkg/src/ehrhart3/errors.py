"""Exception hierarchy.

Every error raised for bad input or an impossible computation derives from
:class:`Ehrhart3Error`, so callers (the CLI in particular) can catch one type
and report ``type(exc).__name__``.
"""


class Ehrhart3Error(Exception):
    """Base class for all errors raised by this package."""


class ZeroVector(Ehrhart3Error, ValueError):
    pass


class DependentVectors(Ehrhart3Error, ValueError):
    pass


class SingularSystem(Ehrhart3Error, ValueError):
    pass


class InvalidModulus(Ehrhart3Error, ValueError):
    pass


class NotCoprime(Ehrhart3Error, ValueError):
    pass


class TooFewPoints(Ehrhart3Error, ValueError):
    pass


class NotFullDimensional(Ehrhart3Error, ValueError):
    pass


class NotSimple(Ehrhart3Error, ValueError):
    pass


class NonVertexInput(Ehrhart3Error, ValueError):
    pass


class VertexNotOnFacet(Ehrhart3Error, ValueError):
    pass


class OrientationFailure(Ehrhart3Error, RuntimeError):
    """No walk direction around a facet makes every epsilon positive."""


class ZeroDenominator(Ehrhart3Error, RuntimeError):
    """A walk coefficient denominator vanished (corrupt face structure)."""


class LengthMismatch(Ehrhart3Error, ValueError):
    pass


class GcdNotOne(Ehrhart3Error, ValueError):
    pass


class OracleTooLarge(Ehrhart3Error, RuntimeError):
    """The brute-force scan would exceed the configured cell cap."""
