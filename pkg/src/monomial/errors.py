"""Exception types shared across the package."""


class MonomialError(Exception):
    """Base class for all errors raised by this package."""


class InvalidImages(MonomialError, ValueError):
    """Image sequence is not a signed permutation."""


class DegreeMismatch(MonomialError, ValueError):
    """Operands act on different index sets."""


class IndexOutOfRange(MonomialError, IndexError):
    """Index outside {1, ..., n} (or its signed extension)."""


class SizeExceeded(MonomialError):
    """Exhaustive enumeration would exceed the configured size guard."""


class CapExceeded(MonomialError):
    """Group closure grew past the element cap."""


class BadPartition(MonomialError, ValueError):
    """Block sizes do not form a valid contiguous partition."""


class BadCrossPair(MonomialError, ValueError):
    """Cross generator pair does not span two adjacent blocks."""


class DimensionMismatch(MonomialError, ValueError):
    """Matrix or vector dimensions are incompatible."""


class LengthMismatch(MonomialError, ValueError):
    """GF(2) vectors of different lengths."""


class ConventionNotTotal(MonomialError):
    """A breadth-first parity was requested where the move graph has an odd cycle."""


class PoleParameter(MonomialError, ValueError):
    """Hyperbolic parametrization evaluated at t = +/-1."""


class SingularMatrix(MonomialError, ZeroDivisionError):
    """Matrix inverse requested for a singular matrix."""


class ConfigInvalid(MonomialError, ValueError):
    """Verification suite configuration violates its bounds."""


class UnknownFormat(MonomialError, ValueError):
    """Unsupported report output format."""
