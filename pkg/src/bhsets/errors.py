"""Exception hierarchy shared across the package."""


class BhSetsError(Exception):
    """Base class for all library errors."""


# --- field construction and arithmetic ---


class UnknownConwayPolynomial(BhSetsError):
    """No database entry for (p, n) and no override modulus supplied."""


class NotIrreducible(BhSetsError):
    """Candidate modulus polynomial factors over GF(p)."""


class NotGenerator(BhSetsError):
    """The residue of x modulo the modulus does not generate the unit group."""


class CapacityExceeded(BhSetsError):
    """Field order exceeds the configured table budget."""


class DivisionByZero(BhSetsError, ZeroDivisionError):
    """Multiplicative inverse of the zero element."""


class DimensionMismatch(BhSetsError):
    """Element coefficient vector has the wrong length for its field."""


class LogOfZero(BhSetsError):
    """Discrete logarithm of the zero element."""


class SubfieldMismatch(BhSetsError):
    """Requested subfield GF(p^e) does not sit inside GF(p^n)."""


# --- set construction and affine machinery ---


class DegreeTooLow(BhSetsError):
    """Base point lands in a proper subfield, outside the construction's domain."""


class NotAUnit(BhSetsError):
    """Dilation factor is not invertible modulo the set modulus."""


class ModulusMismatch(BhSetsError):
    """Operation requires both cyclic sets to share one modulus."""


# --- search ---


class SizeExceedsSet(BhSetsError):
    """Requested window size is larger than the set."""


class CapTooSmall(BhSetsError):
    """No set of the requested size fits within the span cap."""
