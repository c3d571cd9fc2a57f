"""Exception types shared across the package.

The CLI maps these onto exit codes: mathematical failures (NotInvertible,
failed checks) exit 1, malformed input exits 2, size-cap violations exit 3.
"""


class DimensionError(ValueError):
    """Operands live in incompatible spaces (different N, sizes, or rings)."""


class ParityError(ValueError):
    """A homogeneous element was required but a mixed-parity one was given."""


class NotInvertible(ArithmeticError):
    """Inversion was requested for an element or matrix with no inverse."""


class FormatError(ValueError):
    """Serialized input does not match the documented wire format."""


class CapExceeded(RuntimeError):
    """The requested computation exceeds the configured size cap."""
