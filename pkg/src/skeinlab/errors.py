"""Exception types shared across skeinlab."""


class SkeinError(Exception):
    pass


class DiagramError(SkeinError):
    """Malformed planar diagram data (bad PD code, inconsistent winding)."""


class FieldMismatchError(SkeinError):
    """Operands live over different coefficient fields."""


class FourDividesOrderError(SkeinError, ValueError):
    """Root-of-unity order divisible by four is rejected everywhere."""


class StabilizationError(SkeinError):
    """A truncated computation failed to stabilize within its budget."""

    def __init__(self, message, dims_by_truncation=None):
        super().__init__(message)
        self.dims_by_truncation = dims_by_truncation or {}
