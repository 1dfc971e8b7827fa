"""Exception types shared across the package."""


class DimensionMismatch(ValueError):
    """Operands have incompatible shapes or ambient dimensions."""


class ContainmentError(ValueError):
    """A subspace expected to be contained in another is not."""


class InvalidGenerator(ValueError):
    """A generator matrix violates a structural precondition."""


class NotASubalgebra(ValueError):
    """A subspace is not closed under the bracket."""


class ClosureError(RuntimeError):
    """Internal invariant violation: a bracket failed to land in its span."""
