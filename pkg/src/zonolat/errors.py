"""Exception hierarchy shared by all zonolat modules.

The CLI maps these onto process exit codes: domain errors exit 1,
resource errors exit 2, invariant violations exit 3.
"""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of the operation."""


class UnsupportedRegionError(DomainError):
    """The requested region is not supported by this counting method."""


class ResourceLimitError(RuntimeError):
    """A configurable work cap (enumeration size, search nodes) was exceeded."""


class InvariantViolationError(RuntimeError):
    """An exact identity that must always hold was observed to fail.

    Raised only from checks that certify theorems; if one of these fires,
    either the input violated a precondition silently or there is a bug.
    """
