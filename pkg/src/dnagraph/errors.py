"""Exception types shared across the package."""


class DnaGraphError(Exception):
    """Base class for all library errors."""


class InvalidParameterError(DnaGraphError, ValueError):
    """A family or construction parameter is outside its documented bounds."""


class UnsupportedParameterError(InvalidParameterError):
    """Parameter is well-formed but outside the supported catalogue."""


class InvalidInputError(DnaGraphError, ValueError):
    """An operation received inputs that violate its precondition."""


class ResourceLimitError(DnaGraphError, RuntimeError):
    """A configured size or growth cap would be exceeded."""


class ConstructionFailure(DnaGraphError, RuntimeError):
    """A closed-form construction or lift failed self-verification.

    This is never a user error: the underlying constructions are proven to
    work, so tripping this means the library itself has a bug.
    """
