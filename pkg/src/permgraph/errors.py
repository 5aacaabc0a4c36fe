"""Exception types shared across the package."""


class PermGraphError(Exception):
    """Base class for all errors raised by permgraph."""


class InvalidParameter(PermGraphError, ValueError):
    pass


class SizeLimitError(PermGraphError):
    pass


class UndefinedGraphError(PermGraphError):
    """Raised when a group has no proper nontrivial cyclic subgroup."""


class SpecParseError(PermGraphError, ValueError):
    pass
