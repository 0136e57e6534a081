"""Exception hierarchy shared by every module."""


class BraidCheckError(Exception):
    """Base class for all library errors."""


class ParseError(BraidCheckError, ValueError):
    """Malformed word text."""


class DomainError(BraidCheckError, ValueError):
    """An argument lies outside the domain of the operation."""


class UnsupportedError(DomainError):
    """The operation has no construction for these parameters (e.g. too few strands)."""


class ResourceError(BraidCheckError):
    """A configured guard (maximum word length) was exceeded."""
