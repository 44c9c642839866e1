"""Exception types shared across the package."""


class OmlabError(Exception):
    """Base class for all library errors."""


class DomainError(OmlabError, ValueError):
    """An argument lies outside an operation's mathematical domain."""


class UnsupportedGeometryError(OmlabError):
    """The requested configuration has no exact evaluation path.

    Version 1 computes integrals only over balls concentric with the test
    function; there is no silent numeric fallback for anything else.
    """


class HypothesisError(OmlabError):
    """A required relation or class-membership hypothesis does not hold."""


class DocumentError(OmlabError, ValueError):
    """A declarative input document is malformed."""
