"""Exception hierarchy shared by the library and the CLI."""


class SdstabError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(SdstabError, ValueError):
    """Invalid graph construction or out-of-range vertex label."""


class FamilyError(SdstabError, ValueError):
    """A family parameter violates its validity rule."""


class ParseError(SdstabError, ValueError):
    """Malformed edge list or family expression."""

    def __init__(self, message, *, line=None, position=None):
        self.line = line
        self.position = position
        where = ""
        if line is not None:
            where = f"line {line}: "
        elif position is not None:
            where = f"position {position}: "
        super().__init__(where + message)


class CapExceeded(SdstabError):
    """An exact computation was refused because the input exceeds a size cap."""


class StabilityUndefined(SdstabError, ValueError):
    """Stability requested for a graph of order 1."""


class UnknownClaim(SdstabError, KeyError):
    def __str__(self):
        return f"unknown claim id: {self.args[0]!r}"
