"""
Exceptions raised by tqftrep.

Everything derives from :class:`TQFTRepError`, which the command line tool
maps to exit status 2 (invalid input).
"""


class TQFTRepError(RuntimeError):
    pass


class ContextError(TQFTRepError):
    """Bad conductor/exponent, or two theories that do not match."""
    pass


class InadmissibleError(TQFTRepError):
    """A color triple (or color) outside the admissible range."""
    pass


class DimensionError(TQFTRepError):
    """Strand count, matrix size, or generator index out of range."""
    pass


class ResourceCapError(TQFTRepError):
    pass


class ParseError(TQFTRepError):
    pass
