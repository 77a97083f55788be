"""Exception hierarchy shared by all mbdef modules."""


class MBDefError(Exception):
    """Base class; the CLI maps these to exit code 2 (input error)."""


class ContextError(MBDefError):
    """Operands live in different generator contexts, or a name is unknown."""


class ParityError(MBDefError):
    """A value of the wrong parity was supplied (odd where even is required, ...)."""


class DivergenceError(MBDefError):
    """A series operation would need terms that the filtration does not control."""


class NonNilpotentError(MBDefError):
    """A deformation coefficient has weight zero, so the critical iteration need not stop."""


class MCError(MBDefError):
    """An element expected to satisfy the Maurer-Cartan equation does not.

    The offending residual is kept on ``residual``.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class ShapeError(MBDefError):
    """A point has components outside the supported (phi, psi) shape."""


class BoundsError(MBDefError):
    """A rank or degree exceeds the desk-scale bounds of a homology computation."""


class ParseError(MBDefError):
    """Malformed term expression. ``position`` is the 0-based character offset."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class GoldenMissingError(MBDefError):
    """A golden file does not exist and ``bless`` was not requested."""
