"""Exception hierarchy shared by every module."""


class SkewSpecError(ValueError):
    """Base class for domain errors raised by skewspec."""


class GraphError(SkewSpecError):
    """Invalid graph construction or a missing edge/vertex."""


class Graph6Error(SkewSpecError):
    """Base class for graph6 parse failures."""


class Graph6HeaderError(Graph6Error):
    """The size header is malformed or outside the short form."""


class Graph6LengthError(Graph6Error):
    """The body is truncated or carries trailing data."""


class Graph6CharacterError(Graph6Error):
    """A byte outside the printable range 63..126 was found."""


class OrientationError(SkewSpecError):
    """Malformed orientation, switching or partition."""


class SizeGuardError(SkewSpecError):
    """Input exceeds an enumeration guard."""


class ConvergenceError(ArithmeticError):
    """An iterative eigensolver hit its iteration cap."""
