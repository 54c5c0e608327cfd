"""Exception hierarchy shared by all relkmeans modules."""


class RelKMeansError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(RelKMeansError, ValueError):
    """Matrix and clustering (or other inputs) disagree on shape."""


class InvariantError(RelKMeansError, RuntimeError):
    """An internal invariant was violated; indicates a bug, not bad input."""


class ConvergenceError(RelKMeansError, ArithmeticError):
    """An iterative numerical method ran out of its iteration budget."""

    def __init__(self, message, residual):
        super().__init__(f"{message} (residual={residual!r})")
        self.residual = residual


class InputFormatError(RelKMeansError, ValueError):
    """Base class for problems in a distance-matrix input file.

    ``line`` and ``column`` are 1-based positions in the file when known.
    """

    def __init__(self, message, line=None, column=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        prefix = ", ".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)
        self.line = line
        self.column = column


class FormatError(InputFormatError):
    """Structural problem: missing ``//`` separator, blank name, too few objects."""


class ShapeError(InputFormatError):
    """Wrong number of matrix rows or fields in a row."""


class FieldParseError(InputFormatError):
    """A matrix field is not a finite dot-decimal number."""


class ValidationError(InputFormatError):
    """Matrix parsed but is not a valid distance matrix."""
