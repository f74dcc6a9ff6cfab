"""Exception types raised by the dchat package."""


class DchatError(Exception):
    """Base class for all dchat errors."""


class NonFiniteInput(DchatError, ValueError):
    """Input contains NaN or infinite values."""


class TiesDetected(DchatError, ValueError):
    """Two bit-identical values found while ranking under the error tie policy."""


class LengthMismatch(DchatError, ValueError):
    """Paired sequences have incompatible lengths."""


class ShapeMismatch(DchatError, ValueError):
    """Paired sample sets have incompatible shapes."""


class InvalidK(DchatError, ValueError):
    """Permutation count K is not a positive integer."""


class BadPermutation(DchatError, ValueError):
    """Index array is not a permutation of 0..N-1."""


class EmptyNull(DchatError, ValueError):
    """No null samples supplied for a p-value computation."""


class InvalidSpec(DchatError, ValueError):
    """Generator specification has parameters outside the model-legal range."""


class ComplexYUnsupported(DchatError, ValueError):
    """Outlier injection requires a real-valued response sample set."""


class MissingColumn(DchatError, ValueError):
    """A requested column is absent from the CSV header."""


class NonNumericCell(DchatError, ValueError):
    """A CSV cell could not be parsed as a finite number."""


class UnpairedComplexColumn(DchatError, ValueError):
    """A *_re column has no matching *_im column (or vice versa)."""


class EmptyFile(DchatError, ValueError):
    """Input file contains no data rows."""


class ColumnCountMismatch(DchatError, ValueError):
    """A whitespace-separated pair file row does not have exactly two columns."""
