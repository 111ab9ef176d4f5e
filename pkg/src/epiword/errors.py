"""Exception types shared by all modules."""


class EpiwordError(Exception):
    """Base class for every error raised by this package."""


class EmptyWordError(EpiwordError):
    """Operation requires a word of length at least one."""


class NonCoprimeError(EpiwordError):
    """Slope numerator and denominator must be relatively prime."""


class DegenerateSlopeError(EpiwordError):
    """Slope 0/1 or 1/0 is not allowed here."""


class NotBinaryError(EpiwordError):
    """Operation is only defined over a two-letter alphabet."""


class AllZeroError(EpiwordError):
    """Occurrence tuple has no nonzero entry."""


class NotAdmissibleError(EpiwordError):
    """Tuple does not reduce to a unit vector, so no epichristoffel word exists."""


class TrivialTupleError(EpiwordError):
    """Unit tuples describe single letters and have no two-factor split."""


class NotEpichristoffelError(EpiwordError):
    """Word is not an epichristoffel word."""


class InvalidLetterError(EpiwordError):
    """Morphism refers to a letter outside the word's alphabet."""


class DimensionMismatchError(EpiwordError):
    """Mediant operands must be two fractions or two equal-length tuples."""


class NotInTreeError(EpiwordError):
    """Target tuple does not occur in the tree rooted at the given tuple."""


class RootSelectionError(EpiwordError):
    """Neither prefix of the word matches the epichristoffel word of its factor tuple."""


class WordLengthOverflow(EpiwordError):
    """Word length would exceed the configured budget."""


__all__ = [
    "EpiwordError",
    "EmptyWordError",
    "NonCoprimeError",
    "DegenerateSlopeError",
    "NotBinaryError",
    "AllZeroError",
    "NotAdmissibleError",
    "TrivialTupleError",
    "NotEpichristoffelError",
    "InvalidLetterError",
    "DimensionMismatchError",
    "NotInTreeError",
    "RootSelectionError",
    "WordLengthOverflow",
]
