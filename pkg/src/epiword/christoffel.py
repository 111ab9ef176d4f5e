"""Lower Christoffel paths and words of slope a/b.

A Christoffel word of slope a/b encodes the lattice path from (0,0) to
(b,a) that runs tightest below the segment between those points: x for a
horizontal step, y for a vertical one. Point labels measure the vertical
distance to the segment and locate the standard two-factor split.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import DegenerateSlopeError, EmptyWordError, NonCoprimeError, NotBinaryError
from .words import BINARY, Alphabet, Word, parikh


@dataclass(frozen=True)
class Slope:
    """A reduced slope a/b: ``a`` vertical steps over ``b`` horizontal ones.

    The degenerate slopes 0/1 and 1/0 are permitted; they encode the
    single-letter words.
    """

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a < 0 or self.b < 0 or self.a + self.b < 1:
            raise ValueError(f"slope needs non-negative a, b with a+b >= 1: {self.a}/{self.b}")
        if gcd(self.a, self.b) != 1:
            raise NonCoprimeError(f"{self.a}/{self.b} is not coprime")

    def __str__(self) -> str:
        return f"{self.a}/{self.b}"


@dataclass(frozen=True)
class PathLabel:
    """Exact label (i*a - j*b)/b of the lattice point (i, j) on the path.

    Stored as an integer numerator over the fixed denominator b, never as a
    float: the split point is found by exact equality with 1/b.
    """

    numerator: int
    denominator: int
    point: tuple[int, int]

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


def _require_binary(alphabet: Alphabet) -> None:
    if alphabet.size != 2:
        raise NotBinaryError(f"need a two-letter alphabet, got {alphabet.symbols!r}")


def christoffel_word(slope: Slope, alphabet: Alphabet = BINARY) -> Word:
    """The Christoffel word of the given slope: length a+b, with b x's and a y's.

    The k-th letter is y exactly when the k-th step crosses a new horizontal
    lattice line, i.e. when floor(k*a/(a+b)) exceeds floor((k-1)*a/(a+b)).
    """
    _require_binary(alphabet)
    a, b = slope.a, slope.b
    n = a + b
    letters = []
    prev = 0
    for k in range(1, n + 1):
        cur = (k * a) // n
        letters.append(1 if cur > prev else 0)
        prev = cur
    return Word(tuple(letters), alphabet)


def path_points(slope: Slope, alphabet: Alphabet = BINARY) -> list[tuple[int, int]]:
    """The a+b+1 lattice points visited by the Christoffel path, in order."""
    word = christoffel_word(slope, alphabet)
    points = [(0, 0)]
    i = j = 0
    for letter in word:
        if letter == 0:
            i += 1
        else:
            j += 1
        points.append((i, j))
    return points


def path_labels(slope: Slope, alphabet: Alphabet = BINARY) -> list[PathLabel]:
    """Labels of every path point; the first and last are 0."""
    if slope.b == 0:
        raise DegenerateSlopeError("labels need b >= 1")
    a, b = slope.a, slope.b
    return [PathLabel(i * a - j * b, b, (i, j)) for i, j in path_points(slope, alphabet)]


def standard_factorization(slope: Slope, alphabet: Alphabet = BINARY) -> tuple[Word, Word]:
    """Split the Christoffel word at the unique interior point with label 1/b.

    Both factors are themselves Christoffel words.
    """
    if slope.a == 0 or slope.b == 0:
        raise DegenerateSlopeError(f"slope {slope} has no interior split point")
    labels = path_labels(slope, alphabet)
    cuts = [pos for pos, label in enumerate(labels) if label.numerator == 1]
    # gcd(a, b) = 1 makes the label-1/b point unique.
    assert len(cuts) == 1, f"expected one split point for {slope}, found {len(cuts)}"
    word = christoffel_word(slope, alphabet)
    cut = cuts[0]
    return word[:cut], word[cut:]


def is_christoffel(w: Word) -> bool:
    """True when ``w`` is the Christoffel word of slope |w|_y / |w|_x."""
    _require_binary(w.alphabet)
    if len(w) == 0:
        raise EmptyWordError("Christoffel test is defined for nonempty words")
    counts = parikh(w)
    b, a = counts[0], counts[1]
    if gcd(a, b) != 1:
        return False
    return w == christoffel_word(Slope(a, b), w.alphabet)


__all__ = [
    "Slope",
    "PathLabel",
    "christoffel_word",
    "path_points",
    "path_labels",
    "standard_factorization",
    "is_christoffel",
]
