"""Core word values: ordered alphabets, finite words, occurrence tuples.

Letters are stored as integer indices into an alphabet, so lexicographic
comparison and morphism application never touch display symbols; symbols
appear only when parsing or rendering. Every value is immutable and every
operation is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Iterator

from .errors import EmptyWordError

# Hard cap on word length; operations that grow words check against it.
MAX_WORD_LENGTH = 1 << 20

_EXTRA_SYMBOLS = "abcdefghijklmnopqrstuvw"


@dataclass(frozen=True)
class Alphabet:
    """An ordered set of single-character symbols.

    The position of a symbol in ``symbols`` is both its letter index and its
    rank in the lexicographic order; the order is fixed for the alphabet's
    lifetime.
    """

    symbols: str

    def __post_init__(self) -> None:
        if not self.symbols:
            raise ValueError("alphabet needs at least one symbol")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError(f"alphabet symbols must be distinct: {self.symbols!r}")

    @property
    def size(self) -> int:
        return len(self.symbols)

    def index(self, symbol: str) -> int:
        pos = self.symbols.find(symbol)
        if pos < 0:
            raise ValueError(f"symbol {symbol!r} not in alphabet {self.symbols!r}")
        return pos

    def word(self, text: str) -> "Word":
        """Parse a plain symbol string such as ``"xzyzzyz"``."""
        return Word(tuple(self.index(ch) for ch in text), self)

    def render(self, letters: Iterator[int] | tuple[int, ...]) -> str:
        return "".join(self.symbols[i] for i in letters)


BINARY = Alphabet("xy")
TERNARY = Alphabet("xyz")


def default_alphabet(k: int) -> Alphabet:
    """``x < y < z`` for k <= 3, extended with ``a < b < ...`` beyond."""
    if k < 1:
        raise ValueError("alphabet size must be at least 1")
    if k <= 3:
        return Alphabet("xyz"[:k])
    if k - 3 > len(_EXTRA_SYMBOLS):
        raise ValueError(f"no default alphabet with {k} symbols")
    return Alphabet("xyz" + _EXTRA_SYMBOLS[: k - 3])


@total_ordering
@dataclass(frozen=True)
class Word:
    """A finite word: a sequence of letter indices over an alphabet.

    The empty word is a valid value; predicates that need a nonempty word
    raise :class:`EmptyWordError`. Comparison is lexicographic in alphabet
    order, with a proper prefix ordered before its extensions.
    """

    letters: tuple[int, ...]
    alphabet: Alphabet

    def __post_init__(self) -> None:
        k = self.alphabet.size
        if any(not 0 <= c < k for c in self.letters):
            raise ValueError("letter index outside alphabet")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.letters[item], self.alphabet)
        return self.letters[item]

    def __add__(self, other: "Word") -> "Word":
        self._require_same_alphabet(other)
        return Word(self.letters + other.letters, self.alphabet)

    def __lt__(self, other: "Word") -> bool:
        self._require_same_alphabet(other)
        return self.letters < other.letters

    def _require_same_alphabet(self, other: "Word") -> None:
        if self.alphabet != other.alphabet:
            raise ValueError("words use different alphabets")

    def __str__(self) -> str:
        return self.alphabet.render(self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


@dataclass(frozen=True)
class OccurrenceTuple:
    """Per-letter occurrence counts of a word (its Parikh vector).

    Entries are non-negative when describing a word, but the reduction
    operator used for admissibility testing may produce negative entries,
    so negatives are representable.
    """

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.counts:
            raise ValueError("occurrence tuple needs at least one entry")

    @property
    def k(self) -> int:
        return len(self.counts)

    def total(self) -> int:
        return sum(self.counts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.counts)

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def __add__(self, other: "OccurrenceTuple") -> "OccurrenceTuple":
        if self.k != other.k:
            raise ValueError("tuples have different lengths")
        return OccurrenceTuple(tuple(a + b for a, b in zip(self.counts, other.counts)))

    def unit_index(self) -> int | None:
        """Index m when this tuple is the unit vector e_m, else None."""
        if sum(self.counts) == 1 and all(c in (0, 1) for c in self.counts):
            return self.counts.index(1)
        return None

    @classmethod
    def parse(cls, text: str) -> "OccurrenceTuple":
        """Parse comma syntax such as ``"1,2,4"``."""
        try:
            counts = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise ValueError(f"not a comma-separated integer tuple: {text!r}") from None
        return cls(counts)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.counts) + ")"


def parikh(w: Word) -> OccurrenceTuple:
    """Occurrence counts of each letter of ``w``, in alphabet order."""
    counts = [0] * w.alphabet.size
    for c in w.letters:
        counts[c] += 1
    return OccurrenceTuple(tuple(counts))


def rotate(w: Word, i: int) -> Word:
    """The i-th conjugate ``w[i:] + w[:i]``; offsets are taken modulo |w|."""
    if len(w) == 0:
        return w
    i %= len(w)
    return Word(w.letters[i:] + w.letters[:i], w.alphabet)


def _least_rotation_index(s: tuple[int, ...]) -> int:
    # Booth's algorithm; returns the smallest offset of the least rotation.
    n = len(s)
    doubled = s + s
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = doubled[j]
        i = f[j - k - 1]
        while i != -1 and sj != doubled[k + i + 1]:
            if sj < doubled[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != doubled[k + i + 1]:
            if sj < doubled[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k % n


def least_rotation(w: Word) -> tuple[Word, int]:
    """Lexicographically least conjugate of ``w`` and the offset producing it.

    Uses Booth's linear-time scan; ties (non-primitive words) resolve to the
    smallest offset.
    """
    if len(w) == 0:
        raise EmptyWordError("the empty word has no least rotation")
    k = _least_rotation_index(w.letters)
    return rotate(w, k), k


def are_conjugate(w1: Word, w2: Word) -> bool:
    """True when ``w2`` is a rotation of ``w1``."""
    w1._require_same_alphabet(w2)
    if len(w1) != len(w2):
        return False
    if len(w1) == 0:
        return True
    return least_rotation(w1)[0] == least_rotation(w2)[0]


def is_primitive(w: Word) -> bool:
    """True when ``w`` is not a proper power of a shorter word."""
    if len(w) == 0:
        raise EmptyWordError("primitivity is defined for nonempty words")
    n = len(w)
    for d in range(1, n):
        if n % d == 0 and w.letters[:d] * (n // d) == w.letters:
            return False
    return True


def is_lyndon(w: Word) -> bool:
    """True when ``w`` is primitive and least among its rotations."""
    if len(w) == 0:
        raise EmptyWordError("Lyndon property is defined for nonempty words")
    return is_primitive(w) and _least_rotation_index(w.letters) == 0


def is_balanced(w: Word) -> bool:
    """True when equal-length factors never differ by more than one in any letter count.

    Uses plain (linear) factors, not cyclic ones.
    """
    if len(w) == 0:
        raise EmptyWordError("balance is defined for nonempty words")
    n, k = len(w), w.alphabet.size
    letters = w.letters
    for length in range(1, n):
        counts = [0] * k
        for c in letters[:length]:
            counts[c] += 1
        lo = counts.copy()
        hi = counts.copy()
        for start in range(1, n - length + 1):
            out = letters[start - 1]
            new = letters[start + length - 1]
            counts[out] -= 1
            counts[new] += 1
            if counts[out] < lo[out]:
                lo[out] = counts[out]
            if counts[new] > hi[new]:
                hi[new] = counts[new]
        if any(hi[a] - lo[a] > 1 for a in range(k)):
            return False
    return True


def factors(w: Word, length: int) -> set[Word]:
    """All distinct contiguous factors of ``w`` of the given length."""
    if not 0 <= length <= len(w):
        raise ValueError("factor length out of range")
    return {w[i : i + length] for i in range(len(w) - length + 1)}


__all__ = [
    "MAX_WORD_LENGTH",
    "Alphabet",
    "Word",
    "OccurrenceTuple",
    "BINARY",
    "TERNARY",
    "default_alphabet",
    "parikh",
    "rotate",
    "least_rotation",
    "are_conjugate",
    "is_primitive",
    "is_lyndon",
    "is_balanced",
    "factors",
]
