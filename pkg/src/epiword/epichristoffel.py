"""Epichristoffel tuples and words.

An occurrence tuple admits an epichristoffel word exactly when repeatedly
replacing its maximal entry p_i by p_i minus the sum of all other entries
reaches a unit vector. Each reduction step contributes one ``Psi`` atom;
applying the collected atoms to the letter left standing rebuilds a word in
the conjugacy class, and its least rotation is the epichristoffel word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

from .errors import (
    AllZeroError,
    EmptyWordError,
    NotAdmissibleError,
    NotEpichristoffelError,
    TrivialTupleError,
    WordLengthOverflow,
)
from .morphisms import MorphismSeq, Psi, apply
from .words import (
    MAX_WORD_LENGTH,
    Alphabet,
    OccurrenceTuple,
    Word,
    default_alphabet,
    least_rotation,
    parikh,
)

TieBreak = Literal["recent", "smallest", "largest"]

_TIE_BREAKS = ("recent", "smallest", "largest")


@dataclass(frozen=True)
class TStep:
    """One reduction step: the tuple before, the reduced index, the tuple after."""

    before: OccurrenceTuple
    index: int
    after: OccurrenceTuple


@dataclass(frozen=True)
class TTrace:
    """Full reduction record for a tuple.

    ``terminal`` is the unit-vector index when the iteration succeeds;
    ``rejection`` names the failure otherwise (a negative entry, or a
    stationary tuple c*e_m with c > 1 that the reduction fixes forever).
    """

    start: OccurrenceTuple
    steps: tuple[TStep, ...]
    terminal: int | None
    rejection: str | None

    @property
    def admissible(self) -> bool:
        return self.terminal is not None


@dataclass(frozen=True)
class ConstructionResult:
    """A word realizing an admissible tuple, with its construction evidence."""

    c_word: Word
    morphisms: MorphismSeq
    terminal_letter: int
    epi_word: Word
    rotation_offset: int
    trace: TTrace


@dataclass(frozen=True)
class CanonicalSplit:
    """Two-factor split u*v of the constructed word; both parts share its class family."""

    u: Word
    v: Word
    u_tuple: OccurrenceTuple
    v_tuple: OccurrenceTuple


def _argmax_indices(counts: Sequence[int]) -> tuple[list[int], int]:
    top = max(counts)
    return [i for i, c in enumerate(counts) if c == top], top


def _choose_index(candidates: list[int], history: Sequence[int], tie_break: TieBreak) -> int:
    if len(candidates) == 1:
        return candidates[0]
    if tie_break == "smallest":
        return candidates[0]
    if tie_break == "largest":
        return candidates[-1]
    # "recent": prefer the position reduced most recently; new positions last.
    members = set(candidates)
    for idx in reversed(history):
        if idx in members:
            return idx
    return candidates[0]


def _t_step(p: OccurrenceTuple, history: Sequence[int], tie_break: TieBreak) -> tuple[OccurrenceTuple, int]:
    candidates, top = _argmax_indices(p.counts)
    idx = _choose_index(candidates, history, tie_break)
    counts = list(p.counts)
    counts[idx] = top - (p.total() - top)
    return OccurrenceTuple(tuple(counts)), idx


def _validate_tie_break(tie_break: str) -> None:
    if tie_break not in _TIE_BREAKS:
        raise ValueError(f"tie_break must be one of {_TIE_BREAKS}, got {tie_break!r}")


def t_operator(p: OccurrenceTuple) -> tuple[OccurrenceTuple, int]:
    """One reduction step on ``p``; returns the new tuple and the reduced index.

    The maximal entry is replaced by itself minus the sum of all other
    entries; among equal maxima the smallest index is reduced.
    """
    if p.k < 2:
        raise ValueError("reduction needs at least two entries")
    if all(c == 0 for c in p.counts):
        raise AllZeroError("tuple has no nonzero entry")
    if max(p.counts) <= 0:
        raise ValueError("reduction needs at least one positive entry")
    return _t_step(p, (), "smallest")


def admissibility(p: OccurrenceTuple, tie_break: TieBreak = "recent") -> TTrace:
    """Iterate the reduction on ``p`` until a unit vector or a failure.

    The sum of entries strictly decreases while two entries are positive, so
    the iteration always stops within ``p.total()`` steps. The verdict is
    empirically independent of the tie-break rule; the rule only shapes the
    trace and therefore the constructed word.
    """
    _validate_tie_break(tie_break)
    if p.k < 2:
        raise ValueError("admissibility needs at least two entries")
    if any(c < 0 for c in p.counts):
        raise ValueError("admissibility is defined for non-negative tuples")
    if all(c == 0 for c in p.counts):
        raise AllZeroError("tuple has no nonzero entry")

    steps: list[TStep] = []
    history: list[int] = []
    current = p
    for _ in range(p.total() + 1):
        nonzero = [i for i, c in enumerate(current.counts) if c != 0]
        if len(nonzero) == 1:
            m = nonzero[0]
            if current.counts[m] == 1:
                return TTrace(p, tuple(steps), terminal=m, rejection=None)
            return TTrace(p, tuple(steps), terminal=None, rejection="stationary tuple")
        after, idx = _t_step(current, history, tie_break)
        steps.append(TStep(current, idx, after))
        history.append(idx)
        if any(c < 0 for c in after.counts):
            return TTrace(p, tuple(steps), terminal=None, rejection="negative entry")
        current = after
    raise AssertionError(f"reduction of {p} did not terminate")


def construct(
    p: OccurrenceTuple,
    alphabet: Alphabet | None = None,
    tie_break: TieBreak = "recent",
) -> ConstructionResult:
    """Build the word realizing an admissible tuple.

    One ``Psi`` atom per reduction step, keyed by the reduced index, applied
    to the terminal letter; the least rotation of the result is the unique
    Lyndon representative of the conjugacy class.
    """
    trace = admissibility(p, tie_break)
    if not trace.admissible:
        raise NotAdmissibleError(f"no epichristoffel word for {p}: {trace.rejection}")
    if alphabet is None:
        alphabet = default_alphabet(p.k)
    if alphabet.size != p.k:
        raise ValueError(f"alphabet size {alphabet.size} does not match tuple length {p.k}")
    if p.total() > MAX_WORD_LENGTH:
        raise WordLengthOverflow(f"word of length {p.total()} exceeds the budget")

    morphisms = MorphismSeq(tuple(Psi(step.index) for step in trace.steps))
    terminal = trace.terminal
    assert terminal is not None
    c_word = apply(morphisms, Word((terminal,), alphabet))
    assert parikh(c_word) == p, f"construction lost counts for {p}"
    epi_word, offset = least_rotation(c_word)
    return ConstructionResult(c_word, morphisms, terminal, epi_word, offset, trace)


def canonical_split(
    p: OccurrenceTuple,
    alphabet: Alphabet | None = None,
    tie_break: TieBreak = "recent",
) -> CanonicalSplit:
    """Split the constructed word by peeling the innermost atom.

    With atoms f1..fl and terminal letter t, u is the image of fl's letter
    and v the image of t under f1..f(l-1); then u*v is the constructed word.
    """
    result = construct(p, alphabet, tie_break)
    return split_construction(result)


def split_construction(result: ConstructionResult) -> CanonicalSplit:
    """The canonical split of an already-built construction."""
    atoms = result.morphisms.atoms
    if not atoms:
        raise TrivialTupleError("unit tuples have no two-factor split")
    alphabet = result.c_word.alphabet
    prefix = atoms[:-1]
    last = atoms[-1]
    assert isinstance(last, Psi)
    u = apply(prefix, Word((last.letter,), alphabet))
    v = apply(prefix, Word((result.terminal_letter,), alphabet))
    assert u + v == result.c_word
    return CanonicalSplit(u, v, parikh(u), parikh(v))


def is_epichristoffel_word(w: Word) -> bool:
    """True when ``w`` is the Lyndon representative of an epichristoffel class.

    Single letters qualify as images under the identity morphism.
    """
    if len(w) == 0:
        raise EmptyWordError("epichristoffel test is defined for nonempty words")
    if len(w) == 1:
        return True
    if w.alphabet.size < 2:
        return False
    p = parikh(w)
    if not admissibility(p).admissible:
        return False
    return construct(p, w.alphabet).epi_word == w


def is_c_epichristoffel(w: Word) -> bool:
    """True when some rotation of ``w`` is an epichristoffel word."""
    if len(w) == 0:
        raise EmptyWordError("epichristoffel test is defined for nonempty words")
    return is_epichristoffel_word(least_rotation(w)[0])


def epi_factorizations(w: Word) -> list[tuple[Word, Word]]:
    """All cuts of ``w`` into two epichristoffel words; empty means no such cut."""
    if not is_epichristoffel_word(w):
        raise NotEpichristoffelError(f"{w} is not an epichristoffel word")
    found = []
    for cut in range(1, len(w)):
        u, v = w[:cut], w[cut:]
        if is_epichristoffel_word(u) and is_epichristoffel_word(v):
            found.append((u, v))
    return found


def _compositions(total: int, parts: int, minimum: int):
    if parts == 1:
        if total >= minimum:
            yield (total,)
        return
    for first in range(minimum, total - minimum * (parts - 1) + 1):
        for rest in _compositions(total - first, parts - 1, minimum):
            yield (first,) + rest


def tuples_of_length(n: int, k: int, require_all_letters: bool = False) -> list[OccurrenceTuple]:
    """All admissible k-tuples with entry sum n, in lexicographic order."""
    if n < 1 or k < 2:
        raise ValueError("need n >= 1 and k >= 2")
    minimum = 1 if require_all_letters else 0
    out = []
    for counts in _compositions(n, k, minimum):
        candidate = OccurrenceTuple(counts)
        if admissibility(candidate).admissible:
            out.append(candidate)
    return out


def format_trace(trace: TTrace, alphabet: Alphabet | None = None) -> str:
    """Arrow rendering, e.g. ``(1,4,2) ->y (1,1,2) ->z (1,1,0) ->y (1,0,0)``."""
    if alphabet is None:
        alphabet = default_alphabet(trace.start.k)
    parts = [str(trace.start)]
    for step in trace.steps:
        parts.append(f"->{alphabet.symbols[step.index]}")
        parts.append(str(step.after))
    return " ".join(parts)


__all__ = [
    "TieBreak",
    "TStep",
    "TTrace",
    "ConstructionResult",
    "CanonicalSplit",
    "t_operator",
    "admissibility",
    "construct",
    "canonical_split",
    "split_construction",
    "is_epichristoffel_word",
    "is_c_epichristoffel",
    "epi_factorizations",
    "tuples_of_length",
    "format_trace",
]
