"""Word trees and mediant trees.

All three tree families share one node shape: a pair (u, v) whose children
are (u, uv) and (uv, v). The Christoffel tree starts from (x, y); an
epichristoffel tree starts from the split of an admissible tuple's word;
Stern-Brocot trees carry fractions or occurrence tuples produced by
repeated mediant insertion. Children are computed on demand, so a node is
also the (conceptually infinite) tree hanging below it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from math import gcd
from typing import Iterable, Iterator, Literal, Sequence, Union

from .epichristoffel import TieBreak, construct, is_epichristoffel_word, split_construction
from .errors import (
    DimensionMismatchError,
    NotInTreeError,
    RootSelectionError,
    WordLengthOverflow,
)
from .words import BINARY, MAX_WORD_LENGTH, Alphabet, OccurrenceTuple, Word, parikh

Side = Literal["L", "R"]


@dataclass(frozen=True)
class TreeNode:
    """A node (u, v); its concatenation u*v is the word the node stands for."""

    u: Word
    v: Word

    @property
    def word(self) -> Word:
        return self.u + self.v

    def left(self) -> "TreeNode":
        w = self._concat()
        return TreeNode(self.u, w)

    def right(self) -> "TreeNode":
        w = self._concat()
        return TreeNode(w, self.v)

    def children(self) -> tuple["TreeNode", "TreeNode"]:
        return self.left(), self.right()

    def _concat(self) -> Word:
        if len(self.u) + 2 * len(self.v) > MAX_WORD_LENGTH or 2 * len(self.u) + len(self.v) > MAX_WORD_LENGTH:
            raise WordLengthOverflow("child word would exceed the length budget")
        return self.u + self.v

    def __str__(self) -> str:
        return f"({self.u}, {self.v})"


@dataclass(frozen=True)
class Fraction:
    """A formal non-negative fraction; 1/0 is allowed as a sequence endpoint."""

    num: int
    den: int

    def __post_init__(self) -> None:
        if self.num < 0 or self.den < 0 or self.num + self.den == 0:
            raise ValueError(f"bad fraction {self.num}/{self.den}")

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


SBEntry = Union[Fraction, OccurrenceTuple]


@dataclass(frozen=True)
class SBLevel:
    """The mediants inserted during one iteration; level i holds 2**(i-1) of them."""

    index: int
    entries: tuple[SBEntry, ...]


CLASSICAL_SEED = (Fraction(0, 1), Fraction(1, 0))


def mediant(a: SBEntry, b: SBEntry) -> SBEntry:
    """Componentwise sum: numerators and denominators for fractions, entries for tuples."""
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return Fraction(a.num + b.num, a.den + b.den)
    if isinstance(a, OccurrenceTuple) and isinstance(b, OccurrenceTuple):
        if a.k != b.k:
            raise DimensionMismatchError(f"tuple lengths differ: {a.k} vs {b.k}")
        return a + b
    raise DimensionMismatchError("mediant needs two fractions or two equal-length tuples")


def sb_level_stream(seed: tuple[SBEntry, SBEntry]) -> Iterator[SBLevel]:
    """Levels 1, 2, ... of the mediant tree grown from the seed pair, forever."""
    seq: list[SBEntry] = [seed[0], seed[1]]
    index = 1
    while True:
        inserted = [mediant(seq[i], seq[i + 1]) for i in range(len(seq) - 1)]
        merged: list[SBEntry] = []
        for old, new in zip(seq, inserted):
            merged.append(old)
            merged.append(new)
        merged.append(seq[-1])
        seq = merged
        yield SBLevel(index, tuple(inserted))
        index += 1


def stern_brocot_levels(seed: tuple[SBEntry, SBEntry], count: int) -> list[SBLevel]:
    """The first ``count`` levels of new mediants for the given seed pair."""
    if count < 0:
        raise ValueError("count must be non-negative")
    return list(islice(sb_level_stream(seed), count))


def sb_sequence(seed: tuple[SBEntry, SBEntry], iterations: int) -> list[SBEntry]:
    """The full sequence after ``iterations`` rounds of mediant insertion."""
    seq: list[SBEntry] = [seed[0], seed[1]]
    for _ in range(iterations):
        inserted = [mediant(seq[i], seq[i + 1]) for i in range(len(seq) - 1)]
        merged: list[SBEntry] = []
        for old, new in zip(seq, inserted):
            merged.append(old)
            merged.append(new)
        merged.append(seq[-1])
        seq = merged
    return seq


def christoffel_tree(alphabet: Alphabet = BINARY) -> TreeNode:
    """Root (x, y) of the Christoffel tree; descend via ``left``/``right``."""
    if alphabet.size != 2:
        raise ValueError("the Christoffel tree lives over a two-letter alphabet")
    return TreeNode(Word((0,), alphabet), Word((1,), alphabet))


def epichristoffel_tree(
    p: OccurrenceTuple,
    alphabet: Alphabet | None = None,
    tie_break: TieBreak = "recent",
) -> TreeNode:
    """Root of the epichristoffel tree for an admissible tuple.

    The tuple's word w is cut after |u| or |v| letters, whichever prefix
    equals the epichristoffel word of the corresponding split tuple; exactly
    one does.
    """
    built = construct(p, alphabet, tie_break)
    split = split_construction(built)
    w = built.epi_word
    matching_cuts = set()
    for part in (split.u, split.v):
        cut = len(part)
        part_word = construct(parikh(part), w.alphabet, tie_break).epi_word
        if w[:cut] == part_word:
            matching_cuts.add(cut)
    if len(matching_cuts) != 1:
        raise RootSelectionError(
            f"expected exactly one matching prefix for {p}, got cuts {sorted(matching_cuts)}"
        )
    cut = matching_cuts.pop()
    return TreeNode(w[:cut], w[cut:])


def tree_levels(root: TreeNode, depth: int) -> list[list[TreeNode]]:
    """Materialize levels 0..depth, left to right."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    levels = [[root]]
    for _ in range(depth):
        levels.append([child for node in levels[-1] for child in node.children()])
    return levels


def tree_isomorphism_check(depth: int, alphabet: Alphabet = BINARY) -> bool:
    """Positional match between Christoffel nodes and Stern-Brocot fractions.

    Node (u, v) at tree level d maps to |uv|_y / |uv|_x, compared against
    entry order of mediant level d+1.
    """
    levels = tree_levels(christoffel_tree(alphabet), depth)
    sb = stern_brocot_levels(CLASSICAL_SEED, depth + 1)
    for tree_level, sb_level in zip(levels, sb):
        for node, frac in zip(tree_level, sb_level.entries, strict=True):
            counts = parikh(node.word)
            if Fraction(counts[1], counts[0]) != frac:
                return False
    return True


def _level_entries(level) -> Sequence:
    if isinstance(level, SBLevel):
        return level.entries
    return level


def diagonal(levels: Iterable, side: Side, k: int) -> Iterator:
    """The k-th entry from the given side of every level that has one.

    Levels too short to have a k-th entry are skipped. Works on mediant
    levels and on materialized word-tree levels alike.
    """
    if k < 1:
        raise ValueError("diagonal index starts at 1")
    for level in levels:
        entries = _level_entries(level)
        if len(entries) < k:
            continue
        yield entries[k - 1] if side == "L" else entries[len(entries) - k]


def l1_plus() -> Iterator[Fraction]:
    """The formal sequence 1/0, 1/1, 1/2, ... used by the diagonal sum rule."""
    n = 0
    while True:
        yield Fraction(1, n)
        n += 1


def _left_diagonal(k: int) -> Iterator[Fraction]:
    return diagonal(sb_level_stream(CLASSICAL_SEED), "L", k)


def diagonal_sum_check(k: int, terms: int) -> bool:
    """Verify that left diagonals 2k and 2k+1 are mediant sums of earlier ones.

    Writing k = 2**i * (2j+1): diagonal 2k is diagonal k plus (1/0, 1/1,
    1/2, ... when j = 0, else diagonal j+1), and diagonal 2k+1 is diagonal
    k+1 plus diagonal j+1, entrywise. Checks the first ``terms`` entries.
    """
    if k < 1 or terms < 1:
        raise ValueError("need k >= 1 and terms >= 1")
    m, i = k, 0
    while m % 2 == 0:
        m //= 2
        i += 1
    j = (m - 1) // 2

    def take(it: Iterator[Fraction], n: int) -> list[Fraction]:
        return list(islice(it, n))

    even_rhs_second = l1_plus() if j == 0 else _left_diagonal(j + 1)
    even_lhs = take(_left_diagonal(2 * k), terms)
    even_rhs = [
        mediant(a, b)
        for a, b in zip(take(_left_diagonal(k), terms), take(even_rhs_second, terms))
    ]
    odd_lhs = take(_left_diagonal(2 * k + 1), terms)
    odd_rhs = [
        mediant(a, b)
        for a, b in zip(take(_left_diagonal(k + 1), terms), take(_left_diagonal(j + 1), terms))
    ]
    return even_lhs == even_rhs and odd_lhs == odd_rhs


def row_successor_check(levels: Sequence) -> bool:
    """Check the row-to-row fraction maps of the Stern-Brocot tree.

    The k-th entry from the left of the next row replaces a/b by a/(a+b);
    the k-th entry from the right replaces a/b by (a+b)/b.
    """
    rows = [_level_entries(level) for level in levels]
    for row, nxt in zip(rows, rows[1:]):
        for k in range(len(row)):
            a, b = row[k].num, row[k].den
            if nxt[k] != Fraction(a, a + b):
                return False
            a, b = row[len(row) - 1 - k].num, row[len(row) - 1 - k].den
            if nxt[len(nxt) - 1 - k] != Fraction(a + b, b):
                return False
    return True


def _solve_seed_combination(
    pu: OccurrenceTuple, pv: OccurrenceTuple, target: OccurrenceTuple
) -> tuple[int, int]:
    # Solve alpha*pu + beta*pv = target over the integers; the system is
    # overdetermined, so every coordinate must agree.
    if target.k != pu.k:
        raise NotInTreeError(f"target length {target.k} does not match the tree's {pu.k}")
    k = pu.k
    for r in range(k):
        for s in range(r + 1, k):
            det = pu[r] * pv[s] - pu[s] * pv[r]
            if det == 0:
                continue
            alpha_num = target[r] * pv[s] - target[s] * pv[r]
            beta_num = pu[r] * target[s] - pu[s] * target[r]
            if alpha_num % det or beta_num % det:
                raise NotInTreeError(f"{target} is not an integer combination of the seeds")
            alpha, beta = alpha_num // det, beta_num // det
            if any(alpha * pu[t] + beta * pv[t] != target[t] for t in range(k)):
                raise NotInTreeError(f"{target} is not a combination of the seeds")
            return alpha, beta
    raise NotInTreeError("seed tuples are linearly dependent")


def path_to_tuple(
    root_tuple: OccurrenceTuple,
    target: OccurrenceTuple,
    alphabet: Alphabet | None = None,
) -> list[Side]:
    """Root-to-node steps reaching the node whose word has counts ``target``.

    Writes target as alpha*pu + beta*pv over the root's split tuples, then
    runs the subtractive walk: alpha > beta records L and drops beta from
    alpha, beta > alpha records R and drops alpha from beta. The emitted
    steps already read root to node; the walk consumes the leading run of
    the path first, like the continued-fraction expansion of alpha/beta.
    """
    root = epichristoffel_tree(root_tuple, alphabet)
    pu, pv = parikh(root.u), parikh(root.v)
    alpha, beta = _solve_seed_combination(pu, pv, target)
    if alpha < 1 or beta < 1 or gcd(alpha, beta) != 1:
        raise NotInTreeError(f"{target} needs coprime positive coefficients, got ({alpha}, {beta})")
    path: list[Side] = []
    while (alpha, beta) != (1, 1):
        if alpha > beta:
            path.append("L")
            alpha -= beta
        else:
            path.append("R")
            beta -= alpha
    node = root
    for step in path:
        node = node.left() if step == "L" else node.right()
    assert parikh(node.word) == target
    return path


def resolve_epichristoffel(
    root_tuple: OccurrenceTuple,
    target: OccurrenceTuple,
    alphabet: Alphabet | None = None,
) -> Word:
    """The word at the tree node whose counts equal ``target``."""
    path = path_to_tuple(root_tuple, target, alphabet)
    node = epichristoffel_tree(root_tuple, alphabet)
    for step in path:
        node = node.left() if step == "L" else node.right()
    return node.word


@dataclass(frozen=True)
class NodeClassification:
    node: TreeNode
    u_epichristoffel: bool
    v_epichristoffel: bool

    @property
    def factorizable(self) -> bool:
        return self.u_epichristoffel and self.v_epichristoffel


@dataclass(frozen=True)
class FactorizabilityReport:
    """Per-node witness of whether both factors are epichristoffel words.

    When the root's right factor is not an epichristoffel word, the words
    along the rightmost spine are additionally checked for having no
    two-factor epichristoffel cut at all; ``right_spine_unfactorizable``
    stays None otherwise.
    """

    root: TreeNode
    nodes: tuple[NodeClassification, ...]
    right_spine_words: tuple[Word, ...]
    right_spine_unfactorizable: bool | None

    @property
    def all_factorizable(self) -> bool:
        return all(entry.factorizable for entry in self.nodes)


def classify_factorizability(
    root_tuple: OccurrenceTuple,
    depth: int,
    alphabet: Alphabet | None = None,
) -> FactorizabilityReport:
    """Classify every node to ``depth`` and probe the rightmost spine."""
    from .epichristoffel import epi_factorizations

    root = epichristoffel_tree(root_tuple, alphabet)
    entries = []
    for level in tree_levels(root, depth):
        for node in level:
            entries.append(
                NodeClassification(
                    node,
                    is_epichristoffel_word(node.u),
                    is_epichristoffel_word(node.v),
                )
            )
    spine = [root]
    for _ in range(depth):
        spine.append(spine[-1].right())
    spine_words = tuple(node.word for node in spine)
    if entries[0].v_epichristoffel:
        spine_free = None
    else:
        spine_free = all(epi_factorizations(word) == [] for word in spine_words)
    return FactorizabilityReport(root, tuple(entries), spine_words, spine_free)


__all__ = [
    "Side",
    "TreeNode",
    "Fraction",
    "SBLevel",
    "SBEntry",
    "CLASSICAL_SEED",
    "mediant",
    "sb_level_stream",
    "stern_brocot_levels",
    "sb_sequence",
    "christoffel_tree",
    "epichristoffel_tree",
    "tree_levels",
    "tree_isomorphism_check",
    "diagonal",
    "l1_plus",
    "diagonal_sum_check",
    "row_successor_check",
    "path_to_tuple",
    "resolve_epichristoffel",
    "NodeClassification",
    "FactorizabilityReport",
    "classify_factorizability",
]
