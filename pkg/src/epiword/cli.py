"""Command-line front door.

Exit codes: 0 success, 1 valid-but-negative answer (rejected tuple, no
tuples found), 2 input or domain error. EPIWORD_MAX_DEPTH caps tree depth
(default 12).
"""

from __future__ import annotations

import json
import os
import sys
from itertools import islice

import click

from .christoffel import Slope, christoffel_word, path_labels, path_points, standard_factorization
from .epichristoffel import (
    admissibility,
    canonical_split,
    construct,
    format_trace,
    tuples_of_length,
)
from .errors import EpiwordError, NonCoprimeError
from .morphisms import apply as apply_morphisms
from .morphisms import parse_morphisms
from .trees import (
    CLASSICAL_SEED,
    TreeNode,
    christoffel_tree,
    diagonal,
    epichristoffel_tree,
    path_to_tuple,
    sb_level_stream,
    stern_brocot_levels,
    tree_levels,
)
from .words import Alphabet, OccurrenceTuple, default_alphabet, parikh

DEFAULT_MAX_DEPTH = 12


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


def _parse_tuple(text: str) -> OccurrenceTuple:
    try:
        return OccurrenceTuple.parse(text)
    except ValueError as exc:
        _fail(str(exc))
        raise AssertionError  # unreachable


def _alphabet_for(k: int, symbols: str | None) -> Alphabet:
    try:
        return Alphabet(symbols) if symbols else default_alphabet(k)
    except ValueError as exc:
        _fail(str(exc))
        raise AssertionError


def _max_depth() -> int:
    raw = os.environ.get("EPIWORD_MAX_DEPTH", "")
    try:
        return int(raw) if raw else DEFAULT_MAX_DEPTH
    except ValueError:
        return DEFAULT_MAX_DEPTH


def _check_depth(depth: int) -> None:
    cap = _max_depth()
    if depth < 0:
        _fail("depth must be non-negative")
    if depth > cap:
        _fail(f"depth {depth} exceeds EPIWORD_MAX_DEPTH ({cap})")


def tree_to_dict(node: TreeNode, depth: int) -> dict:
    """JSON form of a word tree: node = {u, v, tuple, children}."""
    children = [] if depth == 0 else [tree_to_dict(c, depth - 1) for c in node.children()]
    return {
        "u": str(node.u),
        "v": str(node.v),
        "tuple": list(parikh(node.word).counts),
        "children": children,
    }


def tree_from_dict(data: dict, alphabet: Alphabet) -> TreeNode:
    """Rebuild the root node from its JSON form; children must obey the child rule."""
    node = TreeNode(alphabet.word(data["u"]), alphabet.word(data["v"]))
    children = data.get("children", [])
    if children:
        if len(children) != 2:
            raise ValueError("word-tree nodes have zero or two children")
        left = tree_from_dict(children[0], alphabet)
        right = tree_from_dict(children[1], alphabet)
        if (left, right) != node.children():
            raise ValueError(f"children of {node} do not follow the child rule")
    return node


def _render_word_tree_text(node: TreeNode, depth: int, indent: int = 0) -> list[str]:
    lines = [f"{'  ' * indent}{node}"]
    if depth > 0:
        for child in node.children():
            lines.extend(_render_word_tree_text(child, depth - 1, indent + 1))
    return lines


def _render_word_tree_dot(node: TreeNode, depth: int, name: str = "tree") -> str:
    lines = [f"digraph {name} {{"]

    def visit(n: TreeNode, node_id: str, remaining: int) -> None:
        lines.append(f'  "{node_id}" [label="{n}"];')
        if remaining > 0:
            for suffix, child in zip("LR", n.children()):
                child_id = node_id + suffix
                visit(child, child_id, remaining - 1)
                lines.append(f'  "{node_id}" -> "{child_id}";')

    visit(node, "n", depth)
    lines.append("}")
    return "\n".join(lines)


def _emit_word_tree(node: TreeNode, depth: int, fmt: str, alphabet: Alphabet) -> None:
    if fmt == "text":
        click.echo("\n".join(_render_word_tree_text(node, depth)))
    elif fmt == "json":
        payload = {"alphabet": alphabet.symbols, "root": tree_to_dict(node, depth)}
        click.echo(json.dumps(payload))
    else:
        click.echo(_render_word_tree_dot(node, depth))


def _sb_entry_str(entry) -> str:
    return str(entry)


def _emit_sb_levels(levels, fmt: str) -> None:
    if fmt == "text":
        for level in levels:
            click.echo(f"level {level.index}: " + ", ".join(_sb_entry_str(e) for e in level.entries))
    elif fmt == "json":
        payload = {"levels": [[_sb_entry_str(e) for e in level.entries] for level in levels]}
        click.echo(json.dumps(payload))
    else:
        # Level i entry p has children 2p and 2p+1 on level i+1.
        lines = ["digraph sb {"]
        for level in levels:
            for pos, entry in enumerate(level.entries):
                lines.append(f'  "n{level.index}_{pos}" [label="{_sb_entry_str(entry)}"];')
                if level.index > 1:
                    lines.append(f'  "n{level.index - 1}_{pos // 2}" -> "n{level.index}_{pos}";')
        lines.append("}")
        click.echo("\n".join(lines))


def _draw_path(slope: Slope) -> str:
    points = set(path_points(slope))
    rows = []
    for j in range(slope.a, -1, -1):
        rows.append(" ".join("*" if (i, j) in points else "." for i in range(slope.b + 1)))
    return "\n".join(rows)


@click.group()
def main() -> None:
    """Christoffel and epichristoffel word toolkit."""


@main.command("christoffel")
@click.argument("a", type=int)
@click.argument("b", type=int)
@click.option("--factorize", is_flag=True, help="Print the standard two-factor split.")
@click.option("--labels", is_flag=True, help="Print the path point labels as exact fractions.")
@click.option("--draw", is_flag=True, help="Draw the lattice path in ASCII.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.option("--alphabet", "symbols", default=None, help="Two symbols, e.g. ab.")
def christoffel_cmd(
    a: int, b: int, factorize: bool, labels: bool, draw: bool, fmt: str, symbols: str | None
) -> None:
    """Christoffel word of slope A/B."""
    alphabet = _alphabet_for(2, symbols)
    if alphabet.size != 2:
        _fail("christoffel words need a two-letter alphabet")
    try:
        slope = Slope(a, b)
    except NonCoprimeError as exc:
        _fail(str(exc))
    except ValueError as exc:
        _fail(str(exc))
    try:
        word = christoffel_word(slope, alphabet)
        split = standard_factorization(slope, alphabet) if factorize else None
        label_seq = path_labels(slope, alphabet) if labels else None
    except EpiwordError as exc:
        _fail(str(exc))
    if fmt == "json":
        payload: dict = {"slope": str(slope), "word": str(word)}
        if split:
            payload["factorization"] = [str(split[0]), str(split[1])]
        if label_seq:
            payload["labels"] = [str(l) for l in label_seq]
        click.echo(json.dumps(payload))
        return
    if not factorize and not labels and not draw:
        click.echo(str(word))
        return
    if draw:
        click.echo(_draw_path(slope))
        click.echo(str(word))
    if factorize:
        click.echo(f"({split[0]}, {split[1]})")
    if labels:
        click.echo(" ".join(str(l) for l in label_seq))


@main.command("tuple")
@click.argument("counts")
@click.option("--trace", "show_trace", is_flag=True, help="Print the reduction trace.")
@click.option("--word", "show_word", is_flag=True, help="Print the constructed and canonical words.")
@click.option("--split", "show_split", is_flag=True, help="Print the canonical two-factor split.")
@click.option("--alphabet", "symbols", default=None, help="Alphabet symbols, e.g. xyz.")
def tuple_cmd(counts: str, show_trace: bool, show_word: bool, show_split: bool, symbols: str | None) -> None:
    """Admissibility verdict for the occurrence tuple COUNTS (e.g. 1,2,4)."""
    p = _parse_tuple(counts)
    alphabet = _alphabet_for(p.k, symbols)
    try:
        trace = admissibility(p)
    except EpiwordError as exc:
        _fail(str(exc))
    except ValueError as exc:
        _fail(str(exc))
    if (show_word or show_split) and not trace.admissible:
        _fail(f"{p} is not admissible: {trace.rejection}")
    if show_trace:
        click.echo(format_trace(trace, alphabet))
        click.echo("admissible" if trace.admissible else "rejected")
    if show_word:
        result = construct(p, alphabet)
        click.echo(f"c: {result.c_word} / epi: {result.epi_word}")
    if show_split:
        try:
            split = canonical_split(p, alphabet)
        except EpiwordError as exc:
            _fail(str(exc))
        click.echo(f"({split.u}, {split.v})")
    if not (show_trace or show_word or show_split):
        click.echo("admissible" if trace.admissible else "rejected")
    if not trace.admissible:
        sys.exit(1)


@main.command("tree")
@click.argument("kind", type=click.Choice(["christoffel", "epi", "sb"]))
@click.option("--root", "root_counts", default=None, help="Root tuple for epi and sb trees.")
@click.option("--depth", type=int, default=3, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json", "dot"]), default="text")
@click.option("--alphabet", "symbols", default=None, help="Alphabet symbols, e.g. xyz.")
def tree_cmd(kind: str, root_counts: str | None, depth: int, fmt: str, symbols: str | None) -> None:
    """Emit a tree of the chosen KIND."""
    _check_depth(depth)
    if kind == "christoffel":
        alphabet = _alphabet_for(2, symbols)
        try:
            root = christoffel_tree(alphabet)
            tree_levels(root, depth)
        except EpiwordError as exc:
            _fail(str(exc))
        except ValueError as exc:
            _fail(str(exc))
        _emit_word_tree(root, depth, fmt, alphabet)
        return
    if root_counts is None and kind == "epi":
        _fail("epi trees need --root")
    if kind == "epi":
        p = _parse_tuple(root_counts)
        alphabet = _alphabet_for(p.k, symbols)
        try:
            root = epichristoffel_tree(p, alphabet)
            tree_levels(root, depth)
        except EpiwordError as exc:
            _fail(str(exc))
        _emit_word_tree(root, depth, fmt, alphabet)
        return
    # Stern-Brocot: classical fractions, or the tuple tree of an epi root.
    if root_counts is None:
        seed = CLASSICAL_SEED
    else:
        p = _parse_tuple(root_counts)
        alphabet = _alphabet_for(p.k, symbols)
        try:
            root = epichristoffel_tree(p, alphabet)
        except EpiwordError as exc:
            _fail(str(exc))
        seed = (parikh(root.u), parikh(root.v))
    try:
        levels = stern_brocot_levels(seed, depth)
    except EpiwordError as exc:
        _fail(str(exc))
    _emit_sb_levels(levels, fmt)


@main.command("find")
@click.option("--root", "root_counts", required=True, help="Root tuple of the tree.")
@click.option("--target", "target_counts", required=True, help="Tuple to locate.")
@click.option("--alphabet", "symbols", default=None, help="Alphabet symbols, e.g. xyz.")
def find_cmd(root_counts: str, target_counts: str, symbols: str | None) -> None:
    """Path from the tree root to TARGET and the word found there."""
    p = _parse_tuple(root_counts)
    target = _parse_tuple(target_counts)
    alphabet = _alphabet_for(p.k, symbols)
    try:
        path = path_to_tuple(p, target, alphabet)
        node = epichristoffel_tree(p, alphabet)
        for step in path:
            node = node.left() if step == "L" else node.right()
    except EpiwordError as exc:
        _fail(str(exc))
    click.echo(" ".join(path) if path else "(root)")
    click.echo(str(node.word))


@main.command("exists")
@click.option("--length", "n", type=int, required=True)
@click.option("--k", type=int, default=3, show_default=True)
@click.option("--all-letters", is_flag=True, help="Require every letter to occur.")
@click.option("--max", "limit", type=int, default=None, help="Print at most this many tuples.")
def exists_cmd(n: int, k: int, all_letters: bool, limit: int | None) -> None:
    """List admissible K-tuples whose entries sum to LENGTH."""
    if n < 1 or k < 2:
        _fail("need --length >= 1 and --k >= 2")
    found = tuples_of_length(n, k, all_letters)
    for p in found if limit is None else found[:limit]:
        click.echo(",".join(str(c) for c in p.counts))
    if not found:
        sys.exit(1)


@main.command("apply")
@click.argument("morphisms")
@click.argument("word")
@click.option("--alphabet", "symbols", default="xyz", show_default=True)
def apply_cmd(morphisms: str, word: str, symbols: str) -> None:
    """Apply a morphism sequence such as "psi_y psi_z psi_y" to WORD."""
    alphabet = _alphabet_for(len(symbols), symbols)
    try:
        seq = parse_morphisms(morphisms, alphabet)
        image = apply_morphisms(seq, alphabet.word(word))
    except (EpiwordError, ValueError) as exc:
        _fail(str(exc))
    click.echo(str(image))


@main.command("diagonal")
@click.option("--side", type=click.Choice(["L", "R"]), required=True)
@click.option("--k", type=int, required=True)
@click.option("--count", type=int, default=5, show_default=True)
@click.option("--root", "root_counts", default=None, help="Tuple tree root; omit for fractions.")
@click.option("--alphabet", "symbols", default=None, help="Alphabet symbols, e.g. xyz.")
def diagonal_cmd(side: str, k: int, count: int, root_counts: str | None, symbols: str | None) -> None:
    """Stream diagonal entries of a Stern-Brocot tree, one per line."""
    if k < 1 or count < 1:
        _fail("need --k >= 1 and --count >= 1")
    if root_counts is None:
        seed = CLASSICAL_SEED
    else:
        p = _parse_tuple(root_counts)
        alphabet = _alphabet_for(p.k, symbols)
        try:
            root = epichristoffel_tree(p, alphabet)
        except EpiwordError as exc:
            _fail(str(exc))
        seed = (parikh(root.u), parikh(root.v))
    for entry in islice(diagonal(sb_level_stream(seed), side, k), count):
        click.echo(str(entry))


if __name__ == "__main__":
    main()
