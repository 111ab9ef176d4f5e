"""Acceptance suite: one test and one printed pass/fail line per criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""

from itertools import product
from math import gcd

from epiword import (
    BINARY,
    CLASSICAL_SEED,
    OccurrenceTuple,
    Slope,
    TERNARY,
    Word,
    admissibility,
    canonical_split,
    christoffel_word,
    classify_factorizability,
    construct,
    diagonal_sum_check,
    epi_factorizations,
    epichristoffel_tree,
    is_balanced,
    is_c_epichristoffel,
    is_christoffel,
    is_epichristoffel_word,
    is_lyndon,
    least_rotation,
    parikh,
    path_to_tuple,
    resolve_epichristoffel,
    standard_factorization,
    stern_brocot_levels,
    tree_isomorphism_check,
    tree_levels,
    tuples_of_length,
)
from epiword.trees import sb_sequence
from oracles import geometric_christoffel, naive_least_rotation

T = OccurrenceTuple

# Frozen from the first enumeration run: number of admissible all-letters
# 3-tuples summing to n, for n = 4..60.
ADMISSIBLE_COUNTS_4_TO_60 = [
    3, 0, 9, 6, 9, 6, 27, 12, 27, 18, 27, 30, 51, 24, 63, 48, 45, 48, 93, 48,
    81, 66, 99, 78, 129, 72, 117, 126, 111, 102, 165, 114, 177, 150, 165, 144,
    207, 132, 219, 186, 183, 186, 321, 180, 243, 216, 243, 246, 333, 198, 279,
    318, 291, 276, 411, 276, 363,
]


def _report(number: int, label: str, failures: list[str]) -> None:
    verdict = "PASS" if not failures else "FAIL"
    print(f"[criterion {number:02d}] {label}: {verdict}")
    assert not failures, f"criterion {number} ({label}): " + "; ".join(failures[:10])


def _expect(failures: list[str], actual, expected, label: str) -> None:
    if actual != expected:
        failures.append(f"{label}: expected {expected!r}, got {actual!r}")


def test_criterion_01_worked_example_goldens():
    failures: list[str] = []
    _expect(failures, str(christoffel_word(Slope(1, 1))), "xy", "word of slope 1/1")
    _expect(
        failures,
        tuple(map(str, standard_factorization(Slope(1, 1)))),
        ("x", "y"),
        "split of slope 1/1",
    )

    bad = admissibility(T((2, 3, 7)))
    _expect(failures, bad.admissible, False, "(2,3,7) verdict")
    _expect(
        failures,
        [s.after.counts for s in bad.steps],
        [(2, 3, 2), (2, -1, 2)],
        "(2,3,7) trace",
    )
    good = admissibility(T((1, 4, 2)))
    _expect(failures, good.admissible, True, "(1,4,2) verdict")
    _expect(
        failures,
        [s.after.counts for s in good.steps],
        [(1, 1, 2), (1, 1, 0), (1, 0, 0)],
        "(1,4,2) trace",
    )

    r = construct(T((1, 4, 2)))
    _expect(failures, (str(r.c_word), str(r.epi_word)), ("yzyyzyx", "xyzyyzy"), "construct (1,4,2)")
    s = canonical_split(T((1, 4, 2)))
    _expect(failures, (str(s.u), str(s.v)), ("yzy", "yzyx"), "split (1,4,2)")

    r = construct(T((1, 2, 4)))
    _expect(failures, (str(r.c_word), str(r.epi_word)), ("zyzzyzx", "xzyzzyz"), "construct (1,2,4)")
    s = canonical_split(T((1, 2, 4)))
    _expect(failures, (str(s.u), str(s.v)), ("zyz", "zyzx"), "split (1,2,4)")
    _expect(failures, str(epichristoffel_tree(T((1, 2, 4)))), "(xzyz, zyz)", "root (1,2,4)")

    r = construct(T((3, 2, 1)))
    _expect(failures, str(r.epi_word), "xyxyxz", "word (3,2,1)")
    _expect(failures, str(epichristoffel_tree(T((3, 2, 1)))), "(xy, xyxz)", "root (3,2,1)")

    _expect(failures, path_to_tuple(T((1, 2, 4)), T((3, 8, 16))), ["R", "L", "R"], "path to (3,8,16)")
    _expect(
        failures,
        str(resolve_epichristoffel(T((1, 2, 4)), T((3, 8, 16)))),
        "xzyzzyzxzyzzyzzyzxzyzzyzzyz",
        "word at (3,8,16)",
    )
    _expect(
        failures,
        str(construct(T((3, 8, 16))).c_word),
        "zyzzyzxzyzzyzzyzxzyzzyzzyzx",
        "construct (3,8,16)",
    )

    levels = stern_brocot_levels(CLASSICAL_SEED, 4)
    _expect(failures, [str(f) for f in levels[0].entries], ["1/1"], "row 1")
    _expect(failures, [str(f) for f in levels[1].entries], ["1/2", "2/1"], "row 2")
    _expect(failures, [str(f) for f in levels[2].entries], ["1/3", "2/3", "3/2", "3/1"], "row 3")
    _expect(
        failures,
        [str(f) for f in levels[3].entries],
        ["1/4", "2/5", "3/5", "3/4", "4/3", "5/3", "5/2", "4/1"],
        "row 4",
    )
    seed = (T((1, 1, 2)), T((0, 1, 2)))
    _expect(
        failures,
        [e.counts for e in sb_sequence(seed, 0)],
        [(1, 1, 2), (0, 1, 2)],
        "tuple row 0",
    )
    _expect(
        failures,
        [e.counts for e in sb_sequence(seed, 1)],
        [(1, 1, 2), (1, 2, 4), (0, 1, 2)],
        "tuple row 1",
    )
    _expect(
        failures,
        [e.counts for e in sb_sequence(seed, 2)],
        [(1, 1, 2), (2, 3, 6), (1, 2, 4), (1, 3, 6), (0, 1, 2)],
        "tuple row 2",
    )

    _expect(failures, epi_factorizations(TERNARY.word("xzyzzyz")), [], "xzyzzyz has no split")
    _report(1, "worked-example goldens", failures)


def test_criterion_02_balanced_lyndon_equivalence():
    failures: list[str] = []
    christoffel_letters = set()
    for total in range(1, 13):
        for a in range(total + 1):
            if gcd(a, total - a) == 1:
                christoffel_letters.add(christoffel_word(Slope(a, total - a)).letters)
    for n in range(1, 13):
        for letters in product(range(2), repeat=n):
            w = Word(letters, BINARY)
            via_slope = is_christoffel(w)
            via_properties = is_balanced(w) and is_lyndon(w)
            if via_slope != via_properties or via_slope != (letters in christoffel_letters):
                failures.append(f"mismatch at {w}")
    _report(2, "balanced Lyndon equivalence, binary words to length 12", failures)


def test_criterion_03_split_and_extension_properties():
    failures: list[str] = []
    checked = 0
    for total in range(2, 26):
        for a in range(total + 1):
            for b in range(total - a + 1):
                p = T((a, b, total - a - b))
                if not admissibility(p).admissible:
                    continue
                s = canonical_split(p)
                checked += 1
                if not is_c_epichristoffel(s.u):
                    failures.append(f"u not c-epichristoffel for {p}")
                if not is_c_epichristoffel(s.v):
                    failures.append(f"v not c-epichristoffel for {p}")
                for stretched in (s.u + s.u + s.v, s.u + s.v + s.v):
                    if not is_epichristoffel_word(least_rotation(stretched)[0]):
                        failures.append(f"extension failed for {p}")
    assert checked > 100
    _report(3, f"split properties over {checked} admissible tuples", failures)


def test_criterion_04_tree_words_are_epichristoffel():
    failures: list[str] = []
    for counts in ((1, 2, 4), (3, 2, 1)):
        for level in tree_levels(epichristoffel_tree(T(counts)), 5):
            for node in level:
                if not is_epichristoffel_word(node.word):
                    failures.append(f"{node} in the {counts} tree is not epichristoffel")
                if not node.u < node.v:
                    failures.append(f"{node} in the {counts} tree is not ordered")
    _report(4, "epichristoffel trees to depth 5", failures)


def test_criterion_05_tree_isomorphism():
    failures: list[str] = []
    if not tree_isomorphism_check(6):
        failures.append("fraction map mismatch within depth 6")
    _report(5, "Christoffel/Stern-Brocot isomorphism to depth 6", failures)


def test_criterion_06_lengths_with_all_letters():
    failures: list[str] = []
    counts = [len(tuples_of_length(n, 3, True)) for n in range(4, 61)]
    _expect(failures, counts, ADMISSIBLE_COUNTS_4_TO_60, "admissible counts 4..60")
    _expect(failures, counts[1], 0, "length 5 has none")
    for n, c in zip(range(4, 61), counts):
        if n != 5 and c < 1:
            failures.append(f"no admissible tuple of length {n}")
    _report(6, "every length 4..60 except 5 is realized", failures)


def test_criterion_07_diagonal_sums():
    failures: list[str] = []
    if not diagonal_sum_check(1, 6):
        failures.append("diagonals 2 and 3 from diagonal 1")
    if not diagonal_sum_check(3, 6):
        failures.append("diagonals 6 and 7 from diagonals 3 and 2")
    for k in range(1, 13):
        if not diagonal_sum_check(k, 5):
            failures.append(f"diagonal sums for k={k}")
    _report(7, "left-diagonal mediant sums", failures)


def test_criterion_08_factorizability_subclasses():
    failures: list[str] = []
    report = classify_factorizability(T((1, 2, 4)), 3)
    if len(report.right_spine_words) != 4:
        failures.append("expected 4 right-spine words")
    for word in report.right_spine_words:
        if epi_factorizations(word) != []:
            failures.append(f"{word} unexpectedly splits")
    if report.right_spine_unfactorizable is not True:
        failures.append("right spine of the (1,2,4) tree should be split-free")
    if not classify_factorizability(T((3, 2, 1)), 3).all_factorizable:
        failures.append("(3,2,1) tree should be all-factorizable to depth 3")
    _report(8, "factorizable and unfactorizable subclasses", failures)


def test_criterion_09_oracle_cross_checks():
    failures: list[str] = []
    for n in range(1, 11):
        for letters in product(range(3), repeat=n):
            w = Word(letters, TERNARY)
            if least_rotation(w) != naive_least_rotation(w):
                failures.append(f"rotation mismatch at {w}")
                break
    for total in range(1, 15):
        for a in range(total + 1):
            b = total - a
            if gcd(a, b) != 1:
                continue
            if christoffel_word(Slope(a, b)) != geometric_christoffel(a, b):
                failures.append(f"path mismatch at slope {a}/{b}")
    _report(9, "rotation and lattice-path oracles", failures)


def test_criterion_10_tie_break_independence():
    failures: list[str] = []
    checked = 0
    for k in (3, 4):
        for total in range(1, 21):
            for counts in product(range(total + 1), repeat=k - 1):
                rest = total - sum(counts)
                if rest < 0:
                    continue
                p = T(counts + (rest,))
                checked += 1
                verdicts = {
                    admissibility(p, tie_break=rule).admissible
                    for rule in ("smallest", "largest", "recent")
                }
                if len(verdicts) != 1:
                    failures.append(f"verdict depends on tie-break for {p}")
    assert checked > 10000
    _report(10, f"tie-break independence over {checked} tuples", failures)
