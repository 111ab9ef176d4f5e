"""Christoffel and epichristoffel word machinery.

Finite words over ordered alphabets, episturmian morphisms, the tuple
reduction test for epichristoffel words, canonical factorizations, and the
Christoffel / Stern-Brocot / epichristoffel tree families.
"""

from .christoffel import (
    PathLabel,
    Slope,
    christoffel_word,
    is_christoffel,
    path_labels,
    path_points,
    standard_factorization,
)
from .epichristoffel import (
    CanonicalSplit,
    ConstructionResult,
    TStep,
    TTrace,
    admissibility,
    canonical_split,
    construct,
    epi_factorizations,
    format_trace,
    is_c_epichristoffel,
    is_epichristoffel_word,
    t_operator,
    tuples_of_length,
)
from .errors import (
    AllZeroError,
    DegenerateSlopeError,
    DimensionMismatchError,
    EmptyWordError,
    EpiwordError,
    InvalidLetterError,
    NonCoprimeError,
    NotAdmissibleError,
    NotBinaryError,
    NotEpichristoffelError,
    NotInTreeError,
    RootSelectionError,
    TrivialTupleError,
    WordLengthOverflow,
)
from .morphisms import (
    MorphismSeq,
    Psi,
    PsiBar,
    Theta,
    apply_atom,
    format_morphisms,
    is_pure_standard,
    parse_morphisms,
)
from .trees import (
    CLASSICAL_SEED,
    FactorizabilityReport,
    Fraction,
    SBLevel,
    TreeNode,
    christoffel_tree,
    classify_factorizability,
    diagonal,
    diagonal_sum_check,
    epichristoffel_tree,
    l1_plus,
    mediant,
    path_to_tuple,
    resolve_epichristoffel,
    row_successor_check,
    sb_level_stream,
    stern_brocot_levels,
    tree_isomorphism_check,
    tree_levels,
)
from .words import (
    BINARY,
    MAX_WORD_LENGTH,
    TERNARY,
    Alphabet,
    OccurrenceTuple,
    Word,
    are_conjugate,
    default_alphabet,
    factors,
    is_balanced,
    is_lyndon,
    is_primitive,
    least_rotation,
    parikh,
    rotate,
)

__version__ = "0.1.0"
