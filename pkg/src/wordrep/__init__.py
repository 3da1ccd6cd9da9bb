"""Square-free word-representants of graphs."""
from .constructions import (
    ExtensionBlocks,
    build_blocks,
    disconnected_word,
    disconnected_word_short,
    empty_graph_word,
    extend,
    normalize_distinct_outer_perms,
    normalize_no_perm_suffix,
)
from .enumeration import (
    SearchBudget,
    all_representing_words,
    check_no_squarefree_2uniform_for_complete_union,
    k_uniform_words,
    minimal_length_words,
    representation_number,
    squarefree_representants,
    squarefree_words_for_complete,
)
from .errors import *  # noqa: F401,F403
from .squares import (
    SquareOccurrence,
    desquare,
    diag_occurrence_balance,
    diag_square_support,
    find_first_square,
    is_square_free,
    iter_squares,
)
from .thue_morse import TernaryStream, squarefree_ternary, thue_morse_bit, thue_morse_bits
from .words import (
    Graph,
    Word,
    alternates,
    cyclic_shift,
    derive_graph,
    final_permutation,
    first_letter,
    format_graph,
    initial_permutation,
    ith_permutation,
    last_letter,
    parse_graph,
    parse_word,
    prefix,
    prepend_initial,
    represents,
    restrict,
    uniformity,
)

__version__ = "0.1.0"
