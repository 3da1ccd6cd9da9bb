"""Constructions of square-free representants: extension by the ternary
Thue-Morse stream, words for disconnected graphs, and words for edgeless
graphs."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BlocksNotDistinct,
    CompleteGraph,
    CompleteGraphUnbounded,
    ComponentComplete,
    ComponentNotRepresented,
    DoesNotRepresent,
    NoEdgedComponent,
    NoSquareFreeRepresentation,
    NotConnected,
    NotSquareFree,
    NotUniform,
    OverlappingAlphabets,
)
from .squares import is_square_free
from .thue_morse import squarefree_ternary
from .words import (
    Graph,
    Word,
    cyclic_shift,
    final_permutation,
    first_letter,
    initial_permutation,
    is_permutation,
    ith_permutation,
    last_letter,
    represents,
    uniformity,
)

__all__ = [
    "ExtensionBlocks",
    "normalize_no_perm_suffix",
    "normalize_distinct_outer_perms",
    "build_blocks",
    "extend",
    "disconnected_word",
    "disconnected_word_short",
    "empty_graph_word",
]


@dataclass(frozen=True)
class ExtensionBlocks:
    """Images of the ternary symbols 2, 1, 0, plus the word they extend."""

    block_for_2: Word
    block_for_1: Word
    block_for_0: Word
    base: Word

    def __post_init__(self):
        blocks = self.blocks()
        if len(set(blocks)) != 3:
            raise BlocksNotDistinct(f"blocks {' '.join(map(str, blocks))} are not pairwise distinct")
        for a in blocks:
            for b in blocks:
                if a != b and last_letter(a) == first_letter(b):
                    raise BlocksNotDistinct(f"block {a} followed by {b} makes a trivial square")

    def blocks(self) -> tuple:
        return self.block_for_2, self.block_for_1, self.block_for_0

    def image(self, symbol) -> Word:
        return {"2": self.block_for_2, "1": self.block_for_1, "0": self.block_for_0}[str(symbol)]

    def apply(self, ternary) -> Word:
        out = []
        for s in ternary:
            out.extend(self.image(s))
        return Word(out)


def _uniform_representant(w: Word, g: Graph, min_k: int = 2) -> int:
    k = uniformity(w)
    if k is None or k < min_k:
        raise NotUniform(f"{w} must be k-uniform with k >= {min_k}")
    if not represents(w, g):
        raise DoesNotRepresent(f"{w} does not represent the given graph")
    return k


def normalize_no_perm_suffix(w: Word, g: Graph) -> Word:
    """Rotate a uniform representant so its last n letters are not a
    permutation of the vertices.

    The shortest suffix whose removal leaves a non-permutation tail is moved
    to the front; for square-free inputs it has at most n letters.
    """
    w = Word(w)
    _uniform_representant(w, g)
    n = len(g.vertices)
    size = len(w)
    if not is_permutation(w[size - n:], g.vertices):
        return w
    for j in range(1, n + 1):
        if not is_permutation(w[:size - j][-n:], g.vertices):
            return cyclic_shift(w, size - j)
    raise NotSquareFree(f"{w} ends in a repeated permutation")


def normalize_distinct_outer_perms(w: Word, g: Graph) -> Word:
    """Make the initial and final permutations of a 2-uniform representant
    differ, rotating the last letter to the front if they coincide."""
    w = Word(w)
    if uniformity(w) != 2:
        raise NotUniform(f"{w} is not 2-uniform")
    if not represents(w, g):
        raise DoesNotRepresent(f"{w} does not represent the given graph")
    if g.is_complete():
        raise CompleteGraph("complete graphs have no such representant")
    if not g.is_connected():
        raise NotConnected("graph must be connected")
    if initial_permutation(w) != final_permutation(w):
        return w
    return cyclic_shift(w, len(w) - 1)


def build_blocks(w: Word, g: Graph) -> ExtensionBlocks:
    w = Word(w)
    k = _uniform_representant(w, g)
    if not g.is_connected():
        raise NotConnected("graph must be connected")
    if k == 2:
        w = normalize_distinct_outer_perms(w, g)
        return ExtensionBlocks(initial_permutation(w), final_permutation(w), w, w)
    return ExtensionBlocks(ith_permutation(w, 1), ith_permutation(w, 2), ith_permutation(w, 3), w)


def extend(w: Word, g: Graph, blocks: int) -> Word:
    """Append the block images of the first `blocks` ternary symbols to a
    normalized copy of `w`.

    For k >= 3 the word is first rotated off any trailing permutation and
    the blocks are its first three occurrence permutations; for k = 2 the
    blocks are the initial and final permutations and the word itself.
    The result always represents `g`. It is square-free only when the
    blocks admit it: the path on three vertices, for one, has finitely
    many square-free representants, so long extensions of it must contain
    squares.
    """
    w = Word(w)
    if blocks < 0:
        raise ValueError("number of blocks must be non-negative")
    if g.is_complete():
        raise CompleteGraphUnbounded("square-free representants of complete graphs have length < 2n")
    if not g.is_connected():
        raise NotConnected("graph must be connected")
    k = _uniform_representant(w, g)
    if not is_square_free(w):
        raise NotSquareFree(f"{w} contains a square")
    if k >= 3:
        w = normalize_no_perm_suffix(w, g)
    ext = build_blocks(w, g)
    return ext.base + ext.apply(squarefree_ternary(blocks))


def _check_components(components) -> list:
    comps = [(g, Word(w)) for g, w in components]
    seen = set()
    for g, w in comps:
        if seen & g.vertices:
            raise OverlappingAlphabets("component vertex sets overlap")
        seen |= g.vertices
        if not g.is_connected():
            raise NotConnected("every component must be connected")
        if not represents(w, g):
            raise ComponentNotRepresented(f"{w} does not represent its component")
        if not is_square_free(w):
            raise NotSquareFree(f"component word {w} contains a square")
    return comps


def _cat(words) -> Word:
    out = []
    for w in words:
        out.extend(w)
    return Word(out)


def disconnected_word(components) -> Word:
    """Square-free representant of a disjoint union from square-free
    representants (graph, word) of its connected components.

    A component with an edge is moved to the front; the rest keep their
    order.
    """
    comps = _check_components(components)
    edged = next((i for i, (g, _) in enumerate(comps) if g.edges), None)
    if edged is None:
        raise NoEdgedComponent("no component has an edge; use empty_graph_word")
    comps.insert(0, comps.pop(edged))
    words = [w for _, w in comps]
    w1, rest = words[0], words[1:]
    tail = last_letter(w1)
    finals = [final_permutation(w) for w in rest]
    return _cat(
        [w1[:-1]] + rest + [Word([tail])] + finals[::-1]
        + [final_permutation(w1)[:-1]] + finals + [Word([tail])]
    )


def disconnected_word_short(components, j: int) -> Word:
    """Shorter variant: all component words, then the final permutation of
    component j (1-based, non-complete with a uniform word), then the final
    permutations of the others in reverse order.

    The word of component j is first rotated off any trailing permutation;
    otherwise it would end in its own final permutation and the repeat
    would form a square.
    """
    comps = _check_components(components)
    if not 1 <= j <= len(comps):
        raise IndexError(f"component index {j} outside 1..{len(comps)}")
    gj, wj = comps[j - 1]
    if gj.is_complete():
        raise ComponentComplete(f"component {j} is complete")
    if uniformity(wj) is None:
        raise NotUniform(f"component word {wj} is not uniform")
    wj = normalize_no_perm_suffix(wj, gj)
    comps[j - 1] = (gj, wj)
    words = [w for _, w in comps]
    others = [final_permutation(w) for i, w in enumerate(words) if i != j - 1]
    return _cat(words + [final_permutation(wj)] + others[::-1])


def empty_graph_word(n: int) -> Word:
    """Square-free representant of the edgeless graph on vertices 1..n."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return Word("1")
    if n == 2:
        raise NoSquareFreeRepresentation("O_2")
    if n == 3:
        # the general pattern degenerates to 2112321 here
        return Word("121312313")
    head = [2, 1] + list(range(3, n))
    return Word(head + list(range(1, n)) + [n] + list(range(n - 1, 0, -1)))
