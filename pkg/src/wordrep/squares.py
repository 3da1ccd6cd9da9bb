"""Square detection and square elimination for representants of connected
graphs."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional

import numpy as np

from .errors import DoesNotRepresent, NotConnected
from .words import Graph, Word, initial_permutation, represents

__all__ = [
    "SquareOccurrence",
    "Violation",
    "iter_squares",
    "find_first_square",
    "is_square_free",
    "desquare",
    "diag_square_support",
    "diag_occurrence_balance",
]


@dataclass(frozen=True)
class SquareOccurrence:
    start: int  # 1-based
    root: Word

    @property
    def trivial(self) -> bool:
        return len(self.root) == 1

    @property
    def end(self) -> int:
        """1-based position of the last letter of the square."""
        return self.start + 2 * len(self.root) - 1


class Violation(NamedTuple):
    square: SquareOccurrence
    detail: str


def _codes(w) -> np.ndarray:
    index = {}
    return np.fromiter((index.setdefault(x, len(index)) for x in w), dtype=np.int64, count=len(w))


def _square_starts(a: np.ndarray, p: int) -> np.ndarray:
    """0-based starts i with a[i:i+p] == a[i+p:i+2p]."""
    eq = (a[:-p] == a[p:]).astype(np.int64)
    cs = np.concatenate(([0], np.cumsum(eq)))
    window = cs[p:] - cs[:-p]
    return np.flatnonzero(window == p)


def iter_squares(w: Word) -> Iterator[SquareOccurrence]:
    """Every square occurrence, ordered by start then root length."""
    w = Word(w)
    a = _codes(w)
    found = []
    for p in range(1, len(w) // 2 + 1):
        found.extend((int(i), p) for i in _square_starts(a, p))
    for i, p in sorted(found):
        yield SquareOccurrence(i + 1, w[i:i + p])


def find_first_square(w: Word) -> Optional[SquareOccurrence]:
    """Leftmost square; among those, the one with the shortest root."""
    w = Word(w)
    a = _codes(w)
    best = None
    for p in range(1, len(w) // 2 + 1):
        if best is not None and best[0] == 0:
            break
        hits = _square_starts(a, p)
        if hits.size and (best is None or hits[0] < best[0]):
            best = (int(hits[0]), p)
    if best is None:
        return None
    i, p = best
    return SquareOccurrence(i + 1, w[i:i + p])


def is_square_free(w: Word) -> bool:
    a = _codes(w)
    return not any(_square_starts(a, p).size for p in range(1, len(a) // 2 + 1))


def _check_connected_representant(w: Word, g: Graph) -> None:
    if not g.is_connected():
        raise NotConnected("graph must be connected with at least one vertex")
    if not represents(w, g):
        raise DoesNotRepresent(f"{w} does not represent the given graph")


def desquare(w: Word, g: Graph) -> Word:
    """Remove squares from a representant of a connected graph.

    Repeatedly takes the first square XX and replaces it by X when X is a
    permutation of its letters, otherwise by X followed by its initial
    permutation. Every replacement shortens the word.
    """
    w = Word(w)
    _check_connected_representant(w, g)
    while True:
        sq = find_first_square(w)
        if sq is None:
            return w
        i, x = sq.start - 1, sq.root
        if len(set(x)) == len(x):
            middle = x
        else:
            middle = x + initial_permutation(x)
        w = w[:i] + middle + w[i + 2 * len(x):]


def diag_square_support(w: Word, g: Graph) -> list:
    """Squares whose root misses some vertex of `g` (expected: none)."""
    w = Word(w)
    _check_connected_representant(w, g)
    return [
        Violation(sq, "root misses " + " ".join(sorted(g.vertices - sq.root.alphabet)))
        for sq in iter_squares(w)
        if sq.root.alphabet != g.vertices
    ]


def diag_occurrence_balance(w: Word, g: Graph) -> list:
    """(square, edge) pairs whose endpoints occur unequally often in the root."""
    w = Word(w)
    _check_connected_representant(w, g)
    out = []
    for sq in iter_squares(w):
        counts = sq.root.counts()
        for u, v in g.sorted_edges():
            if counts[u] != counts[v]:
                out.append(Violation(sq, f"edge {u} {v}: {counts[u]} != {counts[v]}"))
    return out
