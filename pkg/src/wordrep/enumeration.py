"""Exhaustive search over representing words: brute-force oracles,
representation numbers, minimal-length words and square-free
representants of complete graphs."""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations
from typing import Optional

from .errors import BudgetExceeded, CapExceeded, InvalidGraph, OverlappingAlphabets
from .words import Graph, Word, letter_key

__all__ = [
    "SearchBudget",
    "all_representing_words",
    "k_uniform_words",
    "representation_number",
    "minimal_length_words",
    "squarefree_words_for_complete",
    "squarefree_representants",
    "check_no_squarefree_2uniform_for_complete_union",
    "shortlex_key",
]


@dataclass(frozen=True)
class SearchBudget:
    max_length: int = 12
    max_k: int = 3
    node_limit: int = 5_000_000

    def __post_init__(self):
        if min(self.max_length, self.max_k, self.node_limit) <= 0:
            raise ValueError("budget fields must be positive")


def shortlex_key(w: Word):
    return (len(w), [letter_key(x) for x in w])


class _Search:
    """Depth-first word builder that tracks which letter pairs have stopped
    alternating.

    Appending z breaks the pair {z, y} exactly when z already occurred and
    y has not occurred since the last z.
    """

    def __init__(self, g: Graph, node_limit: int):
        if not g.vertices:
            raise InvalidGraph("graph has no vertices")
        self.letters = g.sorted_vertices()
        n = self.n = len(self.letters)
        idx = {x: i for i, x in enumerate(self.letters)}
        self.adj = [[False] * n for _ in range(n)]
        for u, v in g.sorted_edges():
            self.adj[idx[u]][idx[v]] = self.adj[idx[v]][idx[u]] = True
        self.n_nonedges = n * (n - 1) // 2 - len(g.edges)
        self.node_limit = node_limit
        self.nodes = 0
        self.reset()

    def reset(self):
        n = self.n
        self.word = []
        self.last = [-1] * n
        self.count = [0] * n
        self.broken = [[False] * n for _ in range(n)]
        self.broken_nonedges = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.node_limit:
            raise BudgetExceeded(f"node limit {self.node_limit} exceeded")

    def push(self, z: int):
        """Append z; return the pairs it broke, or None if an edge broke."""
        newly = []
        p = self.last[z]
        if p >= 0:
            row = self.broken[z]
            for y in range(self.n):
                if y != z and not row[y] and self.last[y] < p:
                    if self.adj[z][y]:
                        return None
                    newly.append(y)
        for y in newly:
            self.broken[z][y] = self.broken[y][z] = True
        self.broken_nonedges += len(newly)
        self.word.append(z)
        self.count[z] += 1
        prev = self.last[z]
        self.last[z] = len(self.word) - 1
        return newly, prev

    def pop(self, token):
        newly, prev = token
        z = self.word.pop()
        self.count[z] -= 1
        self.last[z] = prev
        for y in newly:
            self.broken[z][y] = self.broken[y][z] = False
        self.broken_nonedges -= len(newly)

    def complete(self) -> bool:
        return self.broken_nonedges == self.n_nonedges and all(self.count)

    def current(self) -> Word:
        return Word(self.letters[i] for i in self.word)


def all_representing_words(g: Graph, max_length: int, budget: Optional[SearchBudget] = None,
                           exact_length: bool = False) -> list:
    """Every word of length <= max_length (or == with `exact_length`) that
    represents `g`, in shortlex order."""
    budget = budget or SearchBudget()
    s = _Search(g, budget.node_limit)
    out = []

    def rec():
        s.tick()
        size = len(s.word)
        if s.complete() and (not exact_length or size == max_length):
            out.append(s.current())
        remaining = max_length - size
        missing = s.count.count(0)
        if remaining == 0 or remaining < missing:
            return
        for z in range(s.n):
            token = s.push(z)
            if token is not None:
                rec()
                s.pop(token)

    rec()
    return sorted(out, key=shortlex_key)


def _uniform_search(g: Graph, k: int, node_limit: int, first: Optional[int] = None,
                    stop_at_first: bool = False) -> list:
    s = _Search(g, node_limit)
    total = k * s.n
    out = []

    def rec() -> bool:
        s.tick()
        if len(s.word) == total:
            if s.broken_nonedges == s.n_nonedges:
                out.append(s.current())
                return stop_at_first
            return False
        choices = (first,) if not s.word and first is not None else range(s.n)
        for z in choices:
            if s.count[z] == k:
                continue
            token = s.push(z)
            if token is None:
                continue
            # a non-edge whose letters are both used up can no longer break
            dead = s.count[z] == k and any(
                s.count[y] == k and not s.adj[z][y] and not s.broken[z][y]
                for y in range(s.n) if y != z
            )
            found = not dead and rec()
            s.pop(token)
            if found:
                return True
        return False

    rec()
    return out


def k_uniform_words(g: Graph, k: int, budget: Optional[SearchBudget] = None) -> list:
    """All k-uniform words representing `g`, in lexicographic order."""
    if k < 1:
        raise ValueError("k must be positive")
    budget = budget or SearchBudget()
    return sorted(_uniform_search(g, k, budget.node_limit), key=shortlex_key)


def representation_number(g: Graph, budget: Optional[SearchBudget] = None) -> Optional[int]:
    """Least k <= budget.max_k admitting a k-uniform representant, else None.

    Rotations of uniform representants still represent, so the search
    fixes the first letter to the least vertex.
    """
    budget = budget or SearchBudget()
    for k in range(1, budget.max_k + 1):
        if _uniform_search(g, k, budget.node_limit, first=0, stop_at_first=True):
            return k
    return None


def minimal_length_words(g: Graph, budget: Optional[SearchBudget] = None):
    """(L, words): the least length of a representant and all representants
    of that length."""
    budget = budget or SearchBudget()
    for length in range(len(g.vertices), budget.max_length + 1):
        words = all_representing_words(g, length, budget, exact_length=True)
        if words:
            return length, words
    raise BudgetExceeded(f"no representant up to length {budget.max_length}")


def squarefree_words_for_complete(n: int, cap: int = 7):
    """All square-free representants of K_n on letters 1..n: a permutation
    followed by one of its proper prefixes. Returns (words, count)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        raise CapExceeded(f"n={n} above cap {cap}")
    letters = [str(i) for i in range(1, n + 1)]
    words = [Word(p + p[:j]) for p in permutations(letters) for j in range(n)]
    words.sort(key=shortlex_key)
    return words, len(words)


def _has_square_suffix(word: list) -> bool:
    size = len(word)
    for p in range(1, size // 2 + 1):
        if word[size - 2 * p:size - p] == word[size - p:]:
            return True
    return False


def squarefree_representants(g: Graph, node_limit: int = 1_000_000, max_length: int = 400):
    """Exhaust every square-free word in which no edge pair has stopped
    alternating.

    Both properties are closed under taking prefixes, so the search tree is
    exactly the set of such words; it is finite precisely when `g` has
    finitely many square-free representants. Returns (representants in
    shortlex order, length of the longest word in the tree). Raises
    BudgetExceeded if the tree has more than `node_limit` nodes or a word
    longer than `max_length`.
    """
    s = _Search(g, node_limit)
    out = []
    longest = 0

    def rec():
        nonlocal longest
        s.tick()
        longest = max(longest, len(s.word))
        if longest > max_length:
            raise BudgetExceeded(f"square-free words longer than {max_length}")
        if s.complete():
            out.append(s.current())
        for z in range(s.n):
            token = s.push(z)
            if token is None:
                continue
            if not _has_square_suffix(s.word):
                rec()
            s.pop(token)

    rec()
    return sorted(out, key=shortlex_key), longest


def check_no_squarefree_2uniform_for_complete_union(components: list, max_vertices: int = 6) -> bool:
    """True iff no square-free 2-uniform word represents the disjoint union
    of the given complete graphs."""
    from .squares import is_square_free

    if len(components) < 2:
        raise InvalidGraph("need at least two components")
    union = Graph()
    for comp in components:
        if not comp.is_complete():
            raise InvalidGraph("every component must be complete")
        if union.vertices & comp.vertices:
            raise OverlappingAlphabets("components share vertices")
        union = union.union(comp)
    if len(union.vertices) > max_vertices:
        raise CapExceeded(f"{len(union.vertices)} vertices above cap {max_vertices}")
    limit = 10 * math.factorial(2 * len(union.vertices))
    return not any(is_square_free(w) for w in _uniform_search(union, 2, limit))
