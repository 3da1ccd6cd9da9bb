"""Words over vertex alphabets, simple graphs, and the alternation semantics
linking them.

A word represents a graph when its alphabet is the vertex set and two
distinct letters alternate in the word exactly when the vertices are
adjacent.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .errors import (
    EmptyWord,
    IndexOutOfRange,
    InvalidGraph,
    LengthOutOfRange,
    LetterAbsent,
    NotUniform,
    PositionOutOfRange,
    SameLetter,
)

__all__ = [
    "Word",
    "Graph",
    "letter_key",
    "parse_word",
    "parse_graph",
    "format_graph",
    "restrict",
    "alternates",
    "derive_graph",
    "represents",
    "uniformity",
    "initial_permutation",
    "final_permutation",
    "ith_permutation",
    "is_permutation",
    "cyclic_shift",
    "prepend_initial",
    "first_letter",
    "last_letter",
    "prefix",
]


def letter_key(letter: str):
    """Sort key: numeric tokens numerically, and before all other tokens."""
    if letter.isdigit():
        return (0, int(letter), letter)
    return (1, 0, letter)


class Word(tuple):
    """An immutable sequence of letters.

    Letters are stored as strings. ``Word("121323")`` splits a string per
    character; use :func:`parse_word` for separated multi-character tokens.
    """

    def __new__(cls, letters: Iterable = ()):
        return super().__new__(cls, (str(x) for x in letters))

    @property
    def alphabet(self) -> frozenset:
        return frozenset(self)

    def counts(self) -> Counter:
        return Counter(self)

    def occurrence(self, letter: str, j: int) -> int:
        """0-based position of the j-th (1-based) occurrence of `letter`."""
        seen = 0
        for pos, x in enumerate(self):
            if x == letter:
                seen += 1
                if seen == j:
                    return pos
        raise IndexOutOfRange(f"letter {letter!r} occurs {seen} times, asked for occurrence {j}")

    def __add__(self, other):
        return Word(tuple(self) + tuple(other))

    def __getitem__(self, item):
        got = super().__getitem__(item)
        if isinstance(item, slice):
            return Word(got)
        return got

    def __str__(self):
        if all(len(x) == 1 for x in self):
            return "".join(self)
        return ",".join(self)

    def __repr__(self):
        return f"Word({str(self)!r})"


def _pair(x: str, y: str) -> frozenset:
    return frozenset((x, y))


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph; equality is set equality."""

    vertices: frozenset
    edges: frozenset

    def __init__(self, vertices: Iterable = (), edges: Iterable = ()):
        vs = frozenset(str(v) for v in vertices)
        es = set()
        for e in edges:
            u, v = (str(x) for x in e)
            if u == v:
                raise InvalidGraph(f"loop at vertex {u}")
            if u not in vs or v not in vs:
                raise InvalidGraph(f"edge {u} {v} has an endpoint outside the vertex set")
            es.add(_pair(u, v))
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", frozenset(es))

    @classmethod
    def complete(cls, labels: Iterable) -> "Graph":
        labels = [str(x) for x in labels]
        return cls(labels, combinations(labels, 2))

    @classmethod
    def empty(cls, labels: Iterable) -> "Graph":
        return cls(labels, ())

    @classmethod
    def path(cls, labels: Iterable) -> "Graph":
        labels = [str(x) for x in labels]
        return cls(labels, zip(labels, labels[1:]))

    @classmethod
    def cycle(cls, labels: Iterable) -> "Graph":
        labels = [str(x) for x in labels]
        return cls(labels, list(zip(labels, labels[1:])) + [(labels[-1], labels[0])])

    def sorted_vertices(self) -> list:
        return sorted(self.vertices, key=letter_key)

    def sorted_edges(self) -> list:
        pairs = [tuple(sorted(e, key=letter_key)) for e in self.edges]
        return sorted(pairs, key=lambda p: (letter_key(p[0]), letter_key(p[1])))

    def adjacent(self, x: str, y: str) -> bool:
        return _pair(x, y) in self.edges

    def neighbors(self, x: str) -> frozenset:
        if x not in self.vertices:
            raise LetterAbsent(f"vertex {x!r} not in graph")
        return frozenset(y for e in self.edges if x in e for y in e if y != x)

    def is_complete(self) -> bool:
        n = len(self.vertices)
        return len(self.edges) == n * (n - 1) // 2

    def components(self) -> list:
        """Connected components as induced subgraphs, ordered by least vertex."""
        adj = {v: set() for v in self.vertices}
        for e in self.edges:
            u, v = tuple(e)
            adj[u].add(v)
            adj[v].add(u)
        seen = set()
        comps = []
        for start in self.sorted_vertices():
            if start in seen:
                continue
            stack, comp = [start], set()
            while stack:
                v = stack.pop()
                if v in comp:
                    continue
                comp.add(v)
                stack.extend(adj[v] - comp)
            seen |= comp
            comps.append(self.induced(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.vertices) > 0 and len(self.components()) == 1

    def induced(self, subset: Iterable) -> "Graph":
        sub = frozenset(subset)
        return Graph(sub, (tuple(e) for e in self.edges if e <= sub))

    def relabel(self, mapping: dict) -> "Graph":
        return Graph((mapping[v] for v in self.vertices), ((mapping[u], mapping[v]) for u, v in map(tuple, self.edges)))

    def union(self, other: "Graph") -> "Graph":
        return Graph(self.vertices | other.vertices, [tuple(e) for e in self.edges | other.edges])

    def __str__(self):
        return format_graph(self)


# --- text formats -----------------------------------------------------------

_SEP = re.compile(r"[\s,]+")


def parse_word(text: str) -> Word:
    """Parse a word: comma/whitespace separated tokens, or a contiguous
    string read one letter per character."""
    text = text.strip()
    if not text:
        return Word()
    if _SEP.search(text):
        return Word(t for t in _SEP.split(text) if t)
    return Word(text)


def parse_graph(text: str) -> Graph:
    """Parse the ``vertices: a b c`` header followed by one ``u v`` edge per line."""
    vertices = None
    edges = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if vertices is None:
            head, colon, rest = line.partition(":")
            if not colon or head.strip() != "vertices":
                raise InvalidGraph("graph text must start with a 'vertices:' header")
            vertices = [t for t in _SEP.split(rest.strip()) if t]
            continue
        tokens = [t for t in _SEP.split(line) if t]
        if len(tokens) != 2:
            raise InvalidGraph(f"bad edge line: {raw!r}")
        edges.append(tokens)
    if vertices is None:
        raise InvalidGraph("missing 'vertices:' header")
    return Graph(vertices, edges)


def format_graph(g: Graph) -> str:
    lines = ["vertices: " + " ".join(g.sorted_vertices())]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines)


# --- operations -------------------------------------------------------------

def restrict(w: Word, letters: Iterable) -> Word:
    keep = {str(x) for x in letters}
    return Word(x for x in w if x in keep)


def alternates(w: Word, x: str, y: str) -> bool:
    x, y = str(x), str(y)
    if x == y:
        raise SameLetter(f"cannot test {x!r} against itself")
    for z in (x, y):
        if z not in w:
            raise LetterAbsent(f"letter {z!r} does not occur in {w}")
    prev = None
    for z in w:
        if z == x or z == y:
            if z == prev:
                return False
            prev = z
    return True


def _nonempty(w: Word) -> None:
    if len(w) == 0:
        raise EmptyWord("operation needs a non-empty word")


def derive_graph(w: Word) -> Graph:
    """The graph whose edges are exactly the alternating letter pairs of `w`."""
    _nonempty(w)
    # A pair fails to alternate iff some letter is followed, before any
    # occurrence of the other, by itself again.
    last = dict.fromkeys(w, -1)
    broken = set()
    for pos, z in enumerate(w):
        p = last[z]
        if p >= 0:
            for y, q in last.items():
                if y != z and q < p:
                    broken.add(_pair(z, y))
        last[z] = pos
    letters = sorted(last, key=letter_key)
    edges = [(x, y) for x, y in combinations(letters, 2) if _pair(x, y) not in broken]
    return Graph(letters, edges)


def represents(w: Word, g: Graph) -> bool:
    if len(w) == 0:
        return len(g.vertices) == 0
    return w.alphabet == g.vertices and derive_graph(w) == g


def uniformity(w: Word) -> Optional[int]:
    _nonempty(w)
    counts = set(w.counts().values())
    return counts.pop() if len(counts) == 1 else None


def is_permutation(w: Word, alphabet: Optional[Iterable] = None) -> bool:
    letters = set(w)
    if len(letters) != len(w):
        return False
    return alphabet is None or letters == set(alphabet)


def initial_permutation(w: Word) -> Word:
    _nonempty(w)
    return Word(dict.fromkeys(w))


def final_permutation(w: Word) -> Word:
    _nonempty(w)
    return Word(reversed(dict.fromkeys(reversed(w))))


def ith_permutation(w: Word, i: int) -> Word:
    """Letters ordered by the position of their i-th occurrence (uniform words only)."""
    k = uniformity(w)
    if k is None:
        raise NotUniform(f"{w} is not uniform")
    if not 1 <= i <= k:
        raise IndexOutOfRange(f"i={i} outside 1..{k}")
    seen = Counter()
    out = []
    for z in w:
        seen[z] += 1
        if seen[z] == i:
            out.append(z)
    return Word(out)


def cyclic_shift(w: Word, split: int) -> Word:
    """Move the suffix starting at `split` to the front: u.v -> v.u."""
    if not 0 <= split <= len(w):
        raise PositionOutOfRange(f"split {split} outside 0..{len(w)}")
    return w[split:] + w[:split]


def prepend_initial(w: Word) -> Word:
    return initial_permutation(w) + w


def first_letter(w: Word) -> str:
    _nonempty(w)
    return w[0]


def last_letter(w: Word) -> str:
    _nonempty(w)
    return w[-1]


def prefix(w: Word, length: int) -> Word:
    if not 0 <= length <= len(w):
        raise LengthOutOfRange(f"length {length} outside 0..{len(w)}")
    return w[:length]
