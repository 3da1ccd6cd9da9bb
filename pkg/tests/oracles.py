"""Independent brute-force oracles. Nothing here imports the code paths
under test beyond the Word/Graph containers."""
from itertools import combinations, permutations, product

from wordrep.words import Graph, Word


def naive_restrict(w, letters):
    return [x for x in w if x in letters]


def naive_alternates(w, x, y):
    r = naive_restrict(w, {x, y})
    return all(a != b for a, b in zip(r, r[1:]))


def naive_graph(w):
    letters = sorted(set(w))
    edges = [(x, y) for x, y in combinations(letters, 2) if naive_alternates(w, x, y)]
    return Graph(letters, edges)


def naive_represents(w, g):
    w = list(map(str, w))
    if set(w) != set(g.vertices):
        return False
    for x, y in combinations(sorted(g.vertices), 2):
        if naive_alternates(w, x, y) != g.adjacent(x, y):
            return False
    return True


def naive_squares(w):
    """All (1-based start, root) pairs, every window compared directly."""
    w = list(w)
    out = []
    for i in range(len(w)):
        for p in range(1, (len(w) - i) // 2 + 1):
            if w[i:i + p] == w[i + p:i + 2 * p]:
                out.append((i + 1, "".join(w[i:i + p]) if all(len(x) == 1 for x in w) else tuple(w[i:i + p])))
    return out


def naive_square_free(w):
    w = list(w)
    return not any(
        w[i:i + p] == w[i + p:i + 2 * p]
        for i in range(len(w))
        for p in range(1, (len(w) - i) // 2 + 1)
    )


def naive_words(g, max_length, min_length=1):
    letters = sorted(g.vertices)
    for length in range(min_length, max_length + 1):
        for tup in product(letters, repeat=length):
            if naive_represents(tup, g):
                yield Word(tup)


def naive_uniform_words(g, k):
    letters = sorted(g.vertices)
    pool = [x for x in letters for _ in range(k)]
    return {Word(p) for p in set(permutations(pool)) if naive_represents(p, g)}


def _canon(n, edges):
    best = None
    for p in permutations(range(n)):
        key = tuple(sorted(tuple(sorted((p[a], p[b]))) for a, b in edges))
        if best is None or key < best:
            best = key
    return best


def graphs_up_to_iso(n, connected=None):
    """One labelled representative (vertices 1..n) per isomorphism class."""
    pairs = list(combinations(range(n), 2))
    seen = set()
    for mask in range(1 << len(pairs)):
        es = [pr for i, pr in enumerate(pairs) if mask >> i & 1]
        key = _canon(n, es)
        if key in seen:
            continue
        seen.add(key)
        g = Graph([str(i + 1) for i in range(n)], [(str(a + 1), str(b + 1)) for a, b in key])
        if connected is None or g.is_connected() == connected:
            yield g


def thue_morse_by_doubling(length):
    """Thue-Morse via t -> t + complement(t), independent of popcount."""
    t = [0]
    while len(t) < length:
        t = t + [1 - b for b in t]
    return t[:length]


def ternary_by_zero_gaps(length):
    t = thue_morse_by_doubling(4 * length + 8)
    zeros = [i for i, b in enumerate(t) if b == 0]
    return "".join(str(b - a - 1) for a, b in zip(zeros, zeros[1:]))[:length]
