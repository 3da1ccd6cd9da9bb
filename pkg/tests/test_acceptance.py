"""Acceptance criteria, one test per criterion.

Run with ``pytest tests/test_acceptance.py -s`` to see the PASS/FAIL lines.
"""
import math
import time
from contextlib import contextmanager

import pytest

from wordrep import (
    Graph,
    Word,
    all_representing_words,
    build_blocks,
    check_no_squarefree_2uniform_for_complete_union,
    desquare,
    diag_occurrence_balance,
    diag_square_support,
    disconnected_word,
    disconnected_word_short,
    empty_graph_word,
    extend,
    is_square_free,
    k_uniform_words,
    minimal_length_words,
    prepend_initial,
    representation_number,
    squarefree_representants,
    squarefree_ternary,
)
from wordrep.cli import run
from wordrep.enumeration import _uniform_search, squarefree_words_for_complete
from wordrep.errors import BlocksNotDistinct, NoSquareFreeRepresentation

from oracles import graphs_up_to_iso, naive_represents, naive_square_free, naive_words


@contextmanager
def criterion(number, title, limit):
    start = time.perf_counter()
    status, detail = "FAIL", ""
    try:
        yield
        elapsed = time.perf_counter() - start
        if elapsed < limit:
            status = "PASS"
        else:
            detail = f" (took {elapsed:.2f}s, limit {limit}s)"
            raise AssertionError(f"criterion {number} exceeded {limit}s: {elapsed:.2f}s")
    except AssertionError as exc:
        detail = detail or f" ({str(exc).splitlines()[0]})"
        raise
    finally:
        elapsed = time.perf_counter() - start
        print(f"\n[{status}] {number}. {title} {elapsed:.2f}s{detail}")


def oracle_ok(w, g):
    return naive_square_free(w) and naive_represents(w, g)


def test_1_ternary_stream():
    with criterion(1, "ternary stream", 1.0):
        import io

        out = io.StringIO()
        assert run(["ternary", "--length", "6"], stdout=out, stderr=io.StringIO()) == 0
        assert out.getvalue() == "210201\n"
        assert is_square_free(squarefree_ternary(10_000))


def test_2_complete_graph_counts():
    with criterion(2, "complete-graph counting", 10.0):
        for n, expected in zip(range(1, 5), (1, 4, 18, 96)):
            assert expected == n * math.factorial(n)
            g = Graph.complete(map(str, range(1, n + 1)))
            direct, count = squarefree_words_for_complete(n)
            brute = {w for w in naive_words(g, 2 * n + 1) if naive_square_free(w)}
            assert count == len(direct) == expected
            assert set(direct) == brute
            assert all(len(w) < 2 * n for w in brute)
            # exhausting the tree rules out every longer word
            found, longest = squarefree_representants(g)
            assert set(found) == brute and longest == 2 * n - 1


DESQUARE_GRAPHS = {
    "P2": Graph.path("12"),
    "P3": Graph.path("123"),
    "P4": Graph.path("1234"),
    "C4": Graph.cycle("1234"),
    "K4-e": Graph("1234", ["12", "13", "14", "23", "24"]),
    "K3": Graph.complete("123"),
}


def _seeds(g):
    k = representation_number(g)
    seeds = set(k_uniform_words(g, k)) | set(minimal_length_words(g)[1])
    if k < 2:
        seeds |= set(k_uniform_words(g, 2))
    return sorted(w for w in seeds if is_square_free(w))


def test_3_desquaring():
    with criterion(3, "desquaring", 5.0):
        for name, g in DESQUARE_GRAPHS.items():
            seeds = _seeds(g)
            assert seeds, name
            for w in seeds:
                once = prepend_initial(w)
                twice = prepend_initial(once)
                for grown in (once, twice):
                    out = desquare(grown, g)
                    assert oracle_ok(out, g), (name, grown, out)
                    assert len(out) <= len(grown)


def _first_prism_word():
    prism = Graph("123456", ["12", "23", "13", "45", "56", "46", "14", "25", "36"])
    for w in _uniform_search(prism, 3, 5_000_000, first=0):
        if not is_square_free(w):
            continue
        try:
            build_blocks(w, prism)
        except BlocksNotDistinct:
            continue
        return prism, w
    raise AssertionError("no 3-uniform prism word with distinct blocks")


def _check_family(w, g, upto=20):
    prev = None
    for i in range(upto + 1):
        out = extend(w, g, i)
        assert naive_represents(out, g), (w, i)
        assert naive_square_free(out), f"extend({w}, i={i}) = {out} contains a square"
        if prev is not None:
            assert out[:len(prev)] == prev
        prev = out


def test_4_extension_family():
    with criterion(4, "extension family", 30.0):
        prism, w3 = _first_prism_word()
        _check_family(w3, prism)
        _check_family(Word("312132"), Graph.path("123"))


def test_5_disconnected():
    with criterion(5, "disconnected construction", 5.0):
        k2 = (Graph.complete("12"), Word("12"))
        k1 = (Graph(["3"]), Word("3"))
        out = disconnected_word([k2, k1])
        assert out == Word("1323132")
        assert oracle_ok(out, Graph("123", ["12"]))

        cases = [
            [(Graph.complete("123"), Word("123")), (Graph.path("456"), Word("454656"))],
            [(Graph.path("123"), Word("121323")), (Graph(["4"]), Word("4")),
             (Graph.complete("56"), Word("56"))],
        ]
        for comps in cases:
            union = Graph()
            for g, _ in comps:
                union = union.union(g)
            assert oracle_ok(disconnected_word(comps), union)

        comps = [(Graph.path("123"), Word("121323")), (Graph(["4"]), Word("4"))]
        union = Graph("1234", ["12", "23"])
        short, long_ = disconnected_word_short(comps, 1), disconnected_word(comps)
        assert len(short) < len(long_)
        assert oracle_ok(short, union) and oracle_ok(long_, union)


def test_6_complete_union_impossibility():
    with criterion(6, "complete-union impossibility", 30.0):
        for parts in (("12", "3"), ("12", "34"), ("123", "4")):
            assert check_no_squarefree_2uniform_for_complete_union([Graph.complete(p) for p in parts])


def test_7_property_suites():
    with criterion(7, "property suites", 120.0):
        graphs = [g for n in range(1, 5) for g in graphs_up_to_iso(n, connected=True)]
        assert len(graphs) == 10
        for g in graphs:
            # (a)
            _, minimal = minimal_length_words(g)
            assert all(naive_square_free(w) for w in minimal), g
            # (b)
            if representation_number(g) == 2:
                two = k_uniform_words(g, 2)
                assert two and all(naive_square_free(w) for w in two), g
            # (c)
            if len(g.vertices) >= 2:
                for w in all_representing_words(g, 10):
                    assert diag_square_support(w, g) == [], (g, w)
                    assert diag_occurrence_balance(w, g) == [], (g, w)


def test_8_empty_graph_words():
    with criterion(8, "empty-graph words", 1.0):
        for n in range(3, 7):
            w = empty_graph_word(n)
            assert oracle_ok(w, Graph.empty(map(str, range(1, n + 1)))), n
        with pytest.raises(NoSquareFreeRepresentation):
            empty_graph_word(2)
