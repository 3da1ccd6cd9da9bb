"""Command-line interface.

Exit status: 0 on success, 1 on a domain error (diagnostic on stderr as
``ErrorName: detail``), 2 on usage errors.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import constructions, enumeration as enum, squares, thue_morse
from .errors import BudgetExceeded, ComponentComplete, WordRepError
from .words import Graph, Word, derive_graph, format_graph, parse_graph, parse_word, represents


def _read_word(arg: str) -> Word:
    if os.path.isfile(arg):
        with open(arg) as fh:
            return parse_word(fh.read())
    return parse_word(arg)


def _read_graph(path: str) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())


def _word_list(words) -> str:
    lines = [str(w) for w in words]
    lines.append(f"count: {len(lines)}")
    return "\n".join(lines)


def _component_word(g: Graph, supplied: list) -> Word:
    for w in supplied:
        if w.alphabet == g.vertices:
            return w
    if g.is_complete():
        return Word(g.sorted_vertices())
    _, words = enum.minimal_length_words(g)
    return squares.desquare(words[0], g)


def _cmd_check(a):
    w, g = _read_word(a.word), _read_graph(a.graph)
    ok = represents(w, g)
    free = squares.is_square_free(w)
    return f"represents: {'yes' if ok else 'no'}\nsquare-free: {'yes' if free else 'no'}"


def _cmd_derive(a):
    return format_graph(derive_graph(_read_word(a.word)))


def _cmd_desquare(a):
    return str(squares.desquare(_read_word(a.word), _read_graph(a.graph)))


def _cmd_squares(a):
    found = list(squares.iter_squares(_read_word(a.word)))
    lines = [f"{sq.start} {sq.root}" + (" trivial" if sq.trivial else "") for sq in found]
    lines.append(f"count: {len(found)}")
    return "\n".join(lines)


def _cmd_extend(a):
    return str(constructions.extend(_read_word(a.word), _read_graph(a.graph), a.blocks))


def _cmd_disconnected(a):
    g = _read_graph(a.graph)
    supplied = [_read_word(w) for w in a.word]
    comps = g.components()
    if a.short:
        j = next((i for i, c in enumerate(comps) if not c.is_complete()), None)
        if j is None:
            raise ComponentComplete("every component is complete")
        k = enum.representation_number(comps[j], enum.SearchBudget(max_k=a.max_k))
        if k is None:
            raise BudgetExceeded(f"representation number above {a.max_k}")
        pairs = [(c, _component_word(c, supplied)) for c in comps]
        pairs[j] = (comps[j], enum.k_uniform_words(comps[j], k)[0])
        return str(constructions.disconnected_word_short(pairs, j + 1))
    pairs = [(c, _component_word(c, supplied)) for c in comps]
    return str(constructions.disconnected_word(pairs))


def _cmd_empty_word(a):
    return str(constructions.empty_graph_word(a.n))


def _cmd_enumerate_kn(a):
    words, _ = enum.squarefree_words_for_complete(a.n)
    return _word_list(words)


def _cmd_repnum(a):
    k = enum.representation_number(_read_graph(a.graph), enum.SearchBudget(max_k=a.max_k))
    return "none" if k is None else str(k)


def _cmd_minwords(a):
    budget = enum.SearchBudget(max_length=a.max_length)
    _, words = enum.minimal_length_words(_read_graph(a.graph), budget)
    return _word_list(words)


def _cmd_kuniform(a):
    return _word_list(enum.k_uniform_words(_read_graph(a.graph), a.k))


def _cmd_thue_morse(a):
    return str(thue_morse.thue_morse_bits(a.bits))


def _cmd_ternary(a):
    return str(thue_morse.squarefree_ternary(a.length))


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wordrep", description="Square-free word-representants of graphs.")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("check", help="does a word represent a graph, and is it square-free")
    s.add_argument("word")
    s.add_argument("graph")
    s.set_defaults(func=_cmd_check)

    s = sub.add_parser("derive", help="graph represented by a word")
    s.add_argument("word")
    s.set_defaults(func=_cmd_derive)

    s = sub.add_parser("desquare", help="square-free representant of a connected graph")
    s.add_argument("word")
    s.add_argument("graph")
    s.set_defaults(func=_cmd_desquare)

    s = sub.add_parser("squares", help="list square occurrences")
    s.add_argument("word")
    s.set_defaults(func=_cmd_squares)

    s = sub.add_parser("extend", help="extend a uniform representant by ternary blocks")
    s.add_argument("word")
    s.add_argument("graph")
    s.add_argument("--blocks", type=_non_negative, required=True)
    s.set_defaults(func=_cmd_extend)

    s = sub.add_parser("disconnected", help="square-free representant of a disconnected graph")
    s.add_argument("graph")
    s.add_argument("--word", action="append", default=[], help="component word (repeatable)")
    s.add_argument("--short", action="store_true", help="use the shorter construction")
    s.add_argument("--max-k", type=int, default=3)
    s.set_defaults(func=_cmd_disconnected)

    s = sub.add_parser("empty-word", help="square-free representant of the edgeless graph")
    s.add_argument("n", type=int)
    s.set_defaults(func=_cmd_empty_word)

    s = sub.add_parser("enumerate-kn", help="all square-free representants of K_n")
    s.add_argument("n", type=int)
    s.set_defaults(func=_cmd_enumerate_kn)

    s = sub.add_parser("repnum", help="representation number")
    s.add_argument("graph")
    s.add_argument("--max-k", type=int, default=3)
    s.set_defaults(func=_cmd_repnum)

    s = sub.add_parser("minwords", help="minimal-length representants")
    s.add_argument("graph")
    s.add_argument("--max-length", type=int, default=12)
    s.set_defaults(func=_cmd_minwords)

    s = sub.add_parser("kuniform", help="k-uniform representants")
    s.add_argument("graph")
    s.add_argument("k", type=int)
    s.set_defaults(func=_cmd_kuniform)

    s = sub.add_parser("thue-morse", help="Thue-Morse prefix")
    s.add_argument("--bits", type=_non_negative, required=True)
    s.set_defaults(func=_cmd_thue_morse)

    s = sub.add_parser("ternary", help="square-free ternary prefix")
    s.add_argument("--length", type=_non_negative, required=True)
    s.set_defaults(func=_cmd_ternary)
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.func(args)
    except WordRepError as exc:
        print(f"{type(exc).__name__}: {exc}", file=stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    print(out, file=stdout)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
