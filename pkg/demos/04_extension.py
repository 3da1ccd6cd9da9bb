"""Extending a representant by ternary block images.

The prism has representation number 3; its 3-uniform words give three
blocks and every extension stays square-free. The path on three vertices
only has finitely many square-free representants, so its extensions hit a
square quickly.
"""
from wordrep import Graph, Word, extend, is_square_free

prism = Graph("123456", ["12", "23", "13", "45", "56", "46", "14", "25", "36"])
w = Word("123415263456142536")
for i in (0, 1, 5, 20):
    out = extend(w, prism, i)
    print(f"prism i={i:2d} len={len(out):3d} square-free={is_square_free(out)}")

path = Graph.path("123")
for i in range(4):
    out = extend(Word("312132"), path, i)
    print(f"path  i={i} {out} square-free={is_square_free(out)}")
