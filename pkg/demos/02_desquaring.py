"""Grow a representant with squares, then remove them again."""
from wordrep import Graph, Word, desquare, iter_squares, prepend_initial

g = Graph.path("123")
w = Word("121323")
grown = prepend_initial(prepend_initial(w))
print("grown word:", grown)
for sq in iter_squares(grown):
    print(f"  square at {sq.start}: ({sq.root})^2")

out = desquare(grown, g)
print("desquared:", out)
print("squares left:", list(iter_squares(out)))
