"""Exhaustive searches over small graphs."""
from wordrep import (
    Graph,
    check_no_squarefree_2uniform_for_complete_union,
    minimal_length_words,
    representation_number,
    squarefree_representants,
    squarefree_words_for_complete,
)

for n in range(1, 5):
    words, count = squarefree_words_for_complete(n)
    print(f"K{n}: {count} square-free representants, longest {max(map(len, words))}")

path = Graph.path("123")
length, words = minimal_length_words(path)
print("shortest words for the path:", length, [str(w) for w in words])

found, longest = squarefree_representants(path)
print(f"the path has {len(found)} square-free representants, longest {longest}")

prism = Graph("123456", ["12", "23", "13", "45", "56", "46", "14", "25", "36"])
print("prism representation number:", representation_number(prism))

print("K2 + K1 has no square-free 2-uniform word:",
      check_no_squarefree_2uniform_for_complete_union([Graph.complete("12"), Graph(["3"])]))
