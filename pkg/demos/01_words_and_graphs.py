"""Words, alternation, and the graph a word represents."""
from wordrep import Graph, Word, alternates, derive_graph, initial_permutation, final_permutation, represents

w = Word("121323")
print("word:", w)
print("1 and 2 alternate:", alternates(w, "1", "2"))
print("1 and 3 alternate:", alternates(w, "1", "3"))

g = derive_graph(w)
print("represented graph:")
print(g)
print("same as the path 1-2-3:", g == Graph.path("123"))

# a permutation represents the complete graph
print("123 represents K3:", represents(Word("123"), Graph.complete("123")))

w = Word("6345123215")
print(f"pi({w}) = {initial_permutation(w)}, sigma({w}) = {final_permutation(w)}")
