"""Square-free words for graphs with several components."""
from wordrep import Graph, Word, derive_graph, disconnected_word, disconnected_word_short, empty_graph_word, is_square_free
from wordrep.errors import NoSquareFreeRepresentation

comps = [(Graph.complete("12"), Word("12")), (Graph(["3"]), Word("3"))]
w = disconnected_word(comps)
print("K2 + K1:", w, "square-free:", is_square_free(w))
print(derive_graph(w))

comps = [(Graph.path("123"), Word("121323")), (Graph(["4"]), Word("4"))]
print("long: ", disconnected_word(comps))
print("short:", disconnected_word_short(comps, 1))

for n in range(1, 7):
    try:
        print(f"O_{n}:", empty_graph_word(n))
    except NoSquareFreeRepresentation:
        print(f"O_{n}: no square-free representant")
