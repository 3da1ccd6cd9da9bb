"""The Thue-Morse sequence and the square-free ternary word it yields."""
from wordrep import is_square_free, squarefree_ternary, thue_morse_bits

print("t =", thue_morse_bits(32))
c = squarefree_ternary(40)
print("c =", c)

long_c = squarefree_ternary(10_000)
print("first 10000 symbols square-free:", is_square_free(long_c))
