"""Combinatorial R on a pair of rectangles, and its energy.

Run with ``python demos/01_combinatorial_R.py``.
"""

from energystats.combinat import format_tableau, insert_word, row_word
from energystats.crystal import CrystalElement, combinatorial_R, energy

b = CrystalElement.from_rows([[1, 1, 4], [2, 3, 6]], 6)
b2 = CrystalElement.from_rows([[2, 3], [3, 4], [4, 5]], 6)
left, right = combinatorial_R(b, b2)

print("b  =", b)
print("b' =", b2)
print("R(b (x) b') =", left, "(x)", right)
print("H =", energy(b, b2))

# both orders insert to the same tableau
y = insert_word(b2.tableau, row_word(b.tableau))
assert y == insert_word(right.tableau, row_word(left.tableau))
print("common insertion tableau:", format_tableau(y))

# R is an involution
assert combinatorial_R(left, right) == (b, b2)
