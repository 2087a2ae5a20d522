"""Braid words, the Artin action and the full twist."""
from hirzebruch.braids import (BraidWord, FreeWord, PuncturePath, are_equal, artin_action,
                               exponent_sum, full_twist, half_twist, permutation)

s1, s2 = BraidWord.generator(3, 1), BraidWord.generator(3, 2)
print("s1 s2 s1 == s2 s1 s2:", are_equal(s1 * s2 * s1, s2 * s1 * s2))
print("s1 s2 == s2 s1:", are_equal(s1 * s2, s2 * s1))

# the full twist acts on the free group by conjugation with d = x1 x2 x3
D = full_twist(3)
d = FreeWord.boundary(3)
for j in (1, 2, 3):
    x = FreeWord.generator(3, j)
    print(f"x{j} . D^2 =", artin_action(D, x), " d x d^-1 =", d * x * d.inverse())
print("degree of D^2 on 5 strands:", exponent_sum(full_twist(5)))

# half-twists along paths; an "above" flag changes the conjugating letters
for flags in (("b",), ("a",)):
    H = half_twist(PuncturePath(1, 3, flags), 3)
    print(flags, H, "permutation", permutation(H))
