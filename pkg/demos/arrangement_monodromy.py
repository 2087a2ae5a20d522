"""Monodromy of a small line arrangement and its product."""
from fractions import Fraction

from hirzebruch.arrangement import LineArrangement, arrangement_monodromy_factorization, pencil
from hirzebruch.factorization import degree_audit, verify_product_is_full_twist

arr = LineArrangement.from_pairs([(0, 0), (1, 1), (-2, 3), (Fraction(1, 2), -2)])
f = arrangement_monodromy_factorization(arr, "four lines")
for x in f.factors:
    print(x.source, x.support, x.word)
print("degree residual:", degree_audit(f).residual)
print("product is the full twist:", verify_product_is_full_twist(f))

# three concurrent lines give one factor of degree 6
g = arrangement_monodromy_factorization(pencil(3))
print([x.claimed_degree for x in g.factors], verify_product_is_full_twist(g))
