"""Chern numbers, signature and classification of the Galois covers."""
from hirzebruch.invariants import chern_Y, classify, equal_chern_pair, scan, signature, veronese_chern

c = chern_Y((0, 2, 2))
print("Y_0(2,2): c1^2 =", c.c1sq.expanded(), "c2 =", c.c2.expanded())
print("Veronese b=3:", veronese_chern(3).expanded(), "ratio", veronese_chern(3).ratio)

for t in [(0, 7, 4), (1, 5, 4), (2, 3, 4), (3, 1, 4)]:
    print(t, "tau coefficient", signature(t).coeff)

r = equal_chern_pair(3, 1)
print("equal Chern numbers:", r.chern_equal, "groups", r.pi1_first, "vs", r.pi1_second)

print("positive, simply connected, spin, general type with k=1, a=3, b<=12:")
print([p.b for p in scan([1], [3], range(1, 13), ["sc", "gt", "spin", "tau>0"])])
print(classify((1, 3, 5)).to_json())
