"""The degenerated surface for k=1, a=1, b=2 and its vertex types."""
from hirzebruch.degeneration import build_complex, classify_vertices, counts, induced_arrangement, render_ascii
from hirzebruch.factorization import verify_product_is_full_twist
from hirzebruch.regeneration import degenerate_factorization

c = build_complex(1, 1, 2)
print(render_ascii(c))
print("planes, lines, vertices:", counts(c))
for v, x in sorted(classify_vertices(c).items()):
    print(v, x.kind, x.incident_lines, x.subtype or "", x.six_type or "")
print("special vertices:", c.special_vertices())

ia = induced_arrangement(c)
print("extra crossings from the real realization:", len(ia.extra_crossings))
print("degenerate product is the full twist:", verify_product_is_full_twist(degenerate_factorization(c)))
