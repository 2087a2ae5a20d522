"""Degree bookkeeping after doubling every line.

Neither way of counting 3-point factors closes the audit once 6-points
appear; the printout shows the residual in both modes.
"""
from hirzebruch.degeneration import build_complex
from hirzebruch.factorization import degree_audit
from hirzebruch.regeneration import audit_modes, regenerated_factorization, residual_formula

for params in [(1, 1, 1), (1, 1, 2), (1, 2, 2), (1, 3, 3)]:
    c = build_complex(*params)
    for r in audit_modes(c):
        print(params, r.mode, "residual", r.residual, "closed form", residual_formula(c, r.mode))

f = regenerated_factorization(build_complex(1, 1, 2))
a = degree_audit(f)
print("placeholders:", a.placeholders)
for src, deg in a.subtotals.items():
    print(f"  {src:>12} {deg}")
