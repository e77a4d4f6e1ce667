"""
Finding coincidences by elimination
===================================

The coincidence points can be rediscovered with no table lookup: treat
the two curves as living in the same (c, lambda) plane, eliminate one
psi by a resultant, and extract rational roots.  Every certified
prediction of the catalog is recovered exactly.
"""

import hookw

# Intersect the 2B(0,1) curve with the rank-one sp target curve.
source = hookw.phi_family("2B", 0, 1)
rule = hookw.TARGETS["sp"]
target = rule.curve(1)
report = hookw.intersect(source, target)
print("rational intersection points:")
for p in report.points:
    flag = "  (degenerate c)" if p.degenerate else ""
    print(f"  psi1={p.psi1}  psi2={p.psi2}  c={p.c}  lambda={p.lam}{flag}")
print("identity component:", report.identity_component)
print("residual eliminant degree:", report.residual_degree)

# The same points, predicted by the catalog: each passing entry names an
# exact (psi1, psi2) pair that elimination must find.
found = {(p.psi1, p.psi2) for p in report.points}
for entry in hookw.coincidence_table("2B", "sp"):
    outcome = hookw.verify_coincidence(entry, n=0, m=1, r=1)
    if outcome.status == "pass" and not outcome.degenerate:
        hit = (outcome.psi1, outcome.psi2) in found
        print(f"{entry.name}: predicted ({outcome.psi1}, {outcome.psi2})",
              "recovered" if hit else "MISSED")

# A curve intersected with itself is flagged as a shared component
# rather than enumerated pointwise.
self_report = hookw.intersect(source, source)
print("self-intersection is an identity component:", self_report.identity_component)
