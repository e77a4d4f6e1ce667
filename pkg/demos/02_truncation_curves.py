"""
Truncation curves and the substitution identities
=================================================

Every family traces a curve psi -> (c, lambda) in the parameter space of
the universal even-spin algebra.  The eight curves are images of one
master curve under Mobius substitutions, and the identities relating
them hold as exact rational-function equalities.
"""

from fractions import Fraction

import hookw
from hookw.exact import RatFunc

# The curve of one member: both components are canonical rational
# functions of psi.
curve = hookw.phi_family("2C", 0, 1)
print("c(psi)      =", curve.c.to_text())
print("lambda(psi) =", curve.lam.to_text())
print("derivation route:", curve.source)

# This particular curve satisfies a one-line algebraic relation: the
# parametrization eliminates to 49 lambda^2 (c - 25)(c - 1) = 1.
expr = 49 * curve.lam * curve.lam * (curve.c - 25) * (curve.c - 1)
print("49 lambda^2 (c-25)(c-1) =", expr.to_text())

# The substitution identities at a numeric point: each check compares
# two families' curves after an exact Mobius change of psi.
for check in hookw.verify_trialities(1, 2):
    print(f"{check.name}: {'holds' if check.holds else 'FAILS'}")

# The same identities with n and m left symbolic: equality of trivariate
# rational functions, not of sampled values.
n, m = RatFunc.var("n"), RatFunc.var("m")
symbolic = hookw.verify_trialities(n, m)
print("symbolic identities:", sum(c.holds for c in symbolic), "of", len(symbolic))

# A curve can be pinned at an exact point.
point = hookw.phi_family("2B", 0, 1)
psi = Fraction(1, 8)
print(f"2B(0,1) at psi=1/8: c = {point.c.eval({'psi': psi})},",
      f"lambda = {point.lam.eval({'psi': psi})}")
