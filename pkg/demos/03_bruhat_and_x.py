"""
Siegel-parabolic Bruhat decomposition and the x-function
========================================================

Every symplectic matrix factors as p1 sigma_S p2 with p1, p2 stabilising Y;
the square class of det(p1 p2 | Y) does not depend on the factorisation.
"""

import random

from metaplectic import exact
from metaplectic.harness import RandomElements
from metaplectic.spgroup import bruhat_decompose, generator, sigma, siegel_det, w_Y, x_function

# the Weyl element w_Y = m(-1) sigma_{1} for n = 1
p1, S, p2 = bruhat_decompose(w_Y(1, 1))
print("w_Y(1):", exact.to_strings(w_Y(1, 1)))
print("  S =", S, " x =", siegel_det(p1) * siegel_det(p2))

# a random element built from generators
gen = RandomElements(random.Random(7))
g = gen.sp(3, 6)
p1, S, p2 = bruhat_decompose(g)
print("\nrandom element of Sp(6): cell", S)
print("  reconstruction exact:", exact.equal(p1 @ sigma(S, 3) @ p2, g))

# x changes by the parabolic determinants when g is moved inside its double coset
q1, q2 = gen.parabolic(3), gen.parabolic(3)
for v in (2, 3, 5, "real"):
    lhs = x_function(q1 @ g @ q2, v)
    rhs = x_function(q1, v) * x_function(g, v) * x_function(q2, v)
    print(f"  place {v}: x(q1 g q2) = {lhs.rep}, x(q1) x(g) x(q2) = {rhs.rep}")

# the Levi element m_n(a) has x equal to det a
a = exact.mat([[2, 1], [0, 3]])
print("\nx(m_n(a)) at 5 with det a = 6:", x_function(generator(2, "m_n", a), 5).rep)
