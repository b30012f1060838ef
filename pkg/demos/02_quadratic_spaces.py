"""
Quadratic forms and the two odd orthogonal spaces
=================================================

Local invariants decide isotropy and Witt equivalence; the Weil index of a
(2n+1)-dimensional discriminant-one space tells the split and non-split ones apart.
"""

from metaplectic import exact
from metaplectic.qforms import (
    QuadForm,
    diagonal_form,
    diagonalize,
    hyperbolic,
    invariants,
    weil_index_form,
    witt_equivalent,
    witt_index,
)
from metaplectic.scalars import AdditiveCharacter, weil_index
from metaplectic.soodd import max_isotropic_dim, orth_space, so_generator, is_special_orthogonal

# diagonalising the hyperbolic plane
h = QuadForm(exact.mat([[0, 1], [1, 0]]))
print("hyperbolic plane diagonalises to", diagonalize(h))

# <1,1> and <-1,-1> share rank and discriminant at 2 but not the Hasse invariant
for q in (diagonal_form([1, 1]), diagonal_form([-1, -1])):
    inv = invariants(q, 2)
    print(f"{diagonalize(q)}: rank {inv.rank}, disc {inv.disc.rep}, hasse {inv.hasse}")
print("Witt equivalent at 2?", witt_equivalent(diagonal_form([1, 1]), diagonal_form([-1, -1]), 2))
print("Witt equivalent at 3?", witt_equivalent(diagonal_form([1, 1]), diagonal_form([-1, -1]), 3))

# Witt index of a few diagonal forms at 3
for d in ([1, 1, 1], [1, 2, 3, 6], [1, -1, 3, -3, 5]):
    print(f"Witt index of {d} at 3: {witt_index(diagonal_form([2 * x for x in d]), 3)}")

# V^+ and V^- in dimension 5
for p in (2, 3, 5):
    plus, minus = orth_space(2, 1, p), orth_space(2, -1, p)
    psi = AdditiveCharacter(p)
    g1 = weil_index(1, psi)
    print(f"p = {p}: isotropic dims {max_isotropic_dim(plus)}, {max_isotropic_dim(minus)};"
          f" Weil index / gamma(psi): {(weil_index_form(plus.form(), psi) / g1).exponent},"
          f" {(weil_index_form(minus.form(), psi) / g1).exponent}")

# adding hyperbolic planes does not change the Weil index
psi = AdditiveCharacter(3)
q = diagonal_form([2, 6])
print("\nWeil index of <1,3> and <1,3> ⊥ H at 3:", weil_index_form(q, psi).exponent,
      weil_index_form(QuadForm(exact.block_diag(q.gram, hyperbolic().gram)), psi).exponent)

# block generators of SO(V^+)
space = orth_space(2)
w = so_generator(space, "w_X", 1)
u = so_generator(space, "u_b", exact.mat([[1, 2, -1]]))
print("\nw_X(1) and u_b in SO(V^+):", is_special_orthogonal(space, w), is_special_orthogonal(space, u))
print(exact.to_strings(u))
