"""
Langlands-Shelstad representatives of the long relative Weyl element
====================================================================

The product of lifted Tits elements along a reduced word, compared with the
explicit block matrix and its sign (-1,-1)^{k(k-1)/2}.
"""

from metaplectic import exact
from metaplectic.weylreps import (
    SO,
    SP,
    chain_representative,
    ls_representative,
    root_vector,
    target_matrix,
    target_representative,
    wM_word,
)

# root vectors and their Tits elements for n = 1
print("X_alpha1:", exact.to_strings(root_vector(SP, 1, 1).matrix))
print("X_-alpha1:", exact.to_strings(root_vector(SP, 1, 1, -1).matrix))
print("X_beta1 (SO):", exact.to_strings(root_vector(SO, 1, 1).matrix))

# the reduced words used for the long element relative to GL_k
for n, k in ((2, 1), (2, 2), (3, 2), (4, 3)):
    print(f"w_M word n={n} k={k}:", list(wM_word(n, k)))

# symplectic side: letter-by-letter lift against the target, with sign
for p in (2, 3):
    for n in (2, 3):
        for k in range(1, n + 1):
            got = ls_representative(SP, n, wM_word(n, k), p)
            want = target_representative(SP, n, k, p)
            print(f"p={p} n={n} k={k}: sign {got.eps:+d}, matches target: {got == want}")

# the regrouped product through v_i and z_j gives the same element
print("\nregrouped product n=4 k=3 at 2 matches:",
      chain_representative(4, 3, 2) == target_representative(SP, 4, 3, 2))

# orthogonal side: a plain matrix identity
print("SO side n=3 k=2:", exact.equal(ls_representative(SO, 3, wM_word(3, 2)), target_matrix(SO, 3, 2)))
