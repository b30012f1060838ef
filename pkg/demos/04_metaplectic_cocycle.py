"""
Rao's cocycle and the metaplectic group law
===========================================

Two independent evaluations of the cocycle: rewriting factored words down to
(sigma_S, sigma_T) base cases, and the Weil index of a Maslov triple of Lagrangians.
"""

import random
from itertools import combinations

from metaplectic import exact
from metaplectic.harness import RandomElements
from metaplectic.mpcover import (
    FactoredWord,
    Irreducible,
    MpElement,
    Parabolic,
    Sigma,
    cocycle_leray,
    cocycle_word,
    mp_invert,
    mp_multiply,
)
from metaplectic.spgroup import m_n, n_c, sigma

# the sigma table at p = 2, where (-1,-1)_2 = -1
n = 2
subsets = [S for r in range(n + 1) for S in combinations(range(1, n + 1), r)]
print("c(sigma_S, sigma_T) at 2 (word backend / Leray backend)")
for S in subsets:
    row = []
    for T in subsets:
        cw = cocycle_word(FactoredWord(n, (Sigma(S),)), FactoredWord(n, (Sigma(T),)), 2)
        cl = cocycle_leray(sigma(S, n), sigma(T, n), 2)
        row.append(f"{cw:+d}/{cl:+d}")
    print(f"  S={str(S):8}", "  ".join(row))

# random words: the backends agree whenever the rewrite rules apply
gen = RandomElements(random.Random(3))
agree = skipped = 0
for _ in range(40):
    w1, w2 = gen.word(2), gen.word(2)
    try:
        c = cocycle_word(w1, w2, 3)
    except Irreducible:
        skipped += 1
        continue
    agree += c == cocycle_leray(w1.product, w2.product, 3)
print(f"\nrandom pairs at 3: {agree} agree, {skipped} outside the rewrite rules")

# a pair the rules cannot reduce
w1 = FactoredWord(1, (Sigma((1,)), Parabolic(n_c(exact.mat([[1]]), 1))))
w2 = FactoredWord(1, (Sigma((1,)),))
try:
    cocycle_word(w1, w2, 3)
except Irreducible as err:
    print("irreducible:", err, "| Leray value:", cocycle_leray(w1.product, w2.product, 3))

# the Levi block reproduces the cover of GL_k
a, b = exact.mat([[3]]), exact.mat([[2]])
x = mp_multiply(MpElement(m_n(a), 1, 3), MpElement(m_n(b), 1, 3))
print("\n(m(3), 1)(m(2), 1) at 3 has sign", x.eps, "= (3, 2)_3")

# inverses in Mp
g = gen.sp(2, 5)
x = MpElement(g, 1, 5)
xi = mp_invert(x, "leray")
print("x x^-1 is the identity:", mp_multiply(x, xi, "leray").eps == 1 and
      exact.equal((x.g @ xi.g), exact.identity(4)))
