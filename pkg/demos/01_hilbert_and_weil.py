"""
Hilbert symbols and Weil indices at places of Q
===============================================

Square classes, the Hilbert symbol, and the eighth roots of unity attached to
x -> psi(a x^2), computed both by a closed form and by a finite Gauss sum.
"""

from math import prod

from metaplectic.scalars import (
    REAL,
    AdditiveCharacter,
    canonical_classes,
    hilbert,
    normalized_weil_index,
    square_class,
    weil_index,
    weil_index_oracle,
)

# every nonzero rational lands on a fixed representative of its class
for a in (18, -7, 20, 96):
    print(f"class of {a:>3} at 3: {square_class(a, 3).rep}   at 2: {square_class(a, 2).rep}")

# the Hilbert symbol table on square classes at p = 2
classes = canonical_classes(2)
print("\n(a, b)_2 on the eight classes")
print("     " + "".join(f"{str(b):>5}" for b in classes))
for a in classes:
    print(f"{str(a):>5}" + "".join(f"{hilbert(a, b, 2):>5}" for b in classes))

# the product formula: only 2, the real place and primes dividing a, b contribute
a, b = -15, 22
places = [REAL, 2, 3, 5, 11]
symbols = [hilbert(a, b, v) for v in places]
print("\nsymbols of (-15, 22) at real, 2, 3, 5, 11:", symbols, "product", prod(symbols))

# the Weil index: closed form against the stabilised Gauss sum
psi = AdditiveCharacter(5)
print("\nWeil index exponents at 5 (closed form, Gauss sum):")
for a in canonical_classes(5):
    print(f"  a = {a}: {weil_index(a, psi).exponent}, {weil_index_oracle(a, psi).exponent}")

# normalised indices measure the failure of multiplicativity by a Hilbert symbol
psi = AdditiveCharacter(2)
g = lambda x: normalized_weil_index(x, psi)
print("\ngamma(-1) gamma(-1) / gamma(1) at 2:", (g(-1) * g(-1) / g(1)).exponent,
      " Hilbert (-1,-1)_2:", hilbert(-1, -1, 2))
