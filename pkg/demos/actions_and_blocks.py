"""
Permutation actions: orbits, blocks and primitivity
===================================================

"""

import numpy as np

from frobcount.groups import build, parse_spec
from frobcount.perm import (Permutation, contains, is_2_transitive, is_primitive, is_transitive,
                            minimal_blocks, orbits, stabilizer_order)

# composition reads right to left: (p*q)(i) = p(q(i))
p = Permutation.from_cycles(3, (0, 1))
q = Permutation.from_cycles(3, (1, 2))
print("p*q =", (p * q).cycles())

# a product acts on the disjoint union of the factors' points
G = build(parse_spec("Product(Symmetric(3),Cyclic(4))"))
print("orbits:", [sorted(o) for o in orbits(G)])

# orbit-stabilizer, point by point
for w in (0, 3):
    o = next(o for o in orbits(G) if w in o)
    print(w, len(o), "*", stabilizer_order(G, w), "=", G.order())

# blocks of the hexagon's symmetry group: opposite pairs and triangles
D12 = build(parse_spec("Dihedral(12)"))
for system in minimal_blocks(D12):
    print("block system:", [sorted(b) for b in system])

# 2-transitive => primitive => transitive
for text in ["Alternating(5)", "Cyclic(5)", "Cyclic(6)", "GL2(3)"]:
    H = build(parse_spec(text))
    print(f"{text:15} transitive={is_transitive(H)} primitive={is_primitive(H)} "
          f"2-transitive={is_2_transitive(H)}")

# the rank criterion behind 2-transitivity: mean of fix(g)^2 is 2
rows = build(parse_spec("Alternating(5)")).table().rows
fix = (rows == np.arange(5)).sum(axis=1)
print("mean fix^2 over A5:", (fix ** 2).mean())

# membership by sifting, no enumeration needed
A7 = build(parse_spec("Alternating(7)"))
print(contains(A7, Permutation.from_cycles(7, (0, 1, 2))),
      contains(A7, Permutation.from_cycles(7, (0, 1))))
