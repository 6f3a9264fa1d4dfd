"""
Counting subgroups of prime-power order
=======================================

Build a few groups from their text specs, count subgroups of order p^a and
look at the residues.
"""

from frobcount.counting import count_profile, count_subgroups_of_order, count_sylow
from frobcount.groups import build, parse_spec
from frobcount.hallpoly import hall_count_order, hall_count_type

# a spec string becomes a permutation group
G = build(parse_spec("AbelianP(3,[2,1,1])"))
print(G, "order", G.order(), "degree", G.degree)

# subgroups of order 9: 22 of them
report = count_subgroups_of_order(G, 3, 2)
print("order 9:", report.count, "mod 3 =", report.mod_p, "mod 9 =", report.mod_p2)

# the abelian case has a closed form, split by isomorphism type
print("cyclic:", hall_count_type((2, 1, 1), (2,), 3),
      "elementary:", hall_count_type((2, 1, 1), (1, 1), 3),
      "total:", hall_count_order((2, 1, 1), 2, 3))

# the whole profile a = 0..4
print("profile:", count_profile(G, 3))

# S4 at p = 2: three orbits of Klein-or-cyclic subgroups of order 4
S4 = build(parse_spec("Symmetric(4)"))
for o in count_subgroups_of_order(S4, 2, 2).orbits:
    print("  class of size", o.length, "rep order", o.rep_size)

# GL2(q) has 1 + q Sylow subgroups for the characteristic
for q, p in [(4, 2), (5, 5), (9, 3)]:
    print(f"GL2({q}): {count_sylow(build(parse_spec(f'GL2({q})')), p)} Sylow {p}-subgroups")

# every count is 1 mod p
D = build(parse_spec("Dihedral(16)"))
prof = count_profile(D, 2)
print("Dihedral(16):", prof, [n % 2 for n in prof])
