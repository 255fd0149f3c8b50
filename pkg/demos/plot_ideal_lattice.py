"""
Ideal lattice of a residue ring
===============================

Enumerate the two-sided ideals of Z12, look at their annihilators and
write the Hasse diagram as Graphviz DOT.
"""

from glring import build_ring, enumerate_ideals, parse_spec
from glring.export import lattice_to_dot

R = build_ring(parse_spec("Z12"))
L = enumerate_ideals(R)

# one line per ideal, smallest first
for i in range(L.size):
    members = L.members(i)
    ann = L.members(L.right_ann[i])
    print(f"I{i}: {members}  annihilator {ann}")

# the ideals of Z12 are the divisor ideals, so their sizes divide 12
print("sizes:", [len(L.members(i)) for i in range(L.size)])

# covering pairs are the edges of the Hasse diagram
print(lattice_to_dot(L))
