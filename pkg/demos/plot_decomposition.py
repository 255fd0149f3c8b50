"""
Splitting a GLR into special primary factors
============================================

A finite GLR is a direct sum of unitary special primary rings. The
factors are recovered from the atoms of the ideal algebra: each atom
R_x has an annihilator R*_x and the factor is R/R*_x.
"""

from glring import build_ring, decompose, enumerate_ideals, parse_spec

for text in ("Z12", "Z4 x Z9", "Z30"):
    R = build_ring(parse_spec(text))
    L = enumerate_ideals(R)
    dec = decompose(R, L)
    print(f"{text}: {R.size} elements, {L.size} ideals")
    for F, cert, n in zip(dec.factor_rings, dec.certificates, dec.chain_lengths):
        print(f"  factor of order {F.size}: nilpotency {cert.nilpotency}, chain length {n}")
    print("  certified:", dec.certified)

# the canonical map sends r to its residues in every factor
dec = decompose(build_ring(parse_spec("Z12")))
print([dec.canonical_map(r) for r in range(12)])
