"""
Pseudo MV-algebras and their semirings
======================================

Every pseudo MV-algebra gives an idempotent semiring (join as addition,
the strong product as multiplication) and the two constructions undo each
other table for table.
"""

import numpy as np

from glring import (build_ring, enumerate_ideals, make_chain, mv_from_semiring, parse_spec, product_mv,
                    semiring_from_mv, semiring_of_ideals)
from glring.mv import cayley_text
from glring.semiring import check_duality

A = product_mv([make_chain(3), make_chain(2)])
print(cayley_text(A, "oplus"))

S = semiring_from_mv(A)
print("times is the strong product:", np.array_equal(S.times, A.odot))
print("round trip:", check_duality(A=A).to_json())

# the ideals of Z4 x Z9 give the same shape of algebra, a product of two 3-chains
L = enumerate_ideals(build_ring(parse_spec("Z4 x Z9")))
B = mv_from_semiring(semiring_of_ideals(L))
print(cayley_text(B, "oplus"))
