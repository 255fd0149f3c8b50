"""
A local ring that is not a GLR
==============================

GF(2)[x,y]/(x^2, xy, y^2) has eight elements and a unique maximal ideal
M = (x, y). Every element of M kills every other, so the annihilator of
the line (x) is all of M, and so is the annihilator of M. The double
annihilator of (x) is therefore M, not (x).
"""

from glring import build_ring, check_glr, enumerate_ideals, parse_spec


def poly(i):
    # table index a + 2b + 4c stands for a + bx + cy
    terms = [t for bit, t in ((1, "1"), (2, "x"), (4, "y")) if i & bit]
    return "+".join(terms) or "0"


R = build_ring(parse_spec("@counterexample_f2xy.json"))
L = enumerate_ideals(R)
report = check_glr(R, L)

print("ideals:", L.size)
print("is GLR:", report.is_glr)

I, twice = report.double_annihilator_witness
print("I   =", [poly(e) for e in L.members(I)])
print("I** =", [poly(e) for e in L.members(twice)])

# the report names the first failing identity for each route
for key in ("AN", "CO", "GLR1", "GLR2", "double_annihilator"):
    print(key, report.to_json()[key])
