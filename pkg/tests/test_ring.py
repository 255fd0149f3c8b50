import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import ring_of
from oracles import all_polys, poly_mul_mod
from glring.dsl import parse_spec
from glring.errors import NotAnIdeal, SizeCapExceeded, TableNotARing
from glring.ring import (build_ring, check_ring_axioms, find_unity, is_central_idempotent_generated,
                         is_ideal, predicted_size, product_ring, quotient_ring, restrict)
from glring.specs import Cyclic, Matrix, PolyQuotient, Table


@pytest.mark.parametrize("n", [1, 2, 6, 12, 17])
def test_cyclic_matches_integer_arithmetic(n):
    R = build_ring(Cyclic(n))
    for x in range(n):
        for y in range(n):
            assert R.add[x, y] == (x + y) % n
            assert R.mul[x, y] == (x * y) % n
    assert R.zero == 0
    assert R.unity == (0 if n == 1 else 1)


@pytest.mark.parametrize("p, modulus", [(2, (1, 1, 1)), (2, (0, 0, 0, 1)), (3, (2, 0, 1)), (5, (1, 0, 1))])
def test_poly_quotient_matches_schoolbook(p, modulus):
    R = build_ring(PolyQuotient(p, modulus))
    d = len(modulus) - 1
    polys = all_polys(p, d)
    for a in polys:
        for b in polys:
            i, j = R.element(a), R.element(b)
            expected = poly_mul_mod(list(a), list(b), list(modulus), p)
            assert R.element(expected) == R.mul[i, j]
            assert R.element(tuple((x + y) % p for x, y in zip(a, b))) == R.add[i, j]


def test_poly_designators_reduce_modulo():
    R = ring_of("GF(2)[x]/(x^2+x+1)")
    assert R.element("x^2") == R.element("x+1")
    assert R.label(R.mul[R.element("x"), R.element("x")]) == "x+1"


def test_non_monic_modulus_is_normalised():
    a = build_ring(PolyQuotient(5, (3, 0, 2)))
    b = build_ring(PolyQuotient(5, (4, 0, 1)))   # 2^-1 * (2x^2 + 3) = x^2 + 4
    assert np.array_equal(a.mul, b.mul)


@pytest.mark.parametrize("base", ["Z2", "Z3", "GF(2)[x]/(x^2)"])
def test_matrix_ring_matches_naive_product(base):
    B = ring_of(base)
    R = build_ring(Matrix(2, parse_spec(base)))
    rng = np.random.default_rng(1)
    for _ in range(200):
        i, j = (int(v) for v in rng.integers(R.size, size=2))
        X, Y = R.designator(i), R.designator(j)
        Xi = [[B.element(e) for e in row] for row in X]
        Yi = [[B.element(e) for e in row] for row in Y]
        Z = []
        for r in range(2):
            row = []
            for c in range(2):
                acc = B.zero
                for t in range(2):
                    acc = B.add[acc, B.mul[Xi[r][t], Yi[t][c]]]
                row.append(B.designator(int(acc)))
            Z.append(tuple(row))
        assert R.element(tuple(Z)) == R.mul[i, j]


def test_matrix_ring_is_noncommutative():
    R = ring_of("M2(Z2)")
    assert not np.array_equal(R.mul, R.mul.T)
    assert R.unity == R.element(((1, 0), (0, 1)))


def test_product_is_componentwise():
    R = ring_of("Z4 x Z9")
    for a in ((1, 2), (3, 8), (2, 3)):
        for b in ((3, 3), (2, 7)):
            i, j = R.element(a), R.element(b)
            assert R.designator(R.mul[i, j]) == ((a[0] * b[0]) % 4, (a[1] * b[1]) % 9)
            assert R.designator(R.add[i, j]) == ((a[0] + b[0]) % 4, (a[1] + b[1]) % 9)
    assert np.array_equal(product_ring([ring_of("Z4"), ring_of("Z9")]).mul, R.mul)


def test_empty_product_is_zero_ring():
    assert product_ring([]).size == 1


def test_quotient_of_cyclic():
    R = ring_of("Z12")
    Q, proj = quotient_ring(R, [0, 4, 8])
    assert Q.size == 4
    assert np.array_equal(Q.mul, build_ring(Cyclic(4)).mul)
    assert list(proj[:5]) == [0, 1, 2, 3, 0]
    assert ring_of("Z8/(4)").size == 4


def test_quotient_rejects_non_ideal():
    with pytest.raises(NotAnIdeal):
        quotient_ring(ring_of("Z6"), [0, 1])
    with pytest.raises(NotAnIdeal):
        quotient_ring(ring_of("M2(Z2)"), [0, ring_of("M2(Z2)").element(((1, 0), (0, 0)))])


def test_quotient_projection_is_homomorphism():
    R = ring_of("GF(2)[x]/(x^3)")
    I = [R.element(e) for e in ("0", "x^2")]
    Q, proj = quotient_ring(R, I)
    assert np.array_equal(proj[R.add], Q.add[proj[:, None], proj[None, :]])
    assert np.array_equal(proj[R.mul], Q.mul[proj[:, None], proj[None, :]])


def test_restrict_to_ideal():
    R = ring_of("Z6")
    sub = restrict(R, [0, 2, 4])
    assert sub.size == 3 and sub.unity == 2       # 4 is the unity of 2Z6, relabelled to index 2
    with pytest.raises(NotAnIdeal):
        restrict(R, [0, 1])


def test_is_ideal_one_sided():
    R = ring_of("M2(Z2)")
    e = R.element(((1, 0), (0, 0)))
    left = {int(R.mul[x, e]) for x in range(R.size)}    # R e
    assert is_ideal(R, left, right=False)
    assert not is_ideal(R, left)


def test_unity_and_central_idempotents():
    assert find_unity(build_ring(Table(2, [[0, 1], [1, 0]], [[0, 0], [0, 0]]))) is None
    rep = is_central_idempotent_generated(ring_of("Z6"))
    assert rep.holds
    rep = is_central_idempotent_generated(build_ring(parse_spec("@zero_mult_z2.json")))
    assert not rep.holds


def _bad_tables():
    add = [[(x + y) % 3 for y in range(3)] for x in range(3)]
    mul = [[(x * y) % 3 for y in range(3)] for x in range(3)]
    for x in range(3):
        for y in range(3):
            for v in range(3):
                if v != mul[x][y]:
                    m = [row[:] for row in mul]
                    m[x][y] = v
                    yield (x, y, v), add, m
            for v in range(3):
                if v != add[x][y]:
                    a = [row[:] for row in add]
                    a[x][y] = v
                    yield (x, y, v), a, mul


def test_every_single_cell_mutation_of_z3_is_rejected():
    assert check_ring_axioms(np.array([[0, 1, 2], [1, 2, 0], [2, 0, 1]]),
                             np.array([[0, 0, 0], [0, 1, 2], [0, 2, 1]])) is None
    count = 0
    for label, add, mul in _bad_tables():
        count += 1
        assert check_ring_axioms(np.array(add), np.array(mul), exhaustive=True) is not None, label
        assert check_ring_axioms(np.array(add), np.array(mul), exhaustive=False) is not None, label
    assert count == 36


def test_table_not_a_ring_raises_with_witness():
    with pytest.raises(TableNotARing) as info:
        build_ring(Table(2, [[0, 1], [1, 1]], [[0, 0], [0, 1]]))
    assert info.value.axiom


def test_size_cap():
    assert predicted_size(parse_spec("M2(Z4)")) == 256
    assert predicted_size(parse_spec("Z8/(4)")) is None
    with pytest.raises(SizeCapExceeded):
        build_ring(parse_spec("M2(Z9)"), max_elements=4096)
    with pytest.raises(SizeCapExceeded):
        build_ring(parse_spec("Z100"), max_elements=50)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 40), st.integers(1, 40))
def test_cyclic_quotients_agree_with_gcd(n, g):
    from math import gcd
    R = build_ring(Cyclic(n))
    Q, _ = quotient_ring(R, sorted({(g * k) % n for k in range(n)}))
    assert Q.size == gcd(g, n)
