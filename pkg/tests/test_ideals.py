import numpy as np
import pytest

from conftest import lattice_of, mask, ring_of
from oracles import brute_force_ideals, naive_ideal_product, naive_left_ann, naive_right_ann
from glring.errors import IdealCountCapExceeded
from glring.ideals import (enumerate_ideals, enumerate_left_ideals, ideal_power, ideal_product, ideal_sum,
                           is_left_chain_ring, left_annihilator, maximal_ideals, popcount, prime_ideals,
                           right_annihilator)

SMALL = ["Z1", "Z2", "Z6", "Z8", "Z12", "GF(2)[x]/(x^2)", "GF(2)[x]/(x^3)", "Z2 x Z4",
         "M2(Z2)", "@counterexample_f2xy.json", "@upper_triangular_f2.json", "@zero_mult_z2.json"]


@pytest.mark.parametrize("text", SMALL)
def test_enumeration_matches_subset_oracle(text):
    R, L = ring_of(text), lattice_of(text)
    assert L.ideals == sorted(brute_force_ideals(R.add, R.mul), key=lambda m: (popcount(m), m))


@pytest.mark.parametrize("text", ["M2(Z2)", "@upper_triangular_f2.json", "Z6"])
def test_left_ideals_match_subset_oracle(text):
    R = ring_of(text)
    assert sorted(enumerate_left_ideals(R)) == brute_force_ideals(R.add, R.mul, right=False)


@pytest.mark.parametrize("text", SMALL)
def test_tables_match_naive_definitions(text):
    R, L = ring_of(text), lattice_of(text)
    for i, a in enumerate(L.ideals):
        assert L.ideals[L.right_ann[i]] == naive_right_ann(R.mul, R.zero, a)
        assert L.ideals[L.left_ann[i]] == naive_left_ann(R.mul, R.zero, a)
        for j, b in enumerate(L.ideals):
            assert L.ideals[L.product[i, j]] == naive_ideal_product(R.add, R.mul, a, b)
            assert L.ideals[L.intersection[i, j]] == a & b
            assert L.ideals[L.sum[i, j]] == ideal_sum(R, a, b)
            assert L.contains(i, j) == (b & ~a == 0)


def test_bitset_functions_agree_with_tables():
    R, L = ring_of("Z12"), lattice_of("Z12")
    for i, a in enumerate(L.ideals):
        assert right_annihilator(R, a) == L.ideals[L.right_ann[i]]
        assert left_annihilator(R, a) == L.ideals[L.left_ann[i]]
        assert ideal_power(R, a, 2) == L.ideals[L.power(i, 2)]
        for j, b in enumerate(L.ideals):
            assert ideal_product(R, a, b) == L.ideals[L.product[i, j]]


def test_cyclic_ideals_are_divisors():
    L = lattice_of("Z12")
    assert L.size == 6
    assert sorted(popcount(m) for m in L.ideals) == [1, 2, 3, 4, 6, 12]
    assert L.ideals[L.top] == (1 << 12) - 1 and L.ideals[L.bottom] == 1


def test_annihilators_in_z12():
    L = lattice_of("Z12")
    two = L.id_of(mask(0, 2, 4, 6, 8, 10))
    six = L.id_of(mask(0, 6))
    assert L.right_ann[two] == six and L.right_ann[six] == two
    assert L.right_ann[L.bottom] == L.top and L.right_ann[L.top] == L.bottom


def test_ordering_is_by_size_then_value():
    L = lattice_of("Z2 x Z4")
    keys = [(popcount(m), m) for m in L.ideals]
    assert keys == sorted(keys)


def test_principal_ideal_per_element():
    R, L = ring_of("Z12"), lattice_of("Z12")
    assert L.ideals[L.principal[5]] == (1 << 12) - 1
    assert L.ideals[L.principal[4]] == mask(0, 4, 8)
    assert len(L.principal) == R.size


def test_matrix_ring_is_simple():
    L = lattice_of("M2(Z2)")
    assert L.size == 2
    assert maximal_ideals(L) == [L.bottom]
    assert prime_ideals(L) == [L.bottom]


def test_maximal_and_prime_ideals_of_z12():
    L = lattice_of("Z12")
    two, three = L.id_of(mask(*range(0, 12, 2))), L.id_of(mask(*range(0, 12, 3)))
    assert maximal_ideals(L) == sorted([two, three])
    assert prime_ideals(L) == sorted([two, three])


@pytest.mark.parametrize("text", SMALL)
def test_restricted_prime_scan_equals_exhaustive(text):
    L = lattice_of(text)
    assert prime_ideals(L) == prime_ideals(L, exhaustive=True)


@pytest.mark.parametrize("text", SMALL)
def test_covers_match_naive(text):
    L = lattice_of(text)
    naive = []
    for i, a in enumerate(L.ideals):
        for j, b in enumerate(L.ideals):
            if a != b and a & ~b == 0:
                between = [c for c in L.ideals if c not in (a, b) and a & ~c == 0 and c & ~b == 0]
                if not between:
                    naive.append((i, j))
    assert sorted(L.covers()) == sorted(naive)


def test_up_and_down_are_transposes():
    L = lattice_of("Z2 x Z4")
    for i in range(L.size):
        for j in range(L.size):
            assert (L.up[i] >> j & 1) == (L.down[j] >> i & 1)


def test_left_chain_rings():
    assert is_left_chain_ring(ring_of("Z8"))
    assert is_left_chain_ring(ring_of("GF(2)[x]/(x^3)"))
    assert not is_left_chain_ring(ring_of("Z6"))
    assert not is_left_chain_ring(ring_of("M2(Z2)"))


def test_ideal_cap():
    with pytest.raises(IdealCountCapExceeded):
        enumerate_ideals(ring_of("Z2 x Z4"), max_ideals=3)


def test_power_zero_is_whole_ring():
    R, L = ring_of("@zero_mult_z2.json"), lattice_of("@zero_mult_z2.json")
    assert L.power(L.top, 0) == L.top
    assert L.power(L.top, 1) == L.top
    assert L.power(L.top, 2) == L.bottom
    assert ideal_power(R, 3, 0) == 3


def test_tables_are_commutative_for_sum_and_intersection():
    L = lattice_of("M2(Z2)")
    assert np.array_equal(L.sum, L.sum.T)
    assert np.array_equal(L.intersection, L.intersection.T)
