import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import mv_chain_reference
from glring.errors import SizeCapExceeded
from glring.mv import (MVTable, atoms, cayley_text, check_axioms, is_commutative, iso_to_chain_product,
                       make_chain, mixed_radix, product_mv)


@pytest.mark.parametrize("n", [1, 2, 3, 5, 9])
def test_chain_matches_truncated_arithmetic(n):
    A = make_chain(n)
    oplus, odot, neg = mv_chain_reference(n)
    assert A.oplus.tolist() == oplus
    assert A.odot.tolist() == odot
    assert A.neg_minus.tolist() == neg == A.neg_tilde.tolist()
    assert (A.zero, A.one) == (0, n - 1)


def test_small_chain_values():
    assert make_chain(2).oplus.tolist() == [[0, 1], [1, 1]]
    L3 = make_chain(3)
    assert L3.oplus[1, 1] == 2 and L3.odot[1, 1] == 0 and L3.neg_minus[1] == 1
    trivial = make_chain(1)
    assert trivial.zero == trivial.one == 0
    assert check_axioms(trivial).passed


def test_all_chains_up_to_64_pass():
    for n in range(1, 65):
        assert check_axioms(make_chain(n)).passed, n


def test_mutated_chain_fails_a6():
    bad = make_chain(3).with_oplus(1, 1, 1)
    rep = check_axioms(bad)
    assert not rep.passed
    assert rep.witnesses["A6"] == (1, 2)


def test_mutation_does_not_touch_original():
    A = make_chain(3)
    A.with_oplus(0, 0, 2)
    assert A.oplus[0, 0] == 0


def test_product_sizes_and_atoms():
    B4 = product_mv([make_chain(2), make_chain(2)])
    assert B4.size == 4
    assert np.array_equal(B4.oplus, B4.join)
    L32 = product_mv([make_chain(3), make_chain(2)])
    assert L32.size == 6 and len(atoms(L32)) == 2
    assert product_mv([make_chain(3)]) == make_chain(3)
    assert check_axioms(product_mv([make_chain(2), make_chain(3)])).passed


def test_product_is_componentwise():
    A = product_mv([make_chain(3), make_chain(4)])
    coords = mixed_radix([3, 4])
    for x in range(A.size):
        for y in range(A.size):
            expected = [min(coords[x, k] + coords[y, k], u) for k, u in enumerate((2, 3))]
            assert coords[A.oplus[x, y]].tolist() == expected


def test_product_cap():
    with pytest.raises(SizeCapExceeded):
        product_mv([make_chain(64), make_chain(64), make_chain(2)])


def test_atoms():
    assert atoms(make_chain(5)) == [1]
    B4 = product_mv([make_chain(2), make_chain(2)])
    coords = mixed_radix([2, 2])
    assert sorted(coords[a].tolist() for a in atoms(B4)) == [[0, 1], [1, 0]]
    assert atoms(make_chain(1)) == []


@pytest.mark.parametrize("sizes", [[3, 2], [7], [2, 2], [4, 3, 2], [1]])
def test_iso_recovers_chain_lengths(sizes):
    iso = iso_to_chain_product(product_mv([make_chain(n) for n in sizes]))
    assert iso is not None
    assert sorted(iso.chain_lengths) == sorted(n for n in sizes if n > 1)


def test_iso_on_chain_is_identity():
    iso = iso_to_chain_product(make_chain(7))
    assert iso.chain_lengths == [7]
    assert iso.coords[:, 0].tolist() == list(range(7))


def test_derived_order_and_lattice_on_chain():
    A = make_chain(4)
    x, y = np.meshgrid(range(4), range(4), indexing="ij")
    assert np.array_equal(A.leq, x <= y)
    assert np.array_equal(A.join, np.maximum(x, y))
    assert np.array_equal(A.meet, np.minimum(x, y))
    assert A.multiple(1, 2) == 2 and A.multiple(1, 10) == 3 and A.multiple(2, 0) == 0


def test_commutativity_report():
    rep = is_commutative(product_mv([make_chain(3), make_chain(3)]))
    assert rep.commutative and rep.witness is None and rep.negations_agree


def test_noncommutative_table_is_flagged():
    A = make_chain(3)
    skew = MVTable(np.array([[0, 1, 2], [2, 2, 2], [2, 2, 2]]), A.neg_minus, A.neg_tilde, 0, 2)
    rep = is_commutative(skew)
    assert not rep.commutative and rep.witness == (0, 1)
    assert not check_axioms(skew).passed


def test_json_roundtrip():
    A = product_mv([make_chain(3), make_chain(2)])
    assert MVTable.from_json(json.loads(json.dumps(A.to_json()))) == A


def test_cayley_text_has_a_row_per_element():
    text = cayley_text(make_chain(3))
    assert len(text.strip().splitlines()) >= 4
    assert "2" in text


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(1, 5), min_size=1, max_size=3))
def test_products_of_chains_pass_and_decompose(sizes):
    A = product_mv([make_chain(n) for n in sizes])
    assert check_axioms(A).passed
    assert is_commutative(A).commutative
    iso = iso_to_chain_product(A)
    assert iso is not None
    assert sorted(iso.chain_lengths) == sorted(n for n in sizes if n > 1)
    # double negation and oplus duality
    assert np.array_equal(A.neg_tilde[A.neg_minus], np.arange(A.size))
    assert np.array_equal(A.oplus, A.neg_minus[A.odot[A.neg_tilde[:, None], A.neg_tilde[None, :]].T])
