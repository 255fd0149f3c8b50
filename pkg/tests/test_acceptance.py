"""Acceptance criteria, one test each.

Every test records a ``PASS``/``FAIL`` line (with its wall time against the
stated budget) in ``RESULTS``; the lines are printed in the pytest terminal
summary and when this file is run directly with ``python``.
"""

from __future__ import annotations

import subprocess
import sys
import time
from functools import lru_cache

import numpy as np
import pytest

from oracles import brute_force_ideals, elements_of
from glring.analysis import (check_closure_suite, check_distributivity, check_finiteness_and_unitarity,
                             check_glr, check_infinite_product_witness, check_pmv_of_ring,
                             check_prime_maximal, check_spir_annihilator_law, decompose, ideal_mv,
                             is_spir)
from glring.corpus import full_corpus, glr_positive_family, small_corpus
from glring.dsl import parse_spec, render
from glring.ideals import enumerate_ideals
from glring.mv import MVTable, check_axioms, iso_to_chain_product, make_chain, product_mv
from glring.ring import build_ring, product_ring, quotient_ring
from glring.semiring import check_duality, check_galois, semiring_from_mv, semiring_of_ideals

RESULTS: dict[int, str] = {}


def record(number: int, title: str, passed: bool, seconds: float, budget: float | None = None, note: str = ""):
    timing = f"{seconds:.2f}s" + (f" (budget {budget:g}s)" if budget is not None else "")
    ok = passed and (budget is None or seconds < budget)
    line = f"[{'PASS' if ok else 'FAIL'}] AC{number:<2} {title}: {timing}" + (f"; {note}" if note else "")
    RESULTS[number] = line
    print(line)
    return ok


@lru_cache(maxsize=None)
def corpus_rings():
    """Every corpus ring with its lattice and GLR report, built once."""
    out = []
    for entry in full_corpus():
        R = build_ring(entry.spec)
        L = enumerate_ideals(R)
        out.append((entry.name, R, L, check_glr(R, L)))
    return tuple(out)


def corpus_glrs():
    return [(name, R, L, g) for name, R, L, g in corpus_rings() if g.is_glr]


def single_cell_mutations(A: MVTable):
    n = A.size
    for x in range(n):
        for y in range(n):
            for v in range(n):
                if v != A.oplus[x, y]:
                    yield ("oplus", x, y, v), A.with_oplus(x, y, v)
    for which in ("neg_minus", "neg_tilde"):
        for x in range(n):
            for v in range(n):
                base = getattr(A, which)
                if v != base[x]:
                    vec = base.copy()
                    vec[x] = v
                    minus = vec if which == "neg_minus" else A.neg_minus
                    tilde = vec if which == "neg_tilde" else A.neg_tilde
                    yield (which, x, v), MVTable(A.oplus, minus, tilde, A.zero, A.one)


def test_ac01_axiom_suite_and_mutations():
    t = time.perf_counter()
    chains_ok = all(check_axioms(make_chain(n)).passed for n in range(1, 65))
    missed, total = [], 0
    for n in (3, 4):
        for label, mutant in single_cell_mutations(make_chain(n)):
            total += 1
            if check_axioms(mutant).passed:
                missed.append((n, label))
    dt = time.perf_counter() - t
    ok = record(1, "chains 1..64 pass A1-A8; every single-cell mutation of L3/L4 caught",
                chains_ok and not missed, dt, 1.0, f"{total} mutants, {len(missed)} missed")
    assert chains_ok
    assert not missed, missed[:5]
    assert ok


def test_ac02_enumeration_matches_brute_force():
    small = [(name, R, L) for name, R, L, _ in corpus_rings() if R.size <= 16]
    t = time.perf_counter()
    mismatched = [name for name, R, L in small
                  if brute_force_ideals(R.add, R.mul) != sorted(L.ideals)]
    dt = time.perf_counter() - t
    ok = record(2, "join-closure enumeration equals subset brute force on rings <= 16 elements",
                not mismatched, dt, 10.0, f"{len(small)} rings")
    assert not mismatched
    assert ok


def test_ac03_special_primary_family_is_glr():
    t = time.perf_counter()
    bad = []
    specs = glr_positive_family()
    for spec in specs:
        R = build_ring(spec)
        L = enumerate_ideals(R)
        cert = is_spir(R, L)
        if not (check_glr(R, L).is_glr and cert is not None and cert.unitary
                and check_spir_annihilator_law(cert, L)):
            bad.append(render(spec))
    dt = time.perf_counter() - t
    ok = record(3, "prime-power residues, GF(p)[x]/(x^k), M2(GF(2)[x]/(x^2)) are GLRs with the power law",
                not bad, dt, 30.0, f"{len(specs)} rings")
    assert not bad
    assert ok


def test_ac04_negative_witness():
    t = time.perf_counter()
    R = build_ring(parse_spec("@counterexample_f2xy.json"))
    L = enumerate_ideals(R)
    rep = check_glr(R, L)
    x_ideal = (1 << 0) | (1 << 2)            # {0, x}
    maximal = sum(1 << e for e in (0, 2, 4, 6))   # {0, x, y, x+y}
    w = rep.double_annihilator_witness
    found = w is not None and L.ideals[w[0]] == x_ideal and L.ideals[w[1]] == maximal
    dt = time.perf_counter() - t
    ok = record(4, "GF(2)[x,y]/(x^2,xy,y^2) is not a GLR; witness I=(x), I**=M",
                not rep.is_glr and found, dt, 1.0)
    assert not rep.is_glr
    assert found
    assert ok


def test_ac05_duality_round_trips():
    t = time.perf_counter()
    bad, count = [], 0
    for name, R, L, g in corpus_glrs():
        S = semiring_of_ideals(L)
        count += 1
        if not check_duality(ideal_mv(L), S).passed:
            bad.append(name)
    mv_inputs = [make_chain(n) for n in range(1, 65)]
    mv_inputs += [product_mv([make_chain(a), make_chain(b)]) for a in range(1, 7) for b in range(1, 7)]
    for A in mv_inputs:
        count += 1
        if not check_duality(A, semiring_from_mv(A)).passed:
            bad.append(repr(A))
    dt = time.perf_counter() - t
    ok = record(5, "S(A(S)) = S and A(S(A)) = A table-identical", not bad, dt, None,
                f"{count} instances")
    assert not bad
    assert ok


def test_ac06_galois_correspondence():
    t = time.perf_counter()
    bad, count = [], 0
    for name, R, L, g in corpus_glrs():
        if L.size <= 64:
            count += 1
            rep = check_galois(L)
            if rep.sinv_s_identity or rep.s_sinv_identity or rep.sinv_is_ideal:
                bad.append(name)
    dt = time.perf_counter() - t
    ok = record(6, "I = S^-1(S(I)) and S(S^-1(I)) = I on corpus GLRs with <= 64 ideals",
                not bad, dt, None, f"{count} rings")
    assert not bad
    assert ok


def test_ac07_decomposition_certifies():
    glrs = corpus_glrs()
    names = {name for name, *_ in glrs}
    required = {"Z6", "Z12", "Z8", "Z4 x Z9", "M2(GF(2))"}
    t = time.perf_counter()
    bad = []
    for name, R, L, g in glrs:
        try:
            dec = decompose(R, L)
        except Exception as exc:   # noqa: BLE001
            bad.append(f"{name}: {exc}")
            continue
        iso = iso_to_chain_product(ideal_mv(L))
        if not (dec.certified and iso is not None
                and sorted(dec.chain_lengths) == sorted(iso.chain_lengths)
                and all(c.unitary for c in dec.certificates)):
            bad.append(name)
    dt = time.perf_counter() - t
    ok = record(7, "decompose certifies every corpus GLR", not bad and required <= names, dt, 60.0,
                f"{len(glrs)} GLRs")
    assert required <= names
    assert not bad, bad[:5]
    assert ok


def test_ac08_products_and_quotients():
    t = time.perf_counter()
    rings = [build_ring(s) for s in small_corpus()]
    rep = check_closure_suite(rings, max_elements=4096)
    quotient_failures = []
    for name, R, L, g in corpus_glrs():
        for m in L.ideals:
            Q, _ = quotient_ring(R, m)
            if not check_glr(Q).is_glr:
                quotient_failures.append((name, hex(m)))
    dt = time.perf_counter() - t
    ok = record(8, "products of small-corpus GLR pairs and all quotients of corpus GLRs are GLRs",
                rep.passed and not quotient_failures, dt, None,
                f"{len(rep.details['products'])} products, quotients of {len(corpus_glrs())} rings")
    assert rep.passed, rep.details["failures"]
    assert rep.details["products_skipped_by_cap"] == 0
    assert not quotient_failures, quotient_failures[:5]
    assert ok


def test_ac09_structural_consequences():
    t = time.perf_counter()
    bad = []
    for name, R, L, g in corpus_glrs():
        results = {
            "prime_maximal": check_prime_maximal(L, g).passed,
            "distributivity": check_distributivity(L).passed,
            "commutative": check_pmv_of_ring(R, L, glr=g).passed,
            "atoms": check_finiteness_and_unitarity(R, L).passed,
        }
        bad += [f"{name}:{k}" for k, v in results.items() if not v]
    dt = time.perf_counter() - t
    ok = record(9, "prime => maximal, distributivity, commutative A(R), maximal/atom bijection",
                not bad, dt, None, f"{len(corpus_glrs())} GLRs")
    assert not bad, bad[:5]
    assert ok


def test_ac10_infinite_product_truncations():
    t = time.perf_counter()
    rep = check_infinite_product_witness((1, 2, 4, 8)).to_json()
    out_of_scale = "out of desk scale" in rep["infinite_claim"]["status"]
    ks = [row["k"] for row in rep["truncations"]]
    lr = all(row["LR_on_triple"] and row["LR_on_all_pairs"] for row in rep["truncations"])
    dt = time.perf_counter() - t
    ok = record(10, "infinite counterexample reported out of scale; LR holds on GF(2)^k, k in {1,2,4,8}",
                out_of_scale and lr and ks == [1, 2, 4, 8], dt)
    assert out_of_scale
    assert ks == [1, 2, 4, 8]
    assert lr
    assert ok


def _cli(*args):
    proc = subprocess.run([sys.executable, "-m", "glring.cli", *args], capture_output=True)
    return proc.returncode, proc.stdout


def test_ac11_cli_contract():
    t = time.perf_counter()
    code_ok, out_ok = _cli("check", "--which", "glr", "Z12")
    code_fail, out_fail = _cli("check", "--which", "glr", "@counterexample_f2xy.json")
    code_err, _ = _cli("check", "--which", "glr", "Z12 x")
    code_dec, out_dec = _cli("decompose", "Z6")
    repeat = [_cli(*args)[1] for args in (("check", "--which", "glr", "Z12"), ("decompose", "Z6"),
                                          ("check", "--which", "glr", "@counterexample_f2xy.json"))]
    deterministic = repeat == [out_ok, out_dec, out_fail]
    witness_printed = b'"0x5"' in out_fail
    dt = time.perf_counter() - t
    ok = record(11, "exit codes 0/1/2 for pass/fail/error scenarios; byte-identical reruns",
                (code_ok, code_fail, code_err, code_dec) == (0, 1, 2, 0) and deterministic and witness_printed,
                dt)
    assert (code_ok, code_fail, code_err, code_dec) == (0, 1, 2, 0)
    assert witness_printed
    assert deterministic
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
