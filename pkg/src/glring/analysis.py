"""Classification of finite rings as generalized Łukasiewicz rings (GLRs).

Every check returns a report object with a ``passed`` flag and a
``to_json()`` view; ideals inside reports are hex-encoded element bitsets.
Failures of checked properties are report content. Exceptions are reserved
for violated preconditions, caps and internal inconsistencies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement

import numpy as np

from .errors import CertificationFailed, GLRCheckFailed, InvalidSpec, PreconditionFailed
from .ideals import (DEFAULT_MAX_IDEALS, IdealLattice, IdealMask, _bits, enumerate_ideals,
                     ideal_sum, is_left_chain_ring, left_annihilator, maximal_ideals,
                     prime_ideals, right_annihilator, to_mask)
from .mv import MVTable, atoms, check_axioms, is_commutative, iso_to_chain_product
from .ring import (DEFAULT_MAX_ELEMENTS, FiniteRing, as_bool_mask, build_ring,
                   is_central_idempotent_generated, product_ring, quotient_ring, restrict)
from .semiring import mv_from_semiring, semiring_of_ideals
from .specs import PolyQuotient, Product


def ring_label(R: FiniteRing) -> str:
    from .dsl import render
    try:
        return render(R.spec)
    except InvalidSpec:
        return f"<table ring of order {R.size}>"


def _hex_ids(L: IdealLattice, ids) -> list[str]:
    return [hex(L.ideals[int(i)]) for i in ids]


@dataclass
class CheckReport:
    """Outcome of one named property check with JSON-ready details."""

    name: str
    passed: bool
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"check": self.name, "passed": self.passed, **self.details}


# --------------------------------------------------------------------------
# GLR classification

@dataclass
class GLRReport:
    lattice: IdealLattice = field(repr=False, compare=False)
    central_idempotent_generated: bool
    AN_holds: bool
    AN_witness: tuple | None
    CO_holds: bool
    CO_witness: tuple | None
    LR_holds: bool
    LR_witness: tuple | None
    LR_route: str
    GLR1_holds: bool
    GLR1_witness: tuple | None
    GLR2_holds: bool
    GLR2_witness: tuple | None
    double_annihilator_holds: bool
    double_annihilator_witness: tuple | None   # (I, I**) by ideal id

    @property
    def is_glr(self) -> bool:
        """Verdict from the definition: (GLR-1), (GLR-2) and central idempotents."""
        return self.central_idempotent_generated and self.GLR1_holds and self.GLR2_holds

    @property
    def characterization_holds(self) -> bool:
        return self.central_idempotent_generated and self.AN_holds and self.CO_holds and self.LR_holds

    @property
    def routes_agree(self) -> bool:
        return self.is_glr == self.characterization_holds

    @property
    def passed(self) -> bool:
        return self.is_glr

    def to_json(self) -> dict:
        L = self.lattice

        def wit(w):
            return None if w is None else _hex_ids(L, w)

        return {
            "is_glr": self.is_glr,
            "routes_agree": self.routes_agree,
            "ring_size": L.ring.size,
            "ideal_count": L.size,
            "central_idempotent_generated": self.central_idempotent_generated,
            "AN": {"holds": self.AN_holds, "witness": wit(self.AN_witness)},
            "CO": {"holds": self.CO_holds, "witness": wit(self.CO_witness)},
            "LR": {"holds": self.LR_holds, "witness": wit(self.LR_witness), "route": self.LR_route},
            "GLR1": {"holds": self.GLR1_holds, "witness": wit(self.GLR1_witness)},
            "GLR2": {"holds": self.GLR2_holds, "witness": wit(self.GLR2_witness)},
            "double_annihilator": {"holds": self.double_annihilator_holds,
                                   "witness": wit(self.double_annihilator_witness)},
        }


def _first(bad: np.ndarray):
    hits = np.argwhere(bad)
    return tuple(int(v) for v in hits[0]) if hits.size else None


def check_glr(R: FiniteRing, L: IdealLattice | None = None, *,
              max_ideals: int = DEFAULT_MAX_IDEALS) -> GLRReport:
    L = L if L is not None else enumerate_ideals(R, max_ideals=max_ideals)
    P, Ssum = L.product, L.sum
    m, t = L.right_ann, L.left_ann
    idx = np.arange(L.size)
    I, J = idx[:, None], idx[None, :]

    cig = is_central_idempotent_generated(R).holds
    an = _first(m != t)
    co = _first(P != P.T)
    glr1 = _first((Ssum != m[P[t[P[t[I], J]], t[I]]]) | (Ssum != m[P[t[I], t[P[J, m[I]]]]]))
    glr2 = _first(m[P[t[J], t[I]]] != t[P[m[J], m[I]]])
    if an is None:
        star = m
        lr = _first(Ssum != star[P[star[I], star[P[star[I], J]]]])
        route = "star"
    else:
        lr = glr1 or glr2
        route = "definition"
    da = None
    for i in range(L.size):
        for twice in (int(t[m[i]]), int(m[t[i]])):
            if twice != i:
                da = (i, twice)
                break
        if da:
            break
    return GLRReport(L, cig, an is None, an, co is None, co, lr is None, lr, route,
                     glr1 is None, glr1, glr2 is None, glr2, da is None, da)


def ideal_mv(L: IdealLattice) -> MVTable:
    """The pseudo MV-algebra of ideals, ``I ⊕ J = (J~ · I~)⁻``."""
    return mv_from_semiring(semiring_of_ideals(L))


def check_pmv_of_ring(R: FiniteRing, L: IdealLattice | None = None, *,
                      glr: GLRReport | None = None, max_ideals: int = DEFAULT_MAX_IDEALS) -> CheckReport:
    L = L if L is not None else enumerate_ideals(R, max_ideals=max_ideals)
    glr = glr if glr is not None else check_glr(R, L)
    if not glr.is_glr:
        raise GLRCheckFailed(glr)
    A = ideal_mv(L)
    axioms = check_axioms(A)
    comm = is_commutative(A)
    iso = iso_to_chain_product(A)
    return CheckReport("pmv_of_ring", axioms.passed and comm.commutative and comm.negations_agree, {
        "size": A.size,
        "axioms": axioms.to_json(),
        "commutative": comm.commutative,
        "commutativity_witness": None if comm.witness is None else _hex_ids(L, comm.witness),
        "negations_agree": comm.negations_agree,
        "chain_lengths": None if iso is None else sorted(iso.chain_lengths, reverse=True),
    })


# --------------------------------------------------------------------------
# special primary rings

@dataclass
class SPIRCertificate:
    maximal_ideal: int | None
    nilpotency: int
    powers: list[int]
    unitary: bool

    def to_json(self, L: IdealLattice) -> dict:
        return {
            "maximal_ideal": None if self.maximal_ideal is None else hex(L.ideals[self.maximal_ideal]),
            "nilpotency": self.nilpotency,
            "powers": _hex_ids(L, self.powers),
            "unitary": self.unitary,
        }


def is_spir(R: FiniteRing, L: IdealLattice | None = None, *,
            max_ideals: int = DEFAULT_MAX_IDEALS) -> SPIRCertificate | None:
    """Unique maximal ideal M whose powers exhaust the ideals and reach zero.

    The zero ring is certified with no maximal ideal, nilpotency 0 and
    powers ``[R]``.
    """
    L = L if L is not None else enumerate_ideals(R, max_ideals=max_ideals)
    unitary = R.unity is not None
    if L.size == 1:
        return SPIRCertificate(None, 0, [L.top], unitary)
    maxes = maximal_ideals(L)
    if len(maxes) != 1:
        return None
    M = maxes[0]
    powers = [L.top, M]
    while powers[-1] != L.bottom:
        nxt = int(L.product[powers[-1], M])
        if nxt == powers[-1]:
            return None          # powers stabilise above zero
        powers.append(nxt)
    if sorted(powers) != list(range(L.size)):
        return None
    return SPIRCertificate(M, len(powers) - 1, powers, unitary)


def check_spir_annihilator_law(cert: SPIRCertificate, L: IdealLattice) -> bool:
    """Both annihilators of ``M^k`` equal ``M^(n-k)`` for ``1 <= k < n``."""
    n = cert.nilpotency
    for k in range(1, n):
        pk, pnk = cert.powers[k], cert.powers[n - k]
        if L.left_ann[pk] != pnk or L.right_ann[pk] != pnk:
            return False
    return True


# --------------------------------------------------------------------------
# closure under products and quotients

def check_closure_suite(rings: list[FiniteRing], *, max_elements: int = DEFAULT_MAX_ELEMENTS,
                        max_ideals: int = DEFAULT_MAX_IDEALS, kfold: bool = True) -> CheckReport:
    """Products of GLR pairs (and of all GLR inputs at once) and every quotient of each GLR."""
    glrs = [R for R in rings if check_glr(R, max_ideals=max_ideals).is_glr]
    products, quotients, skipped, failures = [], [], 0, []

    def record(bucket, label, R):
        ok = check_glr(R, max_ideals=max_ideals).is_glr
        bucket.append({"ring": label, "is_glr": ok})
        if not ok:
            failures.append(label)

    for a, b in combinations_with_replacement(range(len(glrs)), 2):
        A, B = glrs[a], glrs[b]
        if A.size * B.size > max_elements:
            skipped += 1
            continue
        record(products, f"{ring_label(A)} x {ring_label(B)}", product_ring([A, B]))
    if kfold and len(glrs) > 2 and int(np.prod([R.size for R in glrs])) <= max_elements:
        record(products, " x ".join(ring_label(R) for R in glrs), product_ring(glrs))
    for R in glrs:
        L = enumerate_ideals(R, max_ideals=max_ideals)
        for mask in L.ideals:
            Q, _ = quotient_ring(R, mask)
            record(quotients, ring_label(Q), Q)
    return CheckReport("closure", not failures, {
        "inputs": len(rings), "glr_inputs": len(glrs), "products": products,
        "products_skipped_by_cap": skipped, "quotients": quotients, "failures": failures,
    })


def _gf2_power(k: int) -> FiniteRing:
    field_ = PolyQuotient(2, (0, 1))
    return build_ring(Product((field_,) * k), validate=False)


def check_infinite_product_witness(ks=(1, 2, 4, 8)) -> CheckReport:
    """Finite truncations of the infinite-product counterexample.

    In ``GF(2)^k`` (positions 1..k) take ``I`` = vectors vanishing at even
    positions, ``J`` = everything (the truncated direct sum) and ``K`` =
    vectors vanishing at odd positions. LR holds on the triple and on the
    whole lattice; the infinite failure needs infinitely many positions.
    """
    rows = []
    for k in ks:
        R = _gf2_power(k)
        L = enumerate_ideals(R)
        coords = np.array([[(e >> (k - 1 - pos)) & 1 for pos in range(k)] for e in range(R.size)],
                          dtype=bool).reshape(R.size, k)
        position = np.arange(1, k + 1)
        I_mask = to_mask(~coords[:, position % 2 == 0].any(axis=1))
        K_mask = to_mask(~coords[:, position % 2 == 1].any(axis=1))
        i, j, kk = L.id_of(I_mask), L.top, L.id_of(K_mask)
        star, P = L.right_ann, L.product
        i_star = int(star[i])
        sum_star = int(star[L.sum[i, j]])
        rhs_inner = int(P[star[P[i_star, j]], i_star])
        lr_triple = int(L.sum[i, j]) == int(star[P[i_star, star[P[i_star, j]]]])
        glr = check_glr(R, L)
        rows.append({
            "k": k,
            "I": hex(I_mask), "J": hex(L.ideals[j]), "K": hex(K_mask),
            "I_star_equals_K": i_star == kk,
            "sum_star_is_zero": sum_star == L.bottom,
            "inner_expression_is_zero": rhs_inner == L.bottom,
            "LR_on_triple": lr_triple,
            "LR_on_all_pairs": glr.LR_holds,
            "is_glr": glr.is_glr,
        })
    passed = all(r["LR_on_triple"] and r["LR_on_all_pairs"] for r in rows)
    return CheckReport("infinite_product_witness", passed, {
        "infinite_claim": {
            "ring": "countable direct product of copies of a field F",
            "ideals": {"I": "sequences vanishing at even positions",
                       "J": "finitely supported sequences",
                       "K": "sequences vanishing at odd positions"},
            "claim": "I* = K and (I+J)* = 0 while (I*J)* I* = K, so LR fails",
            "status": "out of desk scale: not computed",
        },
        "truncations": rows,
    })


# --------------------------------------------------------------------------
# lattice-level properties

def check_distributivity(L: IdealLattice, *, family_cap: int = 12, samples: int = 256,
                         seed: int = 0) -> CheckReport:
    """``I ∩ (J+K) = I∩J + I∩K`` on all triples and ``I + ⋂J = ⋂(I+J)`` on families.

    Families are all nonempty subsets when there are at most ``family_cap``
    ideals, otherwise ``samples`` random families drawn with ``seed``.
    """
    n = L.size
    S, X = L.sum, L.intersection
    idx = np.arange(n)
    first_i = None
    step = max(1, (1 << 22) // max(1, n * n))
    for lo in range(0, n, step):
        xs = idx[lo:lo + step]
        lhs = X[xs[:, None, None], S[None, :, :]]
        rhs = S[X[xs][:, :, None], X[xs][:, None, :]]
        hits = np.argwhere(lhs != rhs)
        if hits.size:
            first_i = (int(hits[0][0]) + lo, int(hits[0][1]), int(hits[0][2]))
            break

    def family_fails(fam) -> tuple | None:
        meet = L.top
        rhs = np.full(n, L.top)
        for j in fam:
            meet = int(X[meet, j])
            rhs = X[rhs, S[:, j]]
        bad = np.flatnonzero(S[:, meet] != rhs)
        return (int(bad[0]), tuple(int(j) for j in fam)) if bad.size else None

    first_ii = None
    if n <= family_cap:
        mode, count = "exhaustive", (1 << n) - 1
        for bits in range(1, 1 << n):
            first_ii = family_fails(list(_bits(bits)))
            if first_ii:
                break
    else:
        mode, count = "sampled", samples
        rng = np.random.default_rng(seed)
        for _ in range(samples):
            size = int(rng.integers(1, min(n, 8) + 1))
            first_ii = family_fails(sorted(rng.choice(n, size=size, replace=False).tolist()))
            if first_ii:
                break
    return CheckReport("distributivity", first_i is None and first_ii is None, {
        "triples": n ** 3,
        "triple_witness": None if first_i is None else _hex_ids(L, first_i),
        "family_mode": mode, "families": count, "seed": seed if mode == "sampled" else None,
        "family_witness": None if first_ii is None else {
            "I": hex(L.ideals[first_ii[0]]), "family": _hex_ids(L, first_ii[1])},
    })


def check_prime_maximal(L: IdealLattice, glr: GLRReport) -> CheckReport:
    primes = prime_ideals(L)
    maxes = maximal_ideals(L)
    subset = set(primes) <= set(maxes)
    return CheckReport("prime_maximal", subset or not glr.is_glr, {
        "asserted": glr.is_glr, "primes": _hex_ids(L, primes), "maximal": _hex_ids(L, maxes),
        "primes_are_maximal": subset,
    })


def check_ideal_summand(R: FiniteRing, M: IdealMask, *, max_ideals: int = DEFAULT_MAX_IDEALS) -> CheckReport:
    """An ideal meeting both its annihilators in zero is itself a GLR."""
    zero = 1 << R.zero
    right, left = right_annihilator(R, M), left_annihilator(R, M)
    if M & right != zero or M & left != zero:
        raise PreconditionFailed("M must meet both of its annihilators only in 0")
    sub = restrict(R, M)
    glr = check_glr(sub, max_ideals=max_ideals)
    full = (1 << R.size) - 1
    sums = ideal_sum(R, M, right) == full and ideal_sum(R, M, left) == full
    return CheckReport("ideal_summand", glr.is_glr and sums, {
        "ideal": hex(M), "order": sub.size, "unity": sub.unity,
        "is_glr": glr.is_glr, "sum_with_annihilator_is_R": sums,
    })


def check_finiteness_and_unitarity(R: FiniteRing, L: IdealLattice | None = None, *,
                                   max_ideals: int = DEFAULT_MAX_IDEALS) -> CheckReport:
    """Chains of ideals force a unity; maximal ideals match atoms via ``M ↦ M*``."""
    L = L if L is not None else enumerate_ideals(R, max_ideals=max_ideals)
    A = ideal_mv(L)
    is_chain = bool(np.all(A.leq | A.leq.T))
    unity_ok = R.unity is not None or not is_chain
    ats = atoms(A)
    maxes = maximal_ideals(L)
    stars = [int(L.right_ann[M]) for M in maxes]
    bijection = len(set(stars)) == len(maxes) and set(stars) == set(ats)
    return CheckReport("finiteness_unitarity", unity_ok and bijection, {
        "ideal_count": L.size, "chain": is_chain, "unity": R.unity,
        "atoms": _hex_ids(L, ats), "maximal": _hex_ids(L, maxes),
        "maximal_to_atom_bijection": bijection,
    })


def check_artinian_chain_criterion(R: FiniteRing, *, max_ideals: int = DEFAULT_MAX_IDEALS) -> CheckReport:
    """Unital rings with totally ordered left ideals are SPIRs and GLRs."""
    unital = R.unity is not None
    chain = is_left_chain_ring(R, max_ideals=max_ideals)
    applicable = unital and chain
    details = {"unital": unital, "left_chain": chain, "applicable": applicable}
    ok = True
    if applicable:
        L = enumerate_ideals(R, max_ideals=max_ideals)
        cert = is_spir(R, L)
        glr = check_glr(R, L)
        details.update(spir=cert is not None, is_glr=glr.is_glr)
        ok = cert is not None and glr.is_glr
    return CheckReport("artinian_chain", ok, details)


def _image_mask(Q: FiniteRing, proj: np.ndarray, R: FiniteRing, mask: IdealMask) -> IdealMask:
    out = np.zeros(Q.size, dtype=bool)
    out[proj[as_bool_mask(R, mask)]] = True
    return to_mask(out)


def check_quotient_annihilators(R: FiniteRing, L: IdealLattice | None = None, *,
                                max_ideals: int = DEFAULT_MAX_IDEALS) -> CheckReport:
    """For ``I ⊆ J`` compare ``(J/I)⁻`` with ``(I~·J)⁻/I`` and ``(J/I)~`` with ``(J·I⁻)~/I``.

    In any ring the quotient annihilator is contained in the projected one.
    Equality needs ``I = (I~)⁻`` (resp. ``I = (I⁻)~``), which holds for every
    ideal of a GLR, so it is asserted only where that condition is met.
    """
    L = L if L is not None else enumerate_ideals(R, max_ideals=max_ideals)
    P, m, t = L.product, L.right_ann, L.left_ann
    pairs, inclusion, equality = 0, None, None
    for i in range(L.size):
        Q, proj = quotient_ring(R, L.ideals[i])
        dual_right = int(m[t[i]]) == i
        dual_left = int(t[m[i]]) == i
        for j in _bits(L.up[i]):
            pairs += 1
            Jbar = _image_mask(Q, proj, R, L.ideals[j])
            got_r, got_l = right_annihilator(Q, Jbar), left_annihilator(Q, Jbar)
            want_r = _image_mask(Q, proj, R, L.ideals[m[P[t[i], j]]])
            want_l = _image_mask(Q, proj, R, L.ideals[t[P[j, m[i]]]])
            if inclusion is None and (got_r & ~want_r or got_l & ~want_l):
                inclusion = (i, j)
            if equality is None and ((dual_right and got_r != want_r) or (dual_left and got_l != want_l)):
                equality = (i, j)
    return CheckReport("quotient_annihilators", inclusion is None and equality is None, {
        "nested_pairs": pairs,
        "inclusion_witness": None if inclusion is None else _hex_ids(L, inclusion),
        "equality_witness": None if equality is None else _hex_ids(L, equality),
    })


# --------------------------------------------------------------------------
# the decomposition into special primary rings

@dataclass
class Decomposition:
    ring: FiniteRing = field(repr=False)
    lattice: IdealLattice = field(repr=False)
    atoms: list[int]                       # ideal ids of A(R) atoms
    summand_ideals: list[IdealMask]        # R_x
    complements: list[IdealMask]           # R*_x
    chain_lengths: list[int]
    factor_rings: list[FiniteRing] = field(repr=False)
    certificates: list[SPIRCertificate]
    coords: np.ndarray = field(repr=False)  # coords[r, x] = image of r in R/R*_x
    checks: dict[str, bool]
    certified: bool

    def canonical_map(self, r: int) -> tuple[int, ...]:
        return tuple(int(c) for c in self.coords[r])

    def to_json(self) -> dict:
        L = self.lattice
        factors = []
        for x, F in enumerate(self.factor_rings):
            FL = enumerate_ideals(F)
            factors.append({
                "atom": hex(L.ideals[self.atoms[x]]),
                "summand": hex(self.summand_ideals[x]),
                "complement": hex(self.complements[x]),
                "chain_length": self.chain_lengths[x],
                "order": F.size,
                "ring": ring_label(F),
                "spir": self.certificates[x].to_json(FL),
            })
        return {"certified": self.certified, "ring_size": self.ring.size,
                "chain_lengths": self.chain_lengths, "checks": self.checks, "factors": factors}


def decompose(R: FiniteRing, L: IdealLattice | None = None, *,
              max_ideals: int = DEFAULT_MAX_IDEALS) -> Decomposition:
    """``R ≅ ∏ R/R*_x`` over the atoms ``a_x`` of the ideal algebra.

    ``R_x`` is the idempotent hull of ``a_x`` under ``⊕``. Every structural
    fact is verified; a failure raises :class:`CertificationFailed`.
    """
    L = L if L is not None else enumerate_ideals(R, max_ideals=max_ideals)
    glr = check_glr(R, L)
    if not glr.is_glr:
        raise GLRCheckFailed(glr)
    A = ideal_mv(L)
    iso = iso_to_chain_product(A)
    if iso is None:
        raise CertificationFailed("ideal algebra is not a product of chains")
    star, S, X, P = L.right_ann, L.sum, L.intersection, L.product
    ats, hulls = iso.atoms, iso.hulls
    comps = [int(star[h]) for h in hulls]
    checks = {
        "atoms_are_annihilators_of_maximals": sorted(int(star[M]) for M in maximal_ideals(L)) == sorted(ats),
        "fact1_sum": all(S[h, c] == L.top for h, c in zip(hulls, comps)),
        "fact2_intersection": all(X[h, c] == L.bottom for h, c in zip(hulls, comps)),
        "fact3_disjoint": all(X[a, b] == L.bottom for i, a in enumerate(hulls) for b in hulls[i + 1:]),
        "fact4_idempotent": all(P[h, h] == h for h in hulls),
    }

    factors, certs, projs = [], [], []
    for c in comps:
        F, proj = quotient_ring(R, L.ideals[c])
        factors.append(F)
        projs.append(proj)
        certs.append(is_spir(F, max_ideals=max_ideals))
    checks["factors_unitary_spir"] = all(c is not None and c.unitary for c in certs)
    factor_lengths = [len(enumerate_ideals(F, max_ideals=max_ideals)) for F in factors]
    checks["chain_lengths_match"] = factor_lengths == list(iso.chain_lengths)
    checks["nilpotency_matches"] = all(
        c is not None and c.nilpotency + 1 == n for c, n in zip(certs, factor_lengths))

    coords = np.stack(projs, axis=1).astype(np.int64) if projs else np.zeros((R.size, 0), dtype=np.int64)
    checks["canonical_map_bijective"] = _is_bijective(coords, [F.size for F in factors])
    checks["canonical_map_homomorphic"] = all(_is_homomorphism(R, F, proj) for F, proj in zip(factors, projs))
    checks["summands_isomorphic_to_factors"] = all(
        np.unique(proj[as_bool_mask(R, L.ideals[h])]).size == F.size == int(as_bool_mask(R, L.ideals[h]).sum())
        for h, F, proj in zip(hulls, factors, projs))

    certified = all(checks.values())
    dec = Decomposition(R, L, list(ats), [L.ideals[h] for h in hulls], [L.ideals[c] for c in comps],
                        list(iso.chain_lengths), factors, certs, coords, checks, certified)
    if not certified:
        failed = sorted(k for k, v in checks.items() if not v)
        raise CertificationFailed(f"decomposition checks failed: {', '.join(failed)}")
    return dec


def _is_bijective(coords: np.ndarray, sizes: list[int]) -> bool:
    total = int(np.prod(sizes, dtype=np.int64)) if sizes else 1
    if coords.shape[0] != total:
        return False
    flat = np.zeros(coords.shape[0], dtype=np.int64)
    for x, s in enumerate(sizes):
        flat = flat * s + coords[:, x]
    return np.unique(flat).size == total


def _is_homomorphism(R: FiniteRing, F: FiniteRing, proj: np.ndarray) -> bool:
    proj = proj.astype(np.int64)
    step = max(1, (1 << 22) // max(1, R.size))
    for lo in range(0, R.size, step):
        pa = proj[lo:lo + step, None]
        pb = proj[None, :]
        if not (np.array_equal(proj[R.add[lo:lo + step]], F.add[pa, pb])
                and np.array_equal(proj[R.mul[lo:lo + step]], F.mul[pa, pb])):
            return False
    return True
