"""Generalized Łukasiewicz semirings and their duality with pseudo MV-algebras.

A semiring is stored like :class:`~glring.mv.MVTable`: operation tables over
element indices ``0..n-1`` plus the two negation vectors. Semiring ideals are
``int`` bitsets over those indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import GLAxiomsFailed, SemiringIdealCountCapExceeded
from .ideals import IdealLattice, IdealMask, _bits, popcount
from .mv import AxiomReport, MVTable, _all_equal, _first, _first_blocked, _not_extremum

DEFAULT_MAX_SEMIRING_IDEALS = 1 << 16

SemiringIdeal = int

SEMIRING_AXIOMS = ("plus_idempotent", "plus_commutative", "plus_associative", "plus_identity",
                   "times_associative", "times_identity", "zero_annihilates",
                   "left_distributive", "right_distributive")
GL_AXIOMS = ("i", "ii_a", "ii_b", "iii")
GL_CONSEQUENCES = ("order", "annihilation", "constants", "antitone", "double_negation",
                   "lattice", "meet_forms")


class GLSemiring:
    def __init__(self, plus, times, neg_minus, neg_tilde, zero: int, one: int):
        self.plus = np.array(plus, dtype=np.int64)
        self.times = np.array(times, dtype=np.int64)
        self.neg_minus = np.array(neg_minus, dtype=np.int64)
        self.neg_tilde = np.array(neg_tilde, dtype=np.int64)
        for arr in (self.plus, self.times, self.neg_minus, self.neg_tilde):
            arr.flags.writeable = False
        self.size = len(self.neg_minus)
        n = self.size
        if self.plus.shape != (n, n) or self.times.shape != (n, n) or self.neg_tilde.shape != (n,):
            raise ValueError("table shapes do not match")
        self.zero = int(zero)
        self.one = int(one)

    def __repr__(self):
        return f"GLSemiring(size={self.size})"

    def __eq__(self, other):
        if not isinstance(other, GLSemiring):
            return NotImplemented
        return (self.size == other.size and self.zero == other.zero and self.one == other.one
                and np.array_equal(self.plus, other.plus)
                and np.array_equal(self.times, other.times)
                and np.array_equal(self.neg_minus, other.neg_minus)
                and np.array_equal(self.neg_tilde, other.neg_tilde))

    __hash__ = None

    @cached_property
    def leq(self) -> np.ndarray:
        """``leq[x, y]`` iff ``x + y = y``."""
        return self.plus == np.arange(self.size)[None, :]

    def to_json(self) -> dict:
        return {"size": self.size, "zero": self.zero, "one": self.one,
                "plus": self.plus.tolist(), "times": self.times.tolist(),
                "neg_minus": self.neg_minus.tolist(), "neg_tilde": self.neg_tilde.tolist()}

    @classmethod
    def from_json(cls, doc: dict) -> "GLSemiring":
        return cls(doc["plus"], doc["times"], doc["neg_minus"], doc["neg_tilde"], doc["zero"], doc["one"])


def semiring_of_ideals(L: IdealLattice) -> GLSemiring:
    """Ideals under sum and product, with right/left annihilators as negations."""
    return GLSemiring(L.sum, L.product, L.right_ann, L.left_ann, L.bottom, L.top)


# --------------------------------------------------------------------------
# axioms

def check_semiring_axioms(S: GLSemiring) -> AxiomReport:
    n = S.size
    P, T = S.plus, S.times
    idx = np.arange(n)
    X, Y = idx[:, None], idx[None, :]
    w: dict[str, tuple | None] = {}
    w["plus_idempotent"] = _first(P[idx, idx] != idx)
    w["plus_commutative"] = _first(P != P.T)
    w["plus_associative"] = _first_blocked(
        n, lambda xs: P[P[xs][:, :, None], idx[None, None, :]] != P[xs[:, None, None], P[None, :, :]])
    w["plus_identity"] = _first((P[:, S.zero] != idx) | (P[S.zero, :] != idx))
    w["times_associative"] = _first_blocked(
        n, lambda xs: T[T[xs][:, :, None], idx[None, None, :]] != T[xs[:, None, None], T[None, :, :]])
    w["times_identity"] = _first((T[:, S.one] != idx) | (T[S.one, :] != idx))
    w["zero_annihilates"] = _first((T[:, S.zero] != S.zero) | (T[S.zero, :] != S.zero))
    # x(y+z) = xy + xz and (y+z)x = yx + zx, indexed [x, y, z]
    w["left_distributive"] = _first_blocked(
        n, lambda xs: T[xs[:, None, None], P[None, :, :]] != P[T[xs][:, :, None], T[xs][:, None, :]])
    w["right_distributive"] = _first_blocked(
        n, lambda xs: T[P[None, :, :], xs[:, None, None]] != P[T[:, xs].T[:, :, None], T[:, xs].T[:, None, :]])
    del X, Y
    return AxiomReport(w)


def check_gl_axioms(S: GLSemiring) -> AxiomReport:
    """Clauses (i)-(iii) of the definition plus their standard consequences.

    Witnesses are ``(x, y)`` pairs (``(x,)`` for unary laws, ``(x, y, z)``
    for order compatibility, ``()`` for the constants).
    """
    n = S.size
    P, T, m, t = S.plus, S.times, S.neg_minus, S.neg_tilde
    leq = S.leq
    idx = np.arange(n)
    X, Y = idx[:, None], idx[None, :]
    w: dict[str, tuple | None] = {}

    kills = T == S.zero
    w["i"] = _first((kills != leq[Y, m[X]]) | (kills != leq[X, t[Y]]))
    w["ii_a"] = _first(P != m[T[t[T[t[X], Y]], t[X]]])
    w["ii_b"] = _first(P != m[T[t[X], t[T[Y, m[X]]]]])
    w["iii"] = _first(m[T[t[Y], t[X]]] != t[T[m[Y], m[X]]])

    refl = ~leq[idx, idx]
    antisym = leq & leq.T & (X != Y)
    trans = _first_blocked(n, lambda xs: leq[xs][:, :, None] & leq[None, :, :] & ~leq[xs][:, None, :])
    # x <= y implies x+z <= y+z, xz <= yz, zx <= zy; indexed [x, y, z]
    compat = _first_blocked(n, lambda xs: leq[xs][:, :, None] & ~(
        leq[P[xs][:, None, :], P[None, :, :]]
        & leq[T[xs][:, None, :], T[None, :, :]]
        & leq[T[:, xs].T[:, None, :], T.T[None, :, :]]))
    w["order"] = _first(refl) or _first(antisym) or trans or compat
    w["annihilation"] = _first((T[t, idx] != S.zero) | (T[idx, m] != S.zero))
    constants_ok = (t[S.zero] == S.one and m[S.zero] == S.one
                    and t[S.one] == S.zero and m[S.one] == S.zero)
    w["constants"] = None if constants_ok else ()
    w["antitone"] = _first(leq & ~(leq[t[Y], t[X]] & leq[m[Y], m[X]]))
    w["double_negation"] = _first((t[m] != idx) | (m[t] != idx))
    meet_a = t[P[m[X], m[Y]]]
    meet_b = m[P[t[X], t[Y]]]
    w["lattice"] = _first(_not_extremum(leq, P, True) | _not_extremum(leq, meet_a, False))
    w["meet_forms"] = _first(_all_equal(meet_a, meet_b))
    return AxiomReport(w)


# --------------------------------------------------------------------------
# the two constructions

def mv_from_semiring(S: GLSemiring, *, check: bool = True) -> MVTable:
    """``x ⊕ y = (y~ · x~)⁻`` with the negations unchanged."""
    if check:
        report = check_gl_axioms(S)
        if not report.passed:
            raise GLAxiomsFailed(report)
    m, t = S.neg_minus, S.neg_tilde
    oplus = m[S.times[t[None, :], t[:, None]]]
    return MVTable(oplus, m, t, S.zero, S.one)


def semiring_from_mv(A: MVTable) -> GLSemiring:
    """Join as addition, ``⊙`` as multiplication."""
    return GLSemiring(A.join, A.odot, A.neg_minus, A.neg_tilde, A.zero, A.one)


@dataclass(frozen=True)
class DualityReport:
    semiring_round_trip: bool | None
    mv_round_trip: bool | None

    @property
    def passed(self) -> bool:
        return self.semiring_round_trip is not False and self.mv_round_trip is not False

    def to_json(self) -> dict:
        return {"passed": self.passed, "semiring_round_trip": self.semiring_round_trip,
                "mv_round_trip": self.mv_round_trip}


def check_duality(A: MVTable | None = None, S: GLSemiring | None = None) -> DualityReport:
    """Table-for-table round trips ``S(A(S)) = S`` and ``A(S(A)) = A``."""
    s_ok = None if S is None else semiring_from_mv(mv_from_semiring(S, check=False)) == S
    a_ok = None if A is None else mv_from_semiring(semiring_from_mv(A), check=False) == A
    return DualityReport(s_ok, a_ok)


# --------------------------------------------------------------------------
# semiring ideals and the maps between ideal families

def down_set(S: GLSemiring, x: int) -> SemiringIdeal:
    return sum(1 << int(y) for y in np.flatnonzero(S.leq[:, x]))


def is_semiring_ideal(S: GLSemiring, bits: SemiringIdeal) -> bool:
    """Nonempty, closed under addition and downward closed."""
    elems = list(_bits(bits))
    if not elems:
        return False
    for x in elems:
        if down_set(S, x) & ~bits:
            return False
        for y in elems:
            if not bits >> int(S.plus[x, y]) & 1:
                return False
    return True


def semiring_ideal_generated(S: GLSemiring, elements) -> SemiringIdeal:
    """Smallest semiring ideal containing ``elements``: down-set of their sum."""
    top = S.zero
    for x in elements:
        top = int(S.plus[top, x])
    return down_set(S, top)


def enumerate_semiring_ideals(S: GLSemiring, *, max_ideals: int = DEFAULT_MAX_SEMIRING_IDEALS,
                              brute_force: bool = False) -> list[SemiringIdeal]:
    """All semiring ideals, sorted by ``(popcount, value)``.

    A finite nonempty ``+``-closed down-set contains the sum of its members
    and so is the down-set of that sum; the default enumerates those.
    ``brute_force=True`` scans every subset instead (tests only).
    """
    if brute_force:
        if S.size > 20:
            raise ValueError("brute-force enumeration is limited to 20 elements")
        found = [b for b in range(1, 1 << S.size) if is_semiring_ideal(S, b)]
    else:
        found = sorted({down_set(S, x) for x in range(S.size)})
    if len(found) > max_ideals:
        raise SemiringIdealCountCapExceeded(len(found), max_ideals)
    return sorted(found, key=lambda b: (popcount(b), b))


def semiring_ideal_S(L: IdealLattice, I: IdealMask) -> SemiringIdeal:
    """``S(I)``: the ideals contained in ``I``, as a bitset over ideal ids."""
    return L.down[L.id_of(I)]


def semiring_ideal_S_by_generators(L: IdealLattice, I: IdealMask) -> SemiringIdeal:
    """``S(I)`` from its definition: the semiring ideal generated by ``{RxR : x in I}``."""
    S = semiring_of_ideals(L)
    ids = {int(L.principal[x]) for x in L.members(L.id_of(I))}
    return semiring_ideal_generated(S, sorted(ids))


def semiring_ideal_Sinv(L: IdealLattice, sideal: SemiringIdeal) -> IdealMask:
    """``S⁻¹(𝐈) = {x : RxR in 𝐈}`` as an element bitset."""
    out = 0
    for x, pid in enumerate(L.principal):
        if sideal >> int(pid) & 1:
            out |= 1 << x
    return out


@dataclass
class GaloisReport:
    ring_ideals: int
    semiring_ideals: int
    sinv_is_ideal: tuple | None = None       # witness semiring ideal (bitset)
    s_sinv_identity: tuple | None = None
    sinv_s_identity: tuple | None = None     # witness ring ideal id
    monotone: tuple | None = None
    proper_preserved: tuple | None = None

    CHECKS = ("sinv_is_ideal", "s_sinv_identity", "sinv_s_identity", "monotone", "proper_preserved")

    @property
    def passed(self) -> bool:
        return all(getattr(self, k) is None for k in self.CHECKS)

    def to_json(self) -> dict:
        return {"passed": self.passed, "ring_ideals": self.ring_ideals,
                "semiring_ideals": self.semiring_ideals,
                "checks": {k: (None if getattr(self, k) is None else [hex(v) for v in getattr(self, k)])
                           for k in self.CHECKS}}


def check_galois(L: IdealLattice, *, max_semiring_ideals: int = DEFAULT_MAX_SEMIRING_IDEALS) -> GaloisReport:
    """The ring-ideal / semiring-ideal correspondence on a finite lattice.

    Witnesses are bitsets (semiring ideals over ideal ids, ring ideals over
    elements), reported hex-encoded.
    """
    S = semiring_of_ideals(L)
    sideals = enumerate_semiring_ideals(S, max_ideals=max_semiring_ideals)
    rep = GaloisReport(L.size, len(sideals))
    everything = (1 << S.size) - 1
    inverse = {}
    for b in sideals:
        mask = semiring_ideal_Sinv(L, b)
        inverse[b] = mask
        if mask not in L.index:
            rep.sinv_is_ideal = rep.sinv_is_ideal or (b,)
            continue
        if semiring_ideal_S(L, mask) != b:
            rep.s_sinv_identity = rep.s_sinv_identity or (b,)
    for b in sideals:
        for c in sideals:
            if b & ~c == 0 and inverse[b] & ~inverse[c]:
                rep.monotone = rep.monotone or (b, c)
    for i, mask in enumerate(L.ideals):
        image = semiring_ideal_S(L, mask)
        if semiring_ideal_Sinv(L, image) != mask:
            rep.sinv_s_identity = rep.sinv_s_identity or (mask,)
        if i != L.top and image == everything:
            rep.proper_preserved = rep.proper_preserved or (mask,)
    return rep
