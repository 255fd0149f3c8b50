"""Finite pseudo MV-algebras as operation tables.

An algebra is given by ``oplus``, the two negations ``neg_minus`` (x⁻) and
``neg_tilde`` (x~), and the constants. ``x ⊙ y = (y⁻ ⊕ x⁻)~`` and the order
``x ≤ y iff x⁻ ⊕ y = 1`` are derived.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import SizeCapExceeded

DEFAULT_MAX_ELEMENTS = 4096


class MVTable:
    def __init__(self, oplus, neg_minus, neg_tilde, zero: int, one: int):
        self.oplus = np.array(oplus, dtype=np.int64)
        self.neg_minus = np.array(neg_minus, dtype=np.int64)
        self.neg_tilde = np.array(neg_tilde, dtype=np.int64)
        for arr in (self.oplus, self.neg_minus, self.neg_tilde):
            arr.flags.writeable = False
        self.size = len(self.neg_minus)
        if self.oplus.shape != (self.size, self.size) or self.neg_tilde.shape != (self.size,):
            raise ValueError("table shapes do not match")
        self.zero = int(zero)
        self.one = int(one)

    def __repr__(self):
        return f"MVTable(size={self.size})"

    def __eq__(self, other):
        if not isinstance(other, MVTable):
            return NotImplemented
        return (self.size == other.size and self.zero == other.zero and self.one == other.one
                and np.array_equal(self.oplus, other.oplus)
                and np.array_equal(self.neg_minus, other.neg_minus)
                and np.array_equal(self.neg_tilde, other.neg_tilde))

    __hash__ = None

    @cached_property
    def odot(self) -> np.ndarray:
        m = self.neg_minus
        return self.neg_tilde[self.oplus[np.ix_(m, m)].T]

    @cached_property
    def leq(self) -> np.ndarray:
        return self.oplus[self.neg_minus, :] == self.one

    @cached_property
    def join(self) -> np.ndarray:
        """``x ⊕ (x~ ⊙ y)``"""
        idx = np.arange(self.size)
        return self.oplus[idx[:, None], self.odot[self.neg_tilde, :]]

    @cached_property
    def meet(self) -> np.ndarray:
        """``x ⊙ (x⁻ ⊕ y)``"""
        idx = np.arange(self.size)
        return self.odot[idx[:, None], self.oplus[self.neg_minus, :]]

    def multiple(self, a: int, k: int) -> int:
        """k-fold ⊕ of ``a`` (0-fold is zero)."""
        out = self.zero
        for _ in range(k):
            out = int(self.oplus[out, a])
        return out

    def to_json(self) -> dict:
        return {"size": self.size, "zero": self.zero, "one": self.one,
                "oplus": self.oplus.tolist(), "neg_minus": self.neg_minus.tolist(),
                "neg_tilde": self.neg_tilde.tolist()}

    @classmethod
    def from_json(cls, doc: dict) -> "MVTable":
        return cls(doc["oplus"], doc["neg_minus"], doc["neg_tilde"], doc["zero"], doc["one"])

    def with_oplus(self, x: int, y: int, value: int) -> "MVTable":
        t = self.oplus.copy()
        t[x, y] = value
        return MVTable(t, self.neg_minus, self.neg_tilde, self.zero, self.one)


def make_chain(n: int) -> MVTable:
    """The n-element Łukasiewicz chain on 0..n-1 (numerators over n-1)."""
    if n < 1:
        raise ValueError("a chain needs at least one element")
    u = n - 1
    a = np.arange(n)
    return MVTable(np.minimum(a[:, None] + a[None, :], u), u - a, u - a, 0, u)


def mixed_radix(sizes) -> np.ndarray:
    """Coordinates (first factor most significant) of every index of a product."""
    total = int(np.prod(sizes, dtype=np.int64)) if len(sizes) else 1
    idx = np.arange(total)
    coords = np.zeros((total, len(sizes)), dtype=np.int64)
    for pos in range(len(sizes) - 1, -1, -1):
        idx, coords[:, pos] = np.divmod(idx, sizes[pos])
    return coords


def product_mv(factors: list[MVTable], *, max_elements: int = DEFAULT_MAX_ELEMENTS) -> MVTable:
    sizes = [f.size for f in factors]
    total = int(np.prod(sizes, dtype=np.int64)) if sizes else 1
    if total > max_elements:
        raise SizeCapExceeded(total, max_elements)
    oplus = np.zeros((1, 1), dtype=np.int64)
    minus = np.zeros(1, dtype=np.int64)
    tilde = np.zeros(1, dtype=np.int64)
    zero = one = 0
    for f in factors:
        m, s = oplus.shape[0], f.size
        oplus = (oplus[:, None, :, None] * s + f.oplus[None, :, None, :]).reshape(m * s, m * s)
        minus = (minus[:, None] * s + f.neg_minus[None, :]).ravel()
        tilde = (tilde[:, None] * s + f.neg_tilde[None, :]).ravel()
        zero = zero * s + f.zero
        one = one * s + f.one
    return MVTable(oplus, minus, tilde, zero, one)


# --------------------------------------------------------------------------
# axioms

AXIOMS = ("A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8")
DERIVED = ("order", "join", "meet", "double_negation", "oplus_duality")


@dataclass
class AxiomReport:
    """``witnesses[name]`` is the first counterexample (lexicographic) or None."""

    witnesses: dict[str, tuple | None] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(w is None for w in self.witnesses.values())

    @property
    def failures(self) -> dict[str, tuple]:
        return {k: w for k, w in self.witnesses.items() if w is not None}

    def to_json(self) -> dict:
        return {"passed": self.passed,
                "checks": {k: (None if w is None else list(w)) for k, w in self.witnesses.items()}}


def _first(bad: np.ndarray):
    hits = np.argwhere(bad)
    return tuple(int(v) for v in hits[0]) if hits.size else None


def _first_blocked(n: int, fn):
    """First witness of ``fn(xs)`` (a bool array with leading axis ``xs``) over blocks of x."""
    step = max(1, (1 << 22) // max(1, n * n))
    for lo in range(0, n, step):
        w = _first(fn(np.arange(lo, min(n, lo + step))))
        if w:
            return (w[0] + lo,) + w[1:]
    return None


def _not_extremum(leq: np.ndarray, z: np.ndarray, above: bool) -> np.ndarray:
    """Mask of pairs (x, y) where ``z[x, y]`` is not their supremum (infimum if not ``above``)."""
    n = len(leq)
    idx = np.arange(n)
    rel = leq if above else leq.T
    bound = rel[idx[:, None], z] & rel[idx[None, :], z]
    tight = np.zeros_like(bound)
    step = max(1, (1 << 22) // max(1, n * n))
    for lo in range(0, n, step):
        common = rel[lo:lo + step, None, :] & rel[None, :, :]   # [x, y, u]: u bounds both
        least = ~common | rel[z[lo:lo + step, :, None], idx[None, None, :]]
        tight[lo:lo + step] = least.all(axis=2)
    return ~bound | ~tight


def _all_equal(*tables) -> np.ndarray:
    bad = np.zeros(tables[0].shape, dtype=bool)
    for t in tables[1:]:
        bad |= t != tables[0]
    return bad


def check_axioms(A: MVTable) -> AxiomReport:
    n = A.size
    o, m, t = A.oplus, A.neg_minus, A.neg_tilde
    d = A.odot
    idx = np.arange(n)
    X, Y = idx[:, None], idx[None, :]
    w: dict[str, tuple | None] = {}

    w["A1"] = _first_blocked(n, lambda xs: o[o[xs][:, :, None], idx[None, None, :]] != o[xs[:, None, None], o[None, :, :]])
    w["A2"] = _first((o[:, A.zero] != idx) | (o[A.zero, :] != idx))
    w["A3"] = _first((o[:, A.one] != A.one) | (o[A.one, :] != A.one))
    w["A4"] = None if (t[A.one] == A.zero and m[A.one] == A.zero) else ()
    w["A5"] = _first(t[o[m[X], m[Y]]] != m[o[t[X], t[Y]]])
    join_forms = (o[X, d[t[X], Y]], o[Y, d[t[Y], X]], o[d[X, m[Y]], Y], o[d[Y, m[X]], X])
    w["A6"] = _first(_all_equal(*join_forms))
    w["A7"] = _first(d[X, o[m[X], Y]] != d[o[X, t[Y]], Y])
    w["A8"] = _first(t[m] != idx)

    leq = A.leq
    refl = ~leq[idx, idx]
    antisym = leq & leq.T & (X != Y)
    w["order"] = _first(refl) or _first(antisym) or _first_blocked(
        n, lambda xs: leq[xs][:, :, None] & leq[None, :, :] & ~leq[xs][:, None, :])

    w["join"] = _first(_all_equal(*join_forms) | _not_extremum(leq, join_forms[0], True))
    meet_forms = (d[X, o[m[X], Y]], d[Y, o[m[Y], X]], d[o[X, t[Y]], Y], d[o[Y, t[X]], X])
    w["meet"] = _first(_all_equal(*meet_forms) | _not_extremum(leq, meet_forms[0], False))
    w["double_negation"] = _first((t[m] != idx) | (m[t] != idx))
    w["oplus_duality"] = _first(_all_equal(o, m[d[t[Y], t[X]]], t[d[m[Y], m[X]]]))
    return AxiomReport(w)


@dataclass(frozen=True)
class CommutativityReport:
    commutative: bool
    witness: tuple[int, int] | None
    negations_agree: bool


def is_commutative(A: MVTable) -> CommutativityReport:
    w = _first(A.oplus != A.oplus.T)
    return CommutativityReport(w is None, w, bool(np.array_equal(A.neg_minus, A.neg_tilde)))


def atoms(A: MVTable) -> list[int]:
    """Minimal elements above zero."""
    lt = A.leq & ~np.eye(A.size, dtype=bool)
    above_zero = lt[A.zero]
    out = []
    for a in np.flatnonzero(above_zero):
        if not np.any(above_zero & lt[:, a]):
            out.append(int(a))
    return out


@dataclass
class ChainIso:
    """An isomorphism onto a product of Łukasiewicz chains.

    ``coords[b]`` is the coordinate vector of element ``b``; ``image[b]`` its
    index in ``product_mv([make_chain(n) for n in chain_lengths])``.
    """

    atoms: list[int]
    hulls: list[int]
    chain_lengths: list[int]
    coords: np.ndarray
    image: np.ndarray


def iso_to_chain_product(A: MVTable) -> ChainIso | None:
    ats = atoms(A)
    hulls, lengths, multiples = [], [], []
    for a in ats:
        seq = [A.zero, a]
        while True:
            nxt = int(A.oplus[seq[-1], a])
            if nxt == seq[-1]:
                break
            if nxt in seq or len(seq) > A.size:
                return None
            seq.append(nxt)
        hulls.append(seq[-1])
        lengths.append(len(seq))
        multiples.append({v: k for k, v in enumerate(seq)})
    coords = np.zeros((A.size, len(ats)), dtype=np.int64)
    for b in range(A.size):
        for x, u in enumerate(hulls):
            k = multiples[x].get(int(A.meet[b, u]))
            if k is None:
                return None
            coords[b, x] = k
    weights = np.ones(len(ats), dtype=np.int64)
    for x in range(len(ats) - 2, -1, -1):
        weights[x] = weights[x + 1] * lengths[x + 1]
    image = coords @ weights if ats else np.zeros(A.size, dtype=np.int64)
    target_size = int(np.prod(lengths, dtype=np.int64)) if lengths else 1
    if target_size != A.size or len(set(image.tolist())) != A.size:
        return None
    target = product_mv([make_chain(n) for n in lengths], max_elements=max(A.size, 1))
    if not (np.array_equal(image[A.oplus], target.oplus[image[:, None], image[None, :]])
            and np.array_equal(image[A.neg_minus], target.neg_minus[image])
            and np.array_equal(image[A.neg_tilde], target.neg_tilde[image])):
        return None
    return ChainIso(ats, hulls, lengths, coords, image)


def cayley_text(A: MVTable, table: str = "oplus") -> str:
    """Pretty-printed Cayley table of a binary operation."""
    data = getattr(A, table)
    width = max(2, len(str(A.size - 1)))
    head = " " * (width + 1) + "|" + " ".join(f"{j:>{width}}" for j in range(A.size))
    lines = [f"{table}:", head, "-" * len(head)]
    for i in range(A.size):
        lines.append(f"{i:>{width}} |" + " ".join(f"{int(v):>{width}}" for v in data[i]))
    return "\n".join(lines)
