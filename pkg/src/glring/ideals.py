"""Two-sided and left ideals of a finite ring.

An ideal is passed around as an ``int`` bitset over element indices (bit ``i``
set iff element ``i`` belongs to it). The lattice of all two-sided ideals is
enumerated as the join-closure of the principal ideals; ideal ids index the
list sorted by ``(popcount, value)``, so id 0 is ``{0}`` and the last id is R.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from .errors import IdealCountCapExceeded
from .ring import FiniteRing, as_bool_mask, closure, extend_subgroup, subgroup_generators

DEFAULT_MAX_IDEALS = 1 << 16

IdealMask = int


def to_mask(member: np.ndarray) -> IdealMask:
    return int.from_bytes(np.packbits(member, bitorder="little").tobytes(), "little")


def members(ring: FiniteRing, mask: IdealMask) -> list[int]:
    return [int(i) for i in np.flatnonzero(as_bool_mask(ring, mask))]


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def _lowest_bit(bits: int) -> int:
    return (bits & -bits).bit_length() - 1


def _bits(bits: int):
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


# --------------------------------------------------------------------------
# ideal arithmetic on masks

def ideal_generated(ring: FiniteRing, elements) -> IdealMask:
    member, _ = closure(ring, elements)
    return to_mask(member)


def principal_ideal(ring: FiniteRing, x: int) -> IdealMask:
    """Smallest two-sided ideal containing ``x``."""
    return ideal_generated(ring, [x])


def ideal_sum(ring: FiniteRing, I: IdealMask, J: IdealMask) -> IdealMask:
    member = as_bool_mask(ring, I).copy()
    for g in subgroup_generators(ring, as_bool_mask(ring, J)):
        extend_subgroup(ring.add, member, g)
    return to_mask(member)


def ideal_product(ring: FiniteRing, I: IdealMask, J: IdealMask) -> IdealMask:
    """Additive closure of ``{ab : a in I, b in J}``.

    By biadditivity the products of additive generators already span it.
    """
    gi = subgroup_generators(ring, as_bool_mask(ring, I))
    gj = subgroup_generators(ring, as_bool_mask(ring, J))
    member = np.zeros(ring.size, dtype=bool)
    member[ring.zero] = True
    for a in gi:
        for b in gj:
            extend_subgroup(ring.add, member, int(ring.mul[a, b]))
    return to_mask(member)


def ideal_intersection(I: IdealMask, J: IdealMask) -> IdealMask:
    return I & J


def right_annihilator(ring: FiniteRing, I: IdealMask) -> IdealMask:
    """``{x : Ix = 0}``"""
    gens = subgroup_generators(ring, as_bool_mask(ring, I))
    if not gens:
        return (1 << ring.size) - 1
    return to_mask(np.all(ring.mul[gens, :] == ring.zero, axis=0))


def left_annihilator(ring: FiniteRing, I: IdealMask) -> IdealMask:
    """``{x : xI = 0}``"""
    gens = subgroup_generators(ring, as_bool_mask(ring, I))
    if not gens:
        return (1 << ring.size) - 1
    return to_mask(np.all(ring.mul[:, gens] == ring.zero, axis=1))


def ideal_power(ring: FiniteRing, I: IdealMask, k: int) -> IdealMask:
    """``I^k`` with ``I^0 = R`` for every ring, unital or not."""
    if k < 0:
        raise ValueError("power must be nonnegative")
    out = (1 << ring.size) - 1
    for step in range(k):
        out = I if step == 0 else ideal_product(ring, out, I)
    return out


# --------------------------------------------------------------------------
# enumeration

def _join_closure(ring: FiniteRing, generators: dict[int, list[int]], cap: int) -> dict[int, list[int]]:
    """All sums of subsets of ``generators`` (mask -> additive gens)."""
    zero_mask = 1 << ring.zero
    found: dict[int, list[int]] = {zero_mask: []}
    for pmask in sorted(generators, key=lambda m: (popcount(m), m)):
        pgens = generators[pmask]
        fresh: dict[int, list[int]] = {}
        for imask, igens in found.items():
            if pmask & ~imask == 0:
                continue
            member = as_bool_mask(ring, imask).copy()
            gens = list(igens)
            for g in pgens:
                if extend_subgroup(ring.add, member, g):
                    gens.append(g)
            m = to_mask(member)
            if m not in found and m not in fresh:
                fresh[m] = gens
                if len(found) + len(fresh) > cap:
                    raise IdealCountCapExceeded(len(found) + len(fresh), cap)
        found.update(fresh)
    return found


def _principals(ring: FiniteRing, *, left: bool, right: bool):
    by_element = []
    distinct: dict[int, list[int]] = {}
    for x in range(ring.size):
        member, gens = closure(ring, [x], left=left, right=right)
        m = to_mask(member)
        by_element.append(m)
        distinct.setdefault(m, gens)
    return by_element, distinct


def enumerate_ideals(ring: FiniteRing, *, max_ideals: int = DEFAULT_MAX_IDEALS) -> "IdealLattice":
    by_element, distinct = _principals(ring, left=True, right=True)
    found = _join_closure(ring, distinct, max_ideals)
    return IdealLattice(ring, found, by_element)


def enumerate_left_ideals(ring: FiniteRing, *, max_ideals: int = DEFAULT_MAX_IDEALS) -> list[IdealMask]:
    _, distinct = _principals(ring, left=True, right=False)
    found = _join_closure(ring, distinct, max_ideals)
    return sorted(found, key=lambda m: (popcount(m), m))


def is_left_chain_ring(ring: FiniteRing, *, max_ideals: int = DEFAULT_MAX_IDEALS) -> bool:
    lefts = enumerate_left_ideals(ring, max_ideals=max_ideals)
    for i, a in enumerate(lefts):
        for b in lefts[i + 1:]:
            if a & ~b and b & ~a:
                return False
    return True


class IdealLattice:
    """All two-sided ideals of a ring with their operation tables.

    Tables are indexed by ideal id and computed on first access.
    """

    def __init__(self, ring: FiniteRing, found: dict[int, list[int]], principal_masks: list[int]):
        self.ring = ring
        order = sorted(found, key=lambda m: (popcount(m), m))
        self.ideals: list[IdealMask] = order
        self.index: dict[IdealMask, int] = {m: i for i, m in enumerate(order)}
        self.generators: list[list[int]] = [found[m] for m in order]
        self.size = len(order)
        self.bottom = 0
        self.top = self.size - 1
        self.principal = np.array([self.index[m] for m in principal_masks], dtype=np.int64)

    def __len__(self):
        return self.size

    def __repr__(self):
        return f"IdealLattice({self.size} ideals of a {self.ring.size}-element ring)"

    def id_of(self, mask: IdealMask) -> int:
        return self.index[mask]

    def members(self, i: int) -> list[int]:
        return members(self.ring, self.ideals[i])

    def contains(self, i: int, j: int) -> bool:
        """Is ideal ``j`` a subset of ideal ``i``?"""
        return bool(self.up[j] >> i & 1)

    def is_proper(self, i: int) -> bool:
        return i != self.top

    # -- incidence bitsets over ideal ids
    @cached_property
    def _membership(self) -> np.ndarray:
        B = np.zeros((self.size, self.ring.size), dtype=bool)
        for i, m in enumerate(self.ideals):
            B[i] = as_bool_mask(self.ring, m)
        return B

    @cached_property
    def containing(self) -> list[int]:
        """``containing[e]``: bitset of ideal ids whose ideal contains element ``e``."""
        packed = np.packbits(self._membership.T, axis=1, bitorder="little")
        return [int.from_bytes(row.tobytes(), "little") for row in packed]

    @cached_property
    def up(self) -> list[int]:
        """``up[i]``: bitset of ids of ideals containing ideal ``i`` (itself included)."""
        everything = (1 << self.size) - 1
        out = []
        for gens in self.generators:
            bits = everything
            for g in gens:
                bits &= self.containing[g]
            out.append(bits)
        return out

    @cached_property
    def down(self) -> list[int]:
        out = [0] * self.size
        for j, bits in enumerate(self.up):
            for i in _bits(bits):
                out[i] |= 1 << j
        return out

    def _smallest_containing(self, elements) -> int:
        bits = (1 << self.size) - 1
        for e in elements:
            bits &= self.containing[int(e)]
        return _lowest_bit(bits)

    # -- tables
    @cached_property
    def sum(self) -> np.ndarray:
        up = self.up
        t = np.empty((self.size, self.size), dtype=np.int64)
        for i in range(self.size):
            for j in range(i, self.size):
                t[i, j] = t[j, i] = _lowest_bit(up[i] & up[j])
        return t

    @cached_property
    def intersection(self) -> np.ndarray:
        t = np.empty((self.size, self.size), dtype=np.int64)
        for i, a in enumerate(self.ideals):
            for j in range(i, self.size):
                t[i, j] = t[j, i] = self.index[a & self.ideals[j]]
        return t

    @cached_property
    def product(self) -> np.ndarray:
        mul = self.ring.mul
        t = np.empty((self.size, self.size), dtype=np.int64)
        for i, gi in enumerate(self.generators):
            for j, gj in enumerate(self.generators):
                t[i, j] = self._smallest_containing(mul[np.ix_(gi, gj)].ravel()) if gi and gj else self.bottom
        return t

    def _annihilators(self, right: bool) -> np.ndarray:
        out = np.empty(self.size, dtype=np.int64)
        mul, zero = self.ring.mul, self.ring.zero
        for i, gens in enumerate(self.generators):
            if not gens:
                out[i] = self.top
                continue
            ann = np.all(mul[gens, :] == zero, axis=0) if right else np.all(mul[:, gens] == zero, axis=1)
            out[i] = self.index[to_mask(ann)]
        return out

    @cached_property
    def right_ann(self) -> np.ndarray:
        """``I^- = {x : Ix = 0}`` by id."""
        return self._annihilators(right=True)

    @cached_property
    def left_ann(self) -> np.ndarray:
        """``I^~ = {x : xI = 0}`` by id."""
        return self._annihilators(right=False)

    def power(self, i: int, k: int) -> int:
        out = self.top
        for step in range(k):
            out = i if step == 0 else int(self.product[out, i])
        return out

    def covers(self) -> list[tuple[int, int]]:
        """Covering pairs ``(i, j)``: ideal i is a maximal proper subideal of ideal j."""
        pairs = []
        for i in range(self.size):
            strict_up = self.up[i] & ~(1 << i)
            for j in _bits(strict_up):
                between = strict_up & self.down[j] & ~(1 << j)
                if not between:
                    pairs.append((i, j))
        return pairs


def maximal_ideals(L: IdealLattice) -> list[int]:
    top_bit = 1 << L.top
    return [i for i in range(L.size) if i != L.top and L.up[i] == (1 << i) | top_bit]


def prime_ideals(L: IdealLattice, *, exhaustive: bool = False) -> list[int]:
    """Proper P with ``AB ⊆ P`` implying ``A ⊆ P`` or ``B ⊆ P``.

    The default scan only ranges over A, B containing P, which suffices
    because ``(A+P)(B+P) ⊆ AB + P``; ``exhaustive=True`` scans all pairs.
    """
    out = []
    for p in range(L.size):
        if p == L.top:
            continue
        pool = list(range(L.size)) if exhaustive else list(_bits(L.up[p]))
        prime = True
        for a in pool:
            if L.contains(p, a):
                continue
            for b in pool:
                if not L.contains(p, b) and L.contains(p, int(L.product[a, b])):
                    prime = False
                    break
            if not prime:
                break
        if prime:
            out.append(p)
    return out
