"""Finite rings as dense Cayley tables.

Elements are integers ``0..n-1``. Every structured spec is lowered to an
``add`` and a ``mul`` table; everything downstream works on the tables only.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable

import numpy as np

from .errors import InvalidSpec, NotAnIdeal, SizeCapExceeded, TableNotARing
from .specs import (Cyclic, Designator, Matrix, PolyQuotient, Product, Quotient,
                    RingSpec, Table)

DEFAULT_MAX_ELEMENTS = 4096

# Triple scans up to this size; above it the generator reduction is used.
EXHAUSTIVE_LIMIT = 256
# Structured (non-table) rings larger than this are trusted to their construction
# unless validation is requested explicitly.
STRUCTURED_VALIDATION_LIMIT = 1024

_INDEX = np.int32


def _readonly(arr) -> np.ndarray:
    arr = np.ascontiguousarray(arr, dtype=_INDEX)
    arr.flags.writeable = False
    return arr


class FiniteRing:
    """An immutable finite ring.

    ``designator_of`` / ``index_of`` translate between element indices and
    the structured designators of the provenance spec.
    """

    def __init__(self, add, mul, spec: RingSpec, *, zero: int, neg,
                 designator_of: Callable[[int], Designator] | None = None,
                 index_of: Callable[[Designator], int] | None = None):
        self.add = _readonly(add)
        self.mul = _readonly(mul)
        self.neg = _readonly(neg)
        self.size = int(self.add.shape[0])
        self.zero = int(zero)
        self.spec = spec
        self._designator_of = designator_of or int
        self._index_of = index_of or self._plain_index
        self.unity = find_unity(self)

    def _plain_index(self, d: Designator) -> int:
        if isinstance(d, int) and 0 <= d < self.size:
            return d
        raise InvalidSpec(f"{d!r} does not designate an element of a {self.size}-element table ring")

    def __repr__(self):
        return f"FiniteRing(size={self.size}, spec={self.spec!r})"

    def __len__(self):
        return self.size

    def element(self, designator: Designator) -> int:
        return int(self._index_of(designator))

    def designator(self, i: int) -> Designator:
        return self._designator_of(int(i))

    def label(self, i: int) -> str:
        from .dsl import render_designator
        return render_designator(self.designator(i))

    @cached_property
    def additive_generators(self) -> tuple[int, ...]:
        full = np.ones(self.size, dtype=bool)
        return tuple(subgroup_generators(self, full))

    @cached_property
    def elements(self) -> np.ndarray:
        return np.arange(self.size, dtype=_INDEX)

    def summary(self) -> dict:
        from .specs import spec_to_json
        return {
            "size": self.size,
            "zero": self.zero,
            "unity": self.unity,
            "commutative": bool(np.array_equal(self.mul, self.mul.T)),
            "additive_generators": [int(g) for g in self.additive_generators],
            "spec": spec_to_json(self.spec),
        }


# --------------------------------------------------------------------------
# additive subgroup machinery

def extend_subgroup(add: np.ndarray, member: np.ndarray, y: int) -> bool:
    """Grow the subgroup ``member`` (bool array, in place) to contain ``y``.

    Adds the cosets H + ky until they cycle back into H.
    """
    if member[y]:
        return False
    base = np.flatnonzero(member)
    c = y
    while not member[c]:
        member[add[base, c]] = True
        c = add[c, y]
    return True


def subgroup_generators(ring: FiniteRing, mask: np.ndarray) -> list[int]:
    """Greedy additive generating set of the subgroup given by bool ``mask``."""
    member = np.zeros(ring.size, dtype=bool)
    member[ring.zero] = True
    gens = []
    while True:
        missing = np.flatnonzero(mask & ~member)
        if missing.size == 0:
            return gens
        y = int(missing[0])
        extend_subgroup(ring.add, member, y)
        gens.append(y)


def closure(ring: FiniteRing, seeds: Iterable[int], *, left: bool = True,
            right: bool = True) -> tuple[np.ndarray, list[int]]:
    """Smallest additive subgroup containing ``seeds`` and closed under the
    requested one-sided multiplications by ring elements.

    Returns the membership array and an additive generating set of it.
    Multiplying by the ring's additive generators is enough: ring elements are
    sums of them and the result is a subgroup.
    """
    member = np.zeros(ring.size, dtype=bool)
    member[ring.zero] = True
    gens: list[int] = []
    ring_gens = ring.additive_generators
    queue = [int(s) for s in seeds]
    while queue:
        y = queue.pop()
        if not extend_subgroup(ring.add, member, y):
            continue
        gens.append(y)
        for g in ring_gens:
            if left:
                queue.append(int(ring.mul[g, y]))
            if right:
                queue.append(int(ring.mul[y, g]))
    return member, gens


# --------------------------------------------------------------------------
# unity and central idempotents

def find_unity(ring: FiniteRing) -> int | None:
    """The two-sided multiplicative identity, if any."""
    idx = np.arange(ring.size)
    left = np.all(ring.mul == idx[None, :], axis=1)
    right = np.all(ring.mul == idx[:, None], axis=0)
    both = np.flatnonzero(left & right)
    return int(both[0]) if both.size else None


def central_idempotents(ring: FiniteRing) -> list[int]:
    diag = ring.mul[np.arange(ring.size), np.arange(ring.size)]
    idem = np.flatnonzero(diag == np.arange(ring.size))
    return [int(e) for e in idem if np.array_equal(ring.mul[e, :], ring.mul[:, e])]


@dataclass(frozen=True)
class CentralIdempotentReport:
    holds: bool
    witness: tuple[int, ...] | None  # witness[x] = e with e central idempotent, e*x = x
    failing: int | None


def is_central_idempotent_generated(ring: FiniteRing) -> CentralIdempotentReport:
    if ring.unity is not None:
        return CentralIdempotentReport(True, (ring.unity,) * ring.size, None)
    witness = np.full(ring.size, -1)
    idx = np.arange(ring.size)
    for e in reversed(central_idempotents(ring)):
        witness[ring.mul[e, :] == idx] = e
    bad = np.flatnonzero(witness < 0)
    if bad.size:
        return CentralIdempotentReport(False, None, int(bad[0]))
    return CentralIdempotentReport(True, tuple(int(e) for e in witness), None)


# --------------------------------------------------------------------------
# axiom validation

def _first(mask: np.ndarray):
    hits = np.argwhere(mask)
    return tuple(int(v) for v in hits[0]) if hits.size else None


def _reachability_generators(add: np.ndarray, zero: int) -> list[int]:
    """Elements g such that every element is reached from zero by adding gens on the right."""
    n = add.shape[0]
    seen = np.zeros(n, dtype=bool)
    seen[zero] = True
    gens: list[int] = []
    frontier = [zero]
    while True:
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = int(add[x, g])
                    if not seen[y]:
                        seen[y] = True
                        nxt.append(y)
            frontier = nxt
        missing = np.flatnonzero(~seen)
        if missing.size == 0:
            return gens
        g = int(missing[0])
        gens.append(g)
        frontier = list(np.flatnonzero(seen))


def check_ring_axioms(add: np.ndarray, mul: np.ndarray, *, exhaustive: bool | None = None):
    """Return ``None`` if the tables form a ring, else ``(axiom, witness)``.

    With ``exhaustive`` every triple is scanned. Otherwise the three-variable
    laws are checked with one variable ranging over a set of additive
    generators (every element is reached from 0 by adding them), which implies
    the laws on all triples by induction; associativity of ``mul`` then only
    needs generator triples since it is trilinear.
    """
    add = np.asarray(add)
    mul = np.asarray(mul)
    n = add.shape[0]
    if exhaustive is None:
        exhaustive = n <= EXHAUSTIVE_LIMIT
    idx = np.arange(n)

    zeros = np.flatnonzero(np.all(add == idx[None, :], axis=1) & np.all(add == idx[:, None], axis=0))
    if zeros.size == 0:
        return ("additive identity", ())
    zero = int(zeros[0])
    no_inverse = ~np.any(add == zero, axis=1)
    if no_inverse.any():
        return ("additive inverse", (int(np.flatnonzero(no_inverse)[0]),))
    w = _first(add != add.T)
    if w:
        return ("additive commutativity", w)

    if exhaustive:
        gens = idx
    else:
        gens = np.array(_reachability_generators(add, zero), dtype=np.int64)

    # x+(y+g) = (x+y)+g
    for x in range(n):
        lhs = add[x][add[:, gens]]
        rhs = add[add[x][:, None], gens[None, :]]
        w = _first(lhs != rhs)
        if w:
            return ("additive associativity", (x, w[0], int(gens[w[1]])))
    # a(b+g) = ab+ag
    for a in range(n):
        lhs = mul[a][add[:, gens]]
        rhs = add[mul[a][:, None], mul[a][gens][None, :]]
        w = _first(lhs != rhs)
        if w:
            return ("left distributivity", (a, w[0], int(gens[w[1]])))
    # (a+b)g = ag+bg
    for a in range(n):
        lhs = mul[add[a][:, None], gens[None, :]]
        rhs = add[mul[a][gens][None, :], mul[:, gens]]
        w = _first(lhs != rhs)
        if w:
            return ("right distributivity", (a, w[0], int(gens[w[1]])))
    # (ab)c = a(bc) over generator triples
    sub = mul[np.ix_(gens, gens)]
    for i, a in enumerate(gens):
        lhs = mul[sub[i][:, None], gens[None, :]]
        rhs = mul[a][mul[np.ix_(gens, gens)]]
        w = _first(lhs != rhs)
        if w:
            return ("multiplicative associativity", (int(a), int(gens[w[0]]), int(gens[w[1]])))
    return None


def _from_tables(add, mul, spec, *, validate: bool, exhaustive: bool | None = None,
                 designator_of=None, index_of=None) -> FiniteRing:
    add = np.asarray(add, dtype=_INDEX)
    mul = np.asarray(mul, dtype=_INDEX)
    if validate:
        failure = check_ring_axioms(add, mul, exhaustive=exhaustive)
        if failure:
            raise TableNotARing(*failure)
    idx = np.arange(add.shape[0])
    zero = int(np.flatnonzero(np.all(add == idx[None, :], axis=1))[0])
    neg = np.argmax(add == zero, axis=1)
    return FiniteRing(add, mul, spec, zero=zero, neg=neg,
                      designator_of=designator_of, index_of=index_of)


# --------------------------------------------------------------------------
# builders

def predicted_size(spec: RingSpec) -> int | None:
    """Element count of ``spec`` without building it (``None`` for quotients)."""
    if isinstance(spec, Cyclic):
        return spec.n
    if isinstance(spec, PolyQuotient):
        return spec.p ** spec.degree
    if isinstance(spec, Matrix):
        b = predicted_size(spec.base)
        return None if b is None else b ** (spec.k * spec.k)
    if isinstance(spec, Product):
        total = 1
        for f in spec.factors:
            s = predicted_size(f)
            if s is None:
                return None
            total *= s
        return total
    if isinstance(spec, Table):
        return spec.n
    return None


def build_ring(spec: RingSpec, *, max_elements: int = DEFAULT_MAX_ELEMENTS,
               validate: bool | None = None) -> FiniteRing:
    """Lower a ring spec to tables.

    ``validate=None`` validates table rings always and structured rings up to
    ``STRUCTURED_VALIDATION_LIMIT`` elements.
    """
    size = predicted_size(spec)
    if size is not None and size > max_elements:
        raise SizeCapExceeded(size, max_elements)
    if isinstance(spec, Table):
        return _from_tables(spec.add, spec.mul, spec, validate=validate is not False)
    check = validate if validate is not None else (size is not None and size <= STRUCTURED_VALIDATION_LIMIT)
    if isinstance(spec, Cyclic):
        return _build_cyclic(spec, check)
    if isinstance(spec, PolyQuotient):
        return _build_poly(spec, check)
    if isinstance(spec, Matrix):
        base = build_ring(spec.base, max_elements=max_elements, validate=validate)
        return _build_matrix(spec, base, check)
    if isinstance(spec, Product):
        factors = [build_ring(f, max_elements=max_elements, validate=validate) for f in spec.factors]
        return _build_product(spec, factors, check)
    if isinstance(spec, Quotient):
        base = build_ring(spec.base, max_elements=max_elements, validate=validate)
        gens = [base.element(d) for d in spec.generators]
        member, _ = closure(base, gens)
        ring, _ = quotient_ring(base, member, spec=spec)
        return ring
    raise InvalidSpec(f"not a ring spec: {spec!r}")


def _build_cyclic(spec: Cyclic, validate: bool) -> FiniteRing:
    n = spec.n
    a = np.arange(n, dtype=np.int64)

    def index_of(d):
        if isinstance(d, int):
            return d % n
        raise InvalidSpec(f"{d!r} does not designate an element of Z{n}")

    return _from_tables((a[:, None] + a[None, :]) % n, (a[:, None] * a[None, :]) % n, spec,
                        validate=validate, index_of=index_of)


def _digits(n: int, base: int, width: int) -> np.ndarray:
    """``out[i, j]`` is digit ``j`` (least significant first) of ``i`` in ``base``."""
    i = np.arange(n, dtype=np.int64)
    return np.stack([(i // base ** j) % base for j in range(width)], axis=1) if width else np.zeros((n, 0), np.int64)


def _build_poly(spec: PolyQuotient, validate: bool) -> FiniteRing:
    p, d = spec.p, spec.degree
    lead_inv = pow(spec.modulus[-1], -1, p)
    monic = [(c * lead_inv) % p for c in spec.modulus]
    n = p ** d
    C = _digits(n, p, d)
    weights = p ** np.arange(d, dtype=np.int64)

    # red[t] = coefficients of x^t reduced mod the modulus, for t < 2d - 1
    red = np.zeros((max(2 * d - 1, d), d), dtype=np.int64)
    for t in range(d):
        red[t, t] = 1
    for t in range(d, 2 * d - 1):
        prev = red[t - 1]
        shifted = np.concatenate([[0], prev[:-1]])
        red[t] = (shifted - prev[-1] * np.array(monic[:d])) % p

    add = sum(((C[:, None, j] + C[None, :, j]) % p) * weights[j] for j in range(d))
    mul = np.empty((n, n), dtype=np.int64)
    step = max(1, (1 << 21) // (n * d))
    for lo in range(0, n, step):
        rows = C[lo:lo + step]
        coeff = np.zeros((rows.shape[0], n, d), dtype=np.int64)
        for a in range(d):
            for b in range(d):
                term = rows[:, None, a] * C[None, :, b]
                coeff += term[:, :, None] * red[a + b][None, None, :]
        mul[lo:lo + step] = ((coeff % p) * weights[None, None, :]).sum(axis=2)

    def designator_of(i):
        from .dsl import format_poly
        return format_poly([int(c) for c in C[i]])

    def index_of(des):
        if isinstance(des, int):
            coeffs = [des]
        elif isinstance(des, str):
            from .dsl import parse_poly
            coeffs = parse_poly(des)
        elif isinstance(des, tuple) and all(isinstance(c, int) for c in des):
            coeffs = list(des)
        else:
            raise InvalidSpec(f"{des!r} does not designate a polynomial")
        # reduce an arbitrary-degree polynomial modulo the modulus
        coeffs = [c % p for c in coeffs]
        for t in range(len(coeffs) - 1, d - 1, -1):
            c = coeffs[t]
            if c:
                for j in range(d + 1):
                    coeffs[t - d + j] = (coeffs[t - d + j] - c * monic[j]) % p
        coeffs = (coeffs + [0] * d)[:d]
        return int(sum(c * p ** j for j, c in enumerate(coeffs)))

    return _from_tables(add, mul, spec, validate=validate,
                        designator_of=designator_of, index_of=index_of)


def _build_matrix(spec: Matrix, base: FiniteRing, validate: bool) -> FiniteRing:
    k, b = spec.k, base.size
    width = k * k
    n = b ** width
    E = _digits(n, b, width)                       # E[i, r*k + c]
    weights = np.array([b ** pos for pos in range(width)], dtype=np.int64)
    badd = base.add.astype(np.int64)
    bmul = base.mul.astype(np.int64)

    add = np.zeros((n, n), dtype=np.int64)
    for pos in range(width):
        add += badd[E[:, None, pos], E[None, :, pos]] * weights[pos]

    # dot[u, v] = sum_t u_t * v_t for row/column vectors coded in base b
    V = _digits(b ** k, b, k)
    dot = bmul[V[:, None, 0], V[None, :, 0]]
    for t in range(1, k):
        dot = badd[dot, bmul[V[:, None, t], V[None, :, t]]]
    vec_w = b ** np.arange(k, dtype=np.int64)
    mul = np.zeros((n, n), dtype=np.int64)
    for r in range(k):
        row_code = (E[:, r * k:(r + 1) * k] * vec_w).sum(axis=1)
        for c in range(k):
            col_code = (E[:, c::k] * vec_w).sum(axis=1)
            mul += dot[row_code[:, None], col_code[None, :]] * weights[r * k + c]

    def designator_of(i):
        return tuple(tuple(base.designator(int(E[i, r * k + c])) for c in range(k)) for r in range(k))

    def index_of(des):
        if not (isinstance(des, tuple) and len(des) == k and all(isinstance(row, tuple) and len(row) == k for row in des)):
            raise InvalidSpec(f"{des!r} is not a {k}x{k} matrix designator")
        return int(sum(base.element(des[r][c]) * weights[r * k + c] for r in range(k) for c in range(k)))

    return _from_tables(add, mul, spec, validate=validate,
                        designator_of=designator_of, index_of=index_of)


def product_tables(factors: list[FiniteRing]) -> tuple[np.ndarray, np.ndarray]:
    """Componentwise tables; the first factor is the most significant digit."""
    add = np.zeros((1, 1), dtype=np.int64)
    mul = np.zeros((1, 1), dtype=np.int64)
    for f in factors:
        m, s = add.shape[0], f.size
        fa = f.add.astype(np.int64)
        fm = f.mul.astype(np.int64)
        add = (add[:, None, :, None] * s + fa[None, :, None, :]).reshape(m * s, m * s)
        mul = (mul[:, None, :, None] * s + fm[None, :, None, :]).reshape(m * s, m * s)
    return add, mul


def product_index(sizes: list[int], coords) -> int:
    i = 0
    for s, c in zip(sizes, coords):
        i = i * s + int(c)
    return i


def _build_product(spec: Product, factors: list[FiniteRing], validate: bool) -> FiniteRing:
    sizes = [f.size for f in factors]
    add, mul = product_tables(factors)

    def coords(i):
        out = []
        for s in reversed(sizes):
            i, c = divmod(i, s)
            out.append(c)
        return out[::-1]

    def designator_of(i):
        return tuple(f.designator(c) for f, c in zip(factors, coords(i)))

    def index_of(des):
        if not (isinstance(des, tuple) and len(des) == len(factors)):
            raise InvalidSpec(f"{des!r} is not a {len(factors)}-tuple designator")
        return product_index(sizes, [f.element(d) for f, d in zip(factors, des)])

    return _from_tables(add, mul, spec, validate=validate,
                        designator_of=designator_of, index_of=index_of)


def product_ring(factors: list[FiniteRing]) -> FiniteRing:
    """Direct product of already-built rings (the empty product is the zero ring)."""
    spec = Product(tuple(f.spec for f in factors)) if factors else Cyclic(1)
    if not factors:
        return build_ring(spec)
    return _build_product(spec, factors, validate=False)


# --------------------------------------------------------------------------
# ideals as bool masks, quotients and restrictions

def as_bool_mask(ring: FiniteRing, mask) -> np.ndarray:
    """Accept a bool array, an int bitset, or an iterable of element indices."""
    if isinstance(mask, np.ndarray) and mask.dtype == bool:
        return mask
    if isinstance(mask, (int, np.integer)):
        out = np.zeros(ring.size, dtype=bool)
        bits = int(mask)
        raw = np.frombuffer(bits.to_bytes((ring.size + 7) // 8, "little"), dtype=np.uint8)
        out[:] = np.unpackbits(raw, bitorder="little")[:ring.size].astype(bool)
        return out
    out = np.zeros(ring.size, dtype=bool)
    out[list(mask)] = True
    return out


def is_ideal(ring: FiniteRing, mask, *, left: bool = True, right: bool = True) -> bool:
    m = as_bool_mask(ring, mask)
    members = np.flatnonzero(m)
    if not m[ring.zero]:
        return False
    if not m[ring.add[np.ix_(members, members)]].all() or not m[ring.neg[members]].all():
        return False
    if left and not m[ring.mul[:, members]].all():
        return False
    if right and not m[ring.mul[members, :]].all():
        return False
    return True


def quotient_ring(ring: FiniteRing, ideal, *, spec: RingSpec | None = None) -> tuple[FiniteRing, np.ndarray]:
    """R/I with minimum-index coset representatives.

    Returns the quotient ring and the projection as an index array.
    """
    m = as_bool_mask(ring, ideal)
    if not is_ideal(ring, m):
        raise NotAnIdeal("quotient by a set that is not a two-sided ideal")
    members = np.flatnonzero(m)
    rep = np.empty(ring.size, dtype=np.int64)
    step = max(1, (1 << 22) // max(1, members.size))
    for lo in range(0, ring.size, step):
        rep[lo:lo + step] = ring.add[lo:lo + step][:, members].min(axis=1)
    reps = np.unique(rep)
    proj = np.searchsorted(reps, rep)
    add = proj[ring.add[np.ix_(reps, reps)]]
    mul = proj[ring.mul[np.ix_(reps, reps)]]
    if spec is None:
        gens = subgroup_generators(ring, m)
        spec = Quotient(ring.spec, tuple(ring.designator(g) for g in gens))

    def designator_of(i):
        return ring.designator(int(reps[i]))

    def index_of(des):
        return int(proj[ring.element(des)])

    q = FiniteRing(add, mul, spec, zero=int(proj[ring.zero]), neg=proj[ring.neg[reps]],
                   designator_of=designator_of, index_of=index_of)
    proj = np.asarray(proj, dtype=_INDEX)
    proj.flags.writeable = False
    return q, proj


def restrict(ring: FiniteRing, mask) -> FiniteRing:
    """The subring on ``mask`` as a standalone ring, elements relabelled in index order."""
    m = as_bool_mask(ring, mask)
    members = np.flatnonzero(m)
    sub_add = ring.add[np.ix_(members, members)]
    sub_mul = ring.mul[np.ix_(members, members)]
    if not (m[sub_add].all() and m[sub_mul].all()):
        raise NotAnIdeal("set is not closed under the ring operations")
    pos = np.full(ring.size, -1, dtype=np.int64)
    pos[members] = np.arange(members.size)
    add = pos[sub_add]
    mul = pos[sub_mul]
    spec = Table(int(members.size), add.tolist(), mul.tolist())
    return FiniteRing(add, mul, spec, zero=int(pos[ring.zero]), neg=pos[ring.neg[members]],
                      designator_of=lambda i: ring.designator(int(members[i])),
                      index_of=lambda d: int(pos[ring.element(d)]))
