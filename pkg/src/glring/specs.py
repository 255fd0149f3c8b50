"""Structured ring specifications and their canonical JSON form.

A ring spec is one of six frozen dataclasses. Element designators (used by
``Quotient`` generators) are plain JSON-ish values: ``int`` for residues,
constants and table indices, ``str`` for polynomials in ``x``, and nested
tuples for matrices (rows) and products (one entry per factor).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Union

from .errors import InvalidSpec

Designator = Union[int, str, tuple]

SCHEMA_VERSION = 1


def _freeze(value):
    if isinstance(value, (list, tuple)):
        return tuple(_freeze(v) for v in value)
    return value


def _thaw(value):
    if isinstance(value, tuple):
        return [_thaw(v) for v in value]
    return value


@dataclass(frozen=True)
class Cyclic:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidSpec(f"Z{self.n}: modulus must be a positive integer")


@dataclass(frozen=True)
class PolyQuotient:
    """GF(p)[x] modulo ``modulus``; coefficients are listed lowest degree first."""

    p: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "modulus", tuple(int(c) % self.p for c in self.modulus) if self.p > 0 else ())
        if not is_prime(self.p):
            raise InvalidSpec(f"GF({self.p}): {self.p} is not prime")
        if not any(self.modulus):
            raise InvalidSpec("zero modulus")
        if self.modulus[-1] == 0:
            raise InvalidSpec("modulus leading coefficient must be nonzero")
        if len(self.modulus) < 2:
            raise InvalidSpec("modulus must have degree >= 1")

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1


@dataclass(frozen=True)
class Matrix:
    k: int
    base: "RingSpec"

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 1:
            raise InvalidSpec(f"M{self.k}: matrix size must be >= 1")


@dataclass(frozen=True)
class Product:
    factors: tuple["RingSpec", ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise InvalidSpec("product needs at least one factor")


@dataclass(frozen=True)
class Quotient:
    base: "RingSpec"
    generators: tuple[Designator, ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", _freeze(self.generators))


@dataclass(frozen=True)
class Table:
    n: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    source: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "add", _freeze(self.add))
        object.__setattr__(self, "mul", _freeze(self.mul))
        for name, table in (("add", self.add), ("mul", self.mul)):
            if len(table) != self.n or any(len(row) != self.n for row in table):
                raise InvalidSpec(f"{name} table must be {self.n}x{self.n}")
            if any(not (0 <= v < self.n) for row in table for v in row):
                raise InvalidSpec(f"{name} table has entries outside [0, {self.n})")

    def __repr__(self):
        src = f", source={self.source!r}" if self.source else ""
        return f"Table(n={self.n}{src})"


RingSpec = Union[Cyclic, PolyQuotient, Matrix, Product, Quotient, Table]


def is_prime(p) -> bool:
    if not isinstance(p, int) or p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def spec_to_json(spec: RingSpec) -> dict:
    if isinstance(spec, Cyclic):
        return {"kind": "cyclic", "n": spec.n}
    if isinstance(spec, PolyQuotient):
        return {"kind": "poly", "p": spec.p, "modulus": list(spec.modulus)}
    if isinstance(spec, Matrix):
        return {"kind": "matrix", "k": spec.k, "base": spec_to_json(spec.base)}
    if isinstance(spec, Product):
        return {"kind": "product", "factors": [spec_to_json(f) for f in spec.factors]}
    if isinstance(spec, Quotient):
        return {"kind": "quotient", "base": spec_to_json(spec.base),
                "generators": [_thaw(g) for g in spec.generators]}
    if isinstance(spec, Table):
        out = {"kind": "table", "n": spec.n, "add": _thaw(spec.add), "mul": _thaw(spec.mul)}
        if spec.source:
            out["source"] = spec.source
        return out
    raise InvalidSpec(f"not a ring spec: {spec!r}")


def spec_from_json(doc: dict) -> RingSpec:
    try:
        kind = doc["kind"]
        if kind == "cyclic":
            return Cyclic(doc["n"])
        if kind == "poly":
            return PolyQuotient(doc["p"], tuple(doc["modulus"]))
        if kind == "matrix":
            return Matrix(doc["k"], spec_from_json(doc["base"]))
        if kind == "product":
            return Product(tuple(spec_from_json(f) for f in doc["factors"]))
        if kind == "quotient":
            return Quotient(spec_from_json(doc["base"]), _freeze(doc["generators"]))
        if kind == "table":
            return Table(doc["n"], doc["add"], doc["mul"], doc.get("source"))
    except (KeyError, TypeError) as exc:
        raise InvalidSpec(f"malformed ring spec document: {exc}") from exc
    raise InvalidSpec(f"unknown ring spec kind {kind!r}")


def load_table_spec(path: str | Path, source: str | None = None) -> Table:
    """Read a ``{"kind": "table", ...}`` document; ``source`` is recorded for rendering."""
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    if doc.get("kind", "table") != "table":
        raise InvalidSpec(f"{path}: expected a table ring document")
    return Table(doc["n"], doc["add"], doc["mul"], source if source is not None else str(path))


def dump_table_spec(spec: Table, path: str | Path) -> None:
    doc = spec_to_json(Table(spec.n, spec.add, spec.mul))
    Path(path).write_text(json.dumps(doc, indent=1) + "\n", encoding="utf-8")
