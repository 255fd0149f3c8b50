"""Text syntax for ring specs.

Grammar::

    ring       := product
    product    := quotient (("x" | "×") quotient)*
    quotient   := atom ("/" "(" gens ")")*
    atom       := "Z" int
                | "GF(" int ")" ["[x]/(" poly ")"]
                | "M" int "(" ring ")"
                | "(" ring ")"
                | "@" path
    gens       := designator ("," designator)*
    designator := poly | "(" designator ("," designator)* [","] ")"
                | "[" designator ("," designator)* "]"
    poly       := monomial ("+" monomial)*
    monomial   := int | [int ["*"]] "x" ["^" int]

Quotient binds tighter than product: ``Z4 x Z9/(3)`` is ``Z4 x (Z9/(3))``.
``GF(p)`` alone is ``GF(p)[x]/(x)``. Tuple designators name matrix rows or
product components; ``[...]`` is accepted as a synonym for ``(...)``.
"""

from __future__ import annotations

from pathlib import Path

from .errors import InvalidSpec, ParseError
from .specs import (Cyclic, Designator, Matrix, PolyQuotient, Product, Quotient,
                    RingSpec, Table, load_table_spec)

DATA_DIR = Path(__file__).parent / "data"


class _Parser:
    def __init__(self, text: str, base_dir: Path | None = None):
        self.text = text
        self.pos = 0
        self.base_dir = base_dir

    # -- lexical helpers
    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s: str) -> bool:
        self.skip()
        return self.text.startswith(s, self.pos)

    def accept(self, s: str) -> bool:
        if self.peek(s):
            self.pos += len(s)
            return True
        return False

    def expect(self, s: str):
        if not self.accept(s):
            self.fail(f"expected {s!r}", {s})

    def fail(self, message: str, expected=()):
        raise ParseError(message, len(self.text[:self.pos].encode("utf-8")), frozenset(expected))

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected an integer", {"<int>"})
        return int(self.text[start:self.pos])

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)

    # -- rings
    def ring(self) -> RingSpec:
        factors = [self.quotient()]
        while self.accept("x") or self.accept("×"):
            factors.append(self.quotient())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def quotient(self) -> RingSpec:
        spec = self.atom()
        while self.accept("/"):
            self.expect("(")
            gens = []
            if not self.accept(")"):
                gens.append(self.designator())
                while self.accept(","):
                    gens.append(self.designator())
                self.expect(")")
            spec = Quotient(spec, tuple(gens))
        return spec

    def atom(self) -> RingSpec:
        start = self.pos
        try:
            if self.accept("GF("):
                p = self.integer()
                self.expect(")")
                if self.accept("["):
                    self.expect("x")
                    self.expect("]")
                    self.expect("/")
                    self.expect("(")
                    coeffs = self.poly()
                    self.expect(")")
                else:
                    coeffs = [0, 1]
                return PolyQuotient(p, tuple(coeffs))
            if self.accept("Z"):
                return Cyclic(self.integer())
            if self.accept("M"):
                k = self.integer()
                self.expect("(")
                base = self.ring()
                self.expect(")")
                return Matrix(k, base)
            if self.accept("("):
                inner = self.ring()
                self.expect(")")
                return inner
            if self.accept("@"):
                return self.table()
        except InvalidSpec as exc:
            self.pos = start
            self.fail(str(exc))
        self.fail("expected a ring", {"Z", "GF(", "M", "(", "@"})

    def table(self) -> Table:
        start = self.pos
        while self.pos < len(self.text) and not self.text[self.pos].isspace() and self.text[self.pos] not in "()":
            self.pos += 1
        if self.text.endswith("/", start, self.pos) and self.text.startswith("(", self.pos):
            self.pos -= 1
        name = self.text[start:self.pos]
        if not name:
            self.fail("expected a path after '@'", {"<path>"})
        path = resolve_table_path(name, self.base_dir)
        if path is None:
            self.pos = start
            self.fail(f"table file {name!r} not found")
        return load_table_spec(path, source=name)

    # -- polynomials and designators
    def poly(self) -> list[int]:
        coeffs: dict[int, int] = {}
        while True:
            c, e = self.monomial()
            coeffs[e] = coeffs.get(e, 0) + c
            if not self.accept("+"):
                break
        top = max(coeffs)
        return [coeffs.get(e, 0) for e in range(top + 1)]

    def monomial(self) -> tuple[int, int]:
        self.skip()
        coef = None
        if self.pos < len(self.text) and self.text[self.pos].isdigit():
            coef = self.integer()
            self.accept("*")
        if self.accept("x"):
            exp = self.integer() if self.accept("^") else 1
            return (1 if coef is None else coef), exp
        if coef is None:
            self.fail("expected a monomial", {"<int>", "x"})
        return coef, 0

    def designator(self) -> Designator:
        for open_, close in (("(", ")"), ("[", "]")):
            if self.accept(open_):
                items = [self.designator()]
                while self.accept(","):
                    if self.peek(close):
                        break
                    items.append(self.designator())
                self.expect(close)
                return tuple(items)
        start = self.pos
        coeffs = self.poly()
        if len(coeffs) == 1 and "x" not in self.text[start:self.pos]:
            return coeffs[0]
        return format_poly(coeffs)


def resolve_table_path(name: str, base_dir: Path | None = None) -> Path | None:
    """Look for a table file as given, then under ``base_dir``, then in the bundled data."""
    candidates = [Path(name)]
    if base_dir is not None:
        candidates.append(Path(base_dir) / name)
    candidates.append(DATA_DIR / name)
    for c in candidates:
        if c.is_file():
            return c
    return None


def parse_spec(text: str, base_dir: str | Path | None = None) -> RingSpec:
    p = _Parser(text, Path(base_dir) if base_dir is not None else None)
    spec = p.ring()
    if not p.at_end():
        p.fail("unexpected trailing input", {"x", "/", "<end>"})
    return spec


def parse_poly(text: str) -> list[int]:
    """Coefficients (lowest degree first) of a polynomial like ``2x^2+x+1``."""
    p = _Parser(text)
    coeffs = p.poly()
    if not p.at_end():
        p.fail("unexpected trailing input", {"+", "<end>"})
    return coeffs


def parse_designator(text: str) -> Designator:
    p = _Parser(text)
    d = p.designator()
    if not p.at_end():
        p.fail("unexpected trailing input", {"<end>"})
    return d


def format_poly(coeffs) -> str:
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        if e == 0:
            terms.append(str(c))
        else:
            mono = "x" if e == 1 else f"x^{e}"
            terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) if terms else "0"


def render_designator(d: Designator) -> str:
    if isinstance(d, tuple):
        inner = ",".join(render_designator(x) for x in d)
        return f"({inner},)" if len(d) == 1 else f"({inner})"
    return str(d)


def render(spec: RingSpec) -> str:
    """Inverse of :func:`parse_spec` (``parse_spec(render(s)) == s``)."""
    if isinstance(spec, Cyclic):
        return f"Z{spec.n}"
    if isinstance(spec, PolyQuotient):
        if spec.modulus == (0, 1):
            return f"GF({spec.p})"
        return f"GF({spec.p})[x]/({format_poly(spec.modulus)})"
    if isinstance(spec, Matrix):
        return f"M{spec.k}({render(spec.base)})"
    if isinstance(spec, Product):
        return " x ".join(f"({render(f)})" if isinstance(f, Product) else render(f) for f in spec.factors)
    if isinstance(spec, Quotient):
        base = render(spec.base)
        if isinstance(spec.base, Product):
            base = f"({base})"
        gens = ",".join(render_designator(g) for g in spec.generators)
        return f"{base}/({gens})"
    if isinstance(spec, Table):
        if not spec.source:
            raise InvalidSpec("a table ring without a source file has no text form")
        return f"@{spec.source}"
    raise InvalidSpec(f"not a ring spec: {spec!r}")
