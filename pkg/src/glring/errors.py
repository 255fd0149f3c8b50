"""Exception hierarchy shared by every glring module."""


class GLRingError(Exception):
    """Base class for all errors raised by glring."""


class SizeCapExceeded(GLRingError):
    def __init__(self, size: int, cap: int, what: str = "elements"):
        super().__init__(f"{what} count {size} exceeds the configured cap {cap}")
        self.size = size
        self.cap = cap


class InvalidSpec(GLRingError):
    pass


class TableNotARing(GLRingError):
    """A Cayley-table ring failed an axiom; ``witness`` is the offending tuple."""

    def __init__(self, axiom: str, witness: tuple):
        super().__init__(f"table fails {axiom} at {witness}")
        self.axiom = axiom
        self.witness = witness


class NotAnIdeal(GLRingError):
    pass


class IdealCountCapExceeded(SizeCapExceeded):
    def __init__(self, size: int, cap: int):
        super().__init__(size, cap, what="ideal")


class SemiringIdealCountCapExceeded(SizeCapExceeded):
    def __init__(self, size: int, cap: int):
        super().__init__(size, cap, what="semiring ideal")


class GLAxiomsFailed(GLRingError):
    def __init__(self, report):
        super().__init__(f"generalized Lukasiewicz semiring axioms fail: {report.failures}")
        self.report = report


class GLRCheckFailed(GLRingError):
    def __init__(self, report):
        super().__init__("ring is not a generalized Lukasiewicz ring")
        self.report = report


class CertificationFailed(GLRingError):
    """A decomposition invariant failed. Always an implementation bug."""


class PreconditionFailed(GLRingError):
    pass


class ParseError(GLRingError):
    def __init__(self, message: str, offset: int, expected: frozenset = frozenset()):
        detail = f" (expected one of: {', '.join(sorted(expected))})" if expected else ""
        super().__init__(f"{message} at offset {offset}{detail}")
        self.offset = offset
        self.expected = expected
