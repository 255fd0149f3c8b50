"""Finite rings, their ideal lattices, and generalized Łukasiewicz structure."""

__version__ = "0.1.0"

from .analysis import (CheckReport, Decomposition, GLRReport, SPIRCertificate, check_glr,  # noqa: E402
                       check_pmv_of_ring, decompose, ideal_mv, is_spir)
from .dsl import parse_spec, render  # noqa: E402
from .ideals import IdealLattice, enumerate_ideals  # noqa: E402
from .mv import MVTable, check_axioms, make_chain, product_mv  # noqa: E402
from .ring import FiniteRing, build_ring  # noqa: E402
from .semiring import GLSemiring, mv_from_semiring, semiring_from_mv, semiring_of_ideals  # noqa: E402

__all__ = [
    "CheckReport", "Decomposition", "FiniteRing", "GLRReport", "GLSemiring", "IdealLattice",
    "MVTable", "SPIRCertificate", "build_ring", "check_axioms", "check_glr", "check_pmv_of_ring",
    "decompose", "enumerate_ideals", "ideal_mv", "is_spir", "make_chain", "mv_from_semiring",
    "parse_spec", "product_mv", "render", "semiring_from_mv", "semiring_of_ideals",
]
