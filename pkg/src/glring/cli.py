"""Command-line front end.

Exit codes: 0 when every asserted property holds, 1 when a checked property
fails (the report carries the witness), 2 for parse, config, cap and input
errors.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .analysis import (check_glr, check_infinite_product_witness, check_spir_annihilator_law,
                       decompose, ideal_mv, is_spir, ring_label)
from .config import ConfigError, RunConfig, resolve_config
from .corpus import analyze, full_corpus, small_corpus
from .dsl import parse_spec, render
from .errors import GLRingError
from .export import dumps, lattice_to_dot, lattice_to_json, to_text
from .ideals import enumerate_ideals
from .mv import MVTable, cayley_text, check_axioms, is_commutative, iso_to_chain_product, make_chain, product_mv
from .ring import build_ring, check_ring_axioms
from .semiring import (check_duality, check_galois, check_gl_axioms, check_semiring_axioms,
                       enumerate_semiring_ideals, semiring_of_ideals)
from .specs import Product

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


class UsageError(GLRingError):
    pass


# --------------------------------------------------------------------------
# command bodies: each returns (passed, result document, extra text)

def _load(spec_text: str, config: RunConfig):
    spec = parse_spec(spec_text, base_dir=Path.cwd())
    R = build_ring(spec, max_elements=config.max_elements)
    return spec, R


def cmd_ideals(spec_text: str, config: RunConfig):
    _, R = _load(spec_text, config)
    L = enumerate_ideals(R, max_ideals=config.max_ideals)
    if config.format == "dot":
        return True, None, lattice_to_dot(L)
    return True, lattice_to_json(L), None


def _axioms_result(R, L, config) -> tuple[bool, dict]:
    ring_failure = check_ring_axioms(R.add, R.mul, exhaustive=R.size <= 256 or None)
    S = semiring_of_ideals(L)
    semi = check_semiring_axioms(S)
    gl = check_gl_axioms(S)
    doc = {
        "ring_axioms": {"passed": ring_failure is None,
                        "failure": None if ring_failure is None else
                        {"axiom": ring_failure[0], "witness": list(ring_failure[1])}},
        "semiring_axioms": semi.to_json(),
        "gl_axioms": gl.to_json(),
    }
    ok = ring_failure is None and semi.passed and gl.passed
    if gl.passed:
        mv = check_axioms(ideal_mv(L))
        doc["mv_axioms"] = mv.to_json()
        ok = ok and mv.passed
    return ok, doc


def _duality_result(L) -> tuple[bool, dict]:
    S = semiring_of_ideals(L)
    gl = check_gl_axioms(S)
    if not gl.passed:
        return False, {"passed": False, "reason": "semiring of ideals fails the GL axioms",
                       "gl_axioms": gl.to_json()}
    rep = check_duality(ideal_mv(L), S)
    return rep.passed, rep.to_json()


def _spir_result(R, L) -> tuple[bool, dict]:
    cert = is_spir(R, L)
    if cert is None:
        return False, {"spir": False}
    law = cert.nilpotency < 1 or check_spir_annihilator_law(cert, L)
    return law, {"spir": True, "certificate": cert.to_json(L), "annihilator_law": law}


def cmd_check(spec_text: str, config: RunConfig, which: str):
    spec, R = _load(spec_text, config)
    L = enumerate_ideals(R, max_ideals=config.max_ideals)
    doc = {"ring": ring_label(R), "order": R.size}
    ok = True
    if which in ("glr", "all"):
        glr = check_glr(R, L)
        doc["glr"] = glr.to_json()
        ok &= glr.is_glr
    if which in ("spir", "all"):
        passed, doc["spir"] = _spir_result(R, L)
        ok &= passed
    if which in ("axioms", "all"):
        passed, doc["axioms"] = _axioms_result(R, L, config)
        ok &= passed
    if which in ("duality", "all"):
        passed, doc["duality"] = _duality_result(L)
        ok &= passed
    return bool(ok), doc, None


def cmd_decompose(spec_text: str, config: RunConfig):
    _, R = _load(spec_text, config)
    L = enumerate_ideals(R, max_ideals=config.max_ideals)
    glr = check_glr(R, L)
    if not glr.is_glr:
        return False, {"ring": ring_label(R), "glr": glr.to_json(), "decomposition": None}, None
    dec = decompose(R, L)
    return True, {"ring": ring_label(R), "decomposition": dec.to_json()}, None


def _mv_from_args(args, config) -> tuple[MVTable, dict]:
    if args.chain is not None:
        return make_chain(args.chain), {"source": f"chain {args.chain}"}
    if args.product is not None:
        try:
            sizes = [int(s) for s in args.product.split(",") if s.strip()]
        except ValueError as exc:
            raise UsageError("--product takes comma-separated chain sizes") from exc
        if any(s < 1 for s in sizes):
            raise UsageError("chain sizes must be positive")
        return (product_mv([make_chain(s) for s in sizes], max_elements=config.max_elements),
                {"source": f"product of chains {sizes}"})
    if args.table is not None:
        import json
        try:
            doc = json.loads(Path(args.table).read_text(encoding="utf-8"))
            return MVTable.from_json(doc), {"source": f"table {args.table}"}
        except (OSError, ValueError, KeyError) as exc:
            raise UsageError(f"cannot read pseudo MV table: {exc}") from exc
    if args.spec is None:
        raise UsageError("mv needs a ring spec or one of --chain, --product, --table")
    _, R = _load(args.spec, config)
    L = enumerate_ideals(R, max_ideals=config.max_ideals)
    S = semiring_of_ideals(L)
    gl = check_gl_axioms(S)
    if not gl.passed:
        return None, {"source": f"ideals of {ring_label(R)}", "gl_axioms": gl.to_json()}
    return ideal_mv(L), {"source": f"ideals of {ring_label(R)}"}


def cmd_mv(args, config: RunConfig):
    A, doc = _mv_from_args(args, config)
    if A is None:
        return False, doc, None
    axioms = check_axioms(A)
    comm = is_commutative(A)
    iso = iso_to_chain_product(A) if axioms.passed else None
    doc.update({
        "size": A.size,
        "axioms": axioms.to_json(),
        "commutative": comm.commutative,
        "commutativity_witness": None if comm.witness is None else list(comm.witness),
        "chain_lengths": None if iso is None else iso.chain_lengths,
        "table": A.to_json(),
    })
    text = None
    if config.format == "text":
        text = cayley_text(A, "oplus") + "\n\n" + cayley_text(A, "odot") + "\n"
    return axioms.passed, doc, text


def cmd_semiring(spec_text: str, config: RunConfig):
    _, R = _load(spec_text, config)
    L = enumerate_ideals(R, max_ideals=config.max_ideals)
    S = semiring_of_ideals(L)
    semi = check_semiring_axioms(S)
    gl = check_gl_axioms(S)
    galois = check_galois(L, max_semiring_ideals=config.max_semiring_ideals)
    sideals = enumerate_semiring_ideals(S, max_ideals=config.max_semiring_ideals)
    doc = {"ring": ring_label(R), "semiring": S.to_json(), "semiring_axioms": semi.to_json(),
           "gl_axioms": gl.to_json(), "semiring_ideals": [hex(b) for b in sideals],
           "galois": galois.to_json()}
    return semi.passed and gl.passed and galois.passed, doc, None


def _analyze_named(name_and_config):
    name, config = name_and_config
    return analyze(parse_spec(name), config)


def cmd_corpus(config: RunConfig, which: str):
    if which == "small":
        specs = small_corpus()
        specs += [Product((a, b)) for i, a in enumerate(specs) for b in specs[i:]]
        names = [render(s) for s in specs]
    else:
        names = [e.name for e in full_corpus(max_elements=config.max_elements)]
    work = [(n, config) for n in names]
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(_analyze_named, work, chunksize=4))
    else:
        results = [_analyze_named(w) for w in work]
    failures = [{"ring": r["ring"], "failed": sorted(k for k, v in r["checks"].items() if not v)}
                for r in results if not all(r["checks"].values())]
    infinite = check_infinite_product_witness()
    doc = {
        "corpus": which,
        "rings": len(results),
        "glr": sum(r["is_glr"] for r in results),
        "non_glr": sum(not r["is_glr"] for r in results),
        "results": results,
        "failures": failures,
        "infinite_product_witness": infinite.to_json(),
    }
    return not failures and infinite.passed, doc, None


# --------------------------------------------------------------------------
# argument handling

def _common(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("json", "text", "dot"), default=None)
    p.add_argument("--max-elements", type=int, default=None)
    p.add_argument("--max-ideals", type=int, default=None)
    p.add_argument("--max-semiring-ideals", type=int, default=None)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None, help="write the report here instead of stdout")
    p.add_argument("--config", default=None, help="JSON config file")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="glring", description="Ideal lattices and GLR classification of finite rings.")
    parser.add_argument("--version", action="version", version=f"glring {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("ideals", help="enumerate the two-sided ideals")
    p.add_argument("spec")
    _common(p)
    p = sub.add_parser("check", help="check GLR, SPIR, axiom and duality properties")
    p.add_argument("spec")
    p.add_argument("--which", choices=("glr", "spir", "axioms", "duality", "all"), default="all")
    _common(p)
    p = sub.add_parser("decompose", help="decompose a GLR into special primary factors")
    p.add_argument("spec")
    _common(p)
    p = sub.add_parser("mv", help="pseudo MV-algebra of ideals, of a chain product, or from a table file")
    p.add_argument("spec", nargs="?")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--chain", type=int, default=None)
    group.add_argument("--product", default=None, help="comma-separated chain sizes")
    group.add_argument("--table", default=None, help="JSON pseudo MV table")
    _common(p)
    p = sub.add_parser("semiring", help="semiring of ideals and its ideal correspondence")
    p.add_argument("spec")
    _common(p)
    p = sub.add_parser("corpus", help="run the property suite over the generated corpus")
    p.add_argument("--which", choices=("full", "small"), default="full")
    _common(p)
    return parser


def _config_from(args) -> RunConfig:
    flags = {"max_elements": args.max_elements, "max_ideals": args.max_ideals,
             "max_semiring_ideals": args.max_semiring_ideals, "format": args.format,
             "jobs": args.jobs, "seed": args.seed}
    return resolve_config(flags, config_path=args.config)


def _render(command: str, args, config: RunConfig, passed: bool, doc, text) -> str:
    if config.format == "dot":
        if command != "ideals":
            raise UsageError("dot output is only available for the ideals command")
        return text
    envelope = {
        "tool": "glring",
        "version": __version__,
        "command": command,
        "input": getattr(args, "spec", None),
        "config": config.to_json(),
        "passed": passed,
        "result": doc,
    }
    if config.format == "text":
        return to_text(envelope) + "\n" + ("\n" + text if text else "")
    return dumps(envelope)


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        config = _config_from(args)
        if args.command == "ideals":
            passed, doc, text = cmd_ideals(args.spec, config)
        elif args.command == "check":
            passed, doc, text = cmd_check(args.spec, config, args.which)
        elif args.command == "decompose":
            passed, doc, text = cmd_decompose(args.spec, config)
        elif args.command == "mv":
            passed, doc, text = cmd_mv(args, config)
        elif args.command == "semiring":
            passed, doc, text = cmd_semiring(args.spec, config)
        else:
            passed, doc, text = cmd_corpus(config, args.which)
        out = _render(args.command, args, config, passed, doc, text)
    except (GLRingError, ConfigError) as exc:
        print(f"glring: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"glring: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.out:
        Path(args.out).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)
    return EXIT_OK if passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
