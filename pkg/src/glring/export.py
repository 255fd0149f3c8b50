"""JSON, DOT and plain-text renderings of lattices and reports."""

from __future__ import annotations

import json

from .ideals import IdealLattice, maximal_ideals, popcount, prime_ideals


def lattice_to_json(L: IdealLattice, *, tables: bool = True) -> dict:
    R = L.ring
    out = {
        "ring": R.summary(),
        "ideal_count": L.size,
        "ideals": [
            {"id": i, "mask": hex(m), "order": popcount(m),
             "generators": [R.label(g) for g in L.generators[i]]}
            for i, m in enumerate(L.ideals)
        ],
        "maximal": maximal_ideals(L),
        "prime": prime_ideals(L),
        "covers": [list(p) for p in L.covers()],
    }
    if tables:
        out["tables"] = {
            "sum": L.sum.tolist(),
            "intersection": L.intersection.tolist(),
            "product": L.product.tolist(),
            "right_annihilator": L.right_ann.tolist(),
            "left_annihilator": L.left_ann.tolist(),
        }
    return out


def lattice_to_dot(L: IdealLattice, name: str = "ideals") -> str:
    """Hasse diagram: one node per ideal, an edge ``I -> J`` per covering pair ``I ⊂ J``."""
    R = L.ring
    lines = [f'digraph "{name}" {{', "  rankdir=BT;", "  node [shape=box];"]
    for i, m in enumerate(L.ideals):
        gens = ",".join(R.label(g) for g in L.generators[i]) or "0"
        label = f"I{i}: ({gens})\\n|I|={popcount(m)}"
        lines.append(f'  I{i} [label="{label}"];')
    for i, j in L.covers():
        lines.append(f"  I{i} -> I{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps(doc) -> str:
    """Canonical JSON: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def to_text(doc, indent: int = 0) -> str:
    """Indented ``key: value`` view of a JSON document."""
    pad = "  " * indent
    lines = []
    if isinstance(doc, dict):
        for k in sorted(doc):
            v = doc[k]
            if isinstance(v, (dict, list)) and v and not _is_flat_list(v):
                lines.append(f"{pad}{k}:")
                lines.append(to_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(doc, list):
        for item in doc:
            if isinstance(item, (dict, list)) and not _is_flat_list(item):
                lines.append(f"{pad}-")
                lines.append(to_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(f"{pad}{_scalar(doc)}")
    return "\n".join(line for line in lines if line)


def _is_flat_list(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _scalar(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)
