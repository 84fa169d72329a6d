"""Exact, canonical serialization of the package's values.

Every number is emitted exactly: integers stay integers, other
rationals become "a/b" strings, Laurent polynomials become lists of
(exponent, numerator, denominator) triples ascending by exponent.
These forms are the machine-readable contract of the command-line
tool; the token forms are comma-free so CSV rows need no quoting.
"""

from __future__ import annotations

from fractions import Fraction

from .modrep import Label, RelationReport, Vector, WeightModule
from .qarith import LaurentPoly
from .tensorcg import ComparisonReport, Decomposition


def rational_json(x: Fraction):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def laurent_json(p: LaurentPoly) -> list:
    return [[e, c.numerator, c.denominator] for e, c in p.terms()]


def scalar_json(x):
    if isinstance(x, LaurentPoly):
        return laurent_json(x)
    return rational_json(x)


def rational_token(x: Fraction) -> str:
    return str(rational_json(x))


def laurent_token(p: LaurentPoly) -> str:
    """Comma-free compact form, ascending exponents: 1*v^-1+2*v^3."""
    if not p:
        return "0"
    parts = []
    for e, c in p.terms():
        piece = f"{rational_token(abs(c))}*v^{e}"
        parts.append(("-" if c < 0 else "+") + piece)
    out = "".join(parts)
    return out[1:] if out.startswith("+") else out


def scalar_token(x) -> str:
    if isinstance(x, LaurentPoly):
        return laurent_token(x)
    return rational_token(x)


def label_str(lab: Label) -> str:
    return str(lab)


def vector_json(x: Vector) -> list:
    return [[label_str(lab), scalar_json(c)] for lab, c in x.items_in_order()]


def decomposition_json(d: Decomposition) -> list:
    return [[w, mult] for w, mult in d.pairs()]


def relation_report_json(r: RelationReport) -> dict:
    return {
        "module": r.module,
        "flavor": r.flavor,
        "relations": list(r.relations),
        "checked": len(r.checked),
        "failures": [
            {
                "relation": fl.relation,
                "label": label_str(fl.label),
                "defect": [[label_str(lab), scalar_json(c)] for lab, c in fl.defect],
            }
            for fl in r.failures
        ],
        "excluded": [label_str(lab) for lab in r.excluded],
        "ok": r.ok,
    }


def comparison_json(r: ComparisonReport) -> dict:
    out: dict = {"proportional": r.proportional, "interpretation": r.interpretation}
    if r.proportional:
        out["scalar"] = laurent_json(r.scalar)
    else:
        lab, phi_c, oracle_c = r.witness
        out["witness"] = {
            "label": label_str(lab),
            "formula": scalar_json(phi_c),
            "oracle": scalar_json(oracle_c),
        }
    return out


def module_descriptor(m: WeightModule) -> dict:
    """Full sparse description: flavor, basis, weights, and each
    generator as (row label, column label, scalar) triplets."""
    action = {}
    for g, mat in m.action.items():
        triplets = []
        for col in m.basis:
            for row in sorted(mat.get(col, {}), key=m.position):
                triplets.append([label_str(row), label_str(col), scalar_json(mat[col][row])])
        action[g] = triplets
    weight_json = rational_json if m.flavor == "classical" else int
    return {
        "flavor": m.flavor,
        "name": m.name,
        "basis": [label_str(lab) for lab in m.basis],
        "weights": [[label_str(lab), weight_json(m.weights[lab])] for lab in m.basis],
        "action": action,
        "boundary": [label_str(lab) for lab in m.basis if lab in m.boundary],
    }
