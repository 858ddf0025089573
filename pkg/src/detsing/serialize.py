"""Bit-exact JSON forms for polynomials, matrices and tables.

Polynomials serialize as lists of {coeff_num, coeff_den, exponents}
with variables named x_<row>_<col>; matrices as sparse triplet lists.
Every table payload carries {params, rows, provenance} where provenance
names the computation rule, so golden files can pin the schema.
"""

from __future__ import annotations

from fractions import Fraction

from .modules import PolyMatrix
from .poly import SparsePoly


def poly_to_json(p: SparsePoly):
    out = []
    for mono, coeff in sorted(p.terms.items()):
        out.append(
            {
                "coeff_num": coeff.numerator,
                "coeff_den": coeff.denominator,
                "exponents": {f"x_{i}_{j}": e for (i, j), e in mono},
            }
        )
    return out


def matrix_to_json(mat: PolyMatrix):
    entries = [
        {"row": r, "col": c, "poly": poly_to_json(p)}
        for (r, c), p in sorted(mat.entries.items())
    ]
    return {
        "rows": mat.target.rank,
        "cols": mat.source.rank,
        "target_twists": mat.target.twists(),
        "source_twists": mat.source.twists(),
        "entries": entries,
    }


def fraction_to_json(x: Fraction):
    return {"num": x.numerator, "den": x.denominator}


def table_payload(params: dict, rows, rule: str):
    return {"params": params, "rows": rows, "provenance": {"rule": rule}}
