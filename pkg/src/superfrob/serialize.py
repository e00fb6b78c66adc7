"""Canonical, byte-deterministic serialization of polynomials and tables.

Polynomials serialize as sorted term lists (descending graded-lex over the
registry order), each term a ``[coefficient, exponent-map]`` pair with the
coefficient as an exact string.  Cyclotomic coefficients are flattened into
the exponent map under the pseudo-variable ``zeta`` with ascending powers.
Multipartitions serialize as nested arrays of parts.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from superfrob.combinat import Multipartition
from superfrob.exact import CyclotomicNumber, Poly, StructuralError, VariableRegistry


def _term_records(f: Poly):
    """(name->exp map, Fraction, zeta power or None) per flattened term, canonical order."""
    names = f.registry.names()
    records = []
    for exps, coeff in f.sorted_terms():
        powers = {name: e for name, e in zip(names, exps) if e}
        if isinstance(coeff, CyclotomicNumber):
            for power, c in enumerate(coeff.coeffs):
                if c:
                    records.append((powers, c, power))
        else:
            records.append((powers, coeff, None))
    return records


def poly_to_terms(f: Poly) -> list:
    """JSON-ready term list [[coeff-string, {name: exp}], ...]."""
    out = []
    for powers, coeff, zeta_power in _term_records(f):
        full = dict(powers)
        if zeta_power:
            full["zeta"] = zeta_power
        out.append([str(coeff), full])
    return out


def cyclotomic_to_terms(value: CyclotomicNumber) -> list:
    out = []
    for power, c in enumerate(value.coeffs):
        if c:
            out.append([str(c), {"zeta": power} if power else {}])
    return out


def terms_to_poly(registry: VariableRegistry, terms: list, zeta_order: int | None = None) -> Poly:
    """Inverse of :func:`poly_to_terms` (with the zeta order of the coefficient field)."""
    total = Poly.zero(registry)
    for coeff_str, powers in terms:
        coeff = Fraction(coeff_str)
        zeta_power = 0
        cleaned = {}
        for name, e in powers.items():
            if name == "zeta":
                zeta_power = e
            else:
                cleaned[name] = e
        if zeta_power:
            if zeta_order is None:
                raise StructuralError("zeta power present but no zeta order given")
            scalar = coeff * CyclotomicNumber.zeta(zeta_order, zeta_power)
        else:
            scalar = coeff
        total = total + Poly.monomial(registry, cleaned, scalar)
    return total


def _coeff_string(coeff: Fraction, body: str) -> str:
    if not body:
        return str(coeff)
    if coeff == 1:
        return body
    if coeff == -1:
        return f"-{body}"
    return f"{coeff}*{body}"


def poly_to_string(f: Poly) -> str:
    """Canonical human-readable form, stable across runs."""
    records = _term_records(f)
    if not records:
        return "0"
    parts = []
    for powers, coeff, zeta_power in records:
        factors = []
        for name in f.registry.names():
            e = powers.get(name)
            if e:
                factors.append(name if e == 1 else f"{name}^{e}")
        if zeta_power:
            factors.append("zeta" if zeta_power == 1 else f"zeta^{zeta_power}")
        parts.append(_coeff_string(coeff, "*".join(factors)))
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def cyclotomic_to_string(value: CyclotomicNumber) -> str:
    parts = []
    for power, c in enumerate(value.coeffs):
        if not c:
            continue
        body = "" if power == 0 else ("zeta" if power == 1 else f"zeta^{power}")
        parts.append(_coeff_string(c, body))
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def entry_to_terms(entry) -> list:
    if isinstance(entry, CyclotomicNumber):
        return cyclotomic_to_terms(entry)
    return poly_to_terms(entry)


def entry_to_string(entry) -> str:
    if isinstance(entry, CyclotomicNumber):
        return cyclotomic_to_string(entry)
    return poly_to_string(entry)


def multipartition_label(bshape: Multipartition) -> list:
    return [list(component) for component in bshape]


def table_payload(table) -> dict:
    """JSON-ready dict for a character table, per the documented schema."""
    return {
        "m": table.m,
        "n": table.n,
        "row_labels": [multipartition_label(b) for b in table.rows],
        "col_labels": [multipartition_label(b) for b in table.cols],
        "entries": [[entry_to_terms(e) for e in row] for row in table.entries],
        "solve_profile": {"k": list(table.solve_profile.bk), "l": list(table.solve_profile.bl)},
        "specialized": table.specialized,
        "zeta_order": table.m if table.specialized else None,
        "trivial_row_index": table.trivial_row_index,
    }


def table_to_csv(table) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(
        ["lambda\\mu"] + [json.dumps(multipartition_label(b)) for b in table.cols]
    )
    for bshape, row in zip(table.rows, table.entries):
        writer.writerow(
            [json.dumps(multipartition_label(bshape))] + [entry_to_string(e) for e in row]
        )
    return buffer.getvalue()


def json_text(payload) -> str:
    """Deterministic JSON rendering: sorted keys, fixed indentation, newline end."""
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
