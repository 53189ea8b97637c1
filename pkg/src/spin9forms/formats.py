"""Text formats: monomial syntax, form exports (JSON/CSV) and the coefficient-table report."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from pathlib import Path

from .exterior import ExtForm, indices_of, mask_of
from .table3 import Table3Report

SCHEMA_VERSION = 1


class FormatError(ValueError):
    pass


def format_monomial(mask: int) -> str:
    """``x0^x3^y1`` style name of a monomial on O^2."""
    names = [f"x{i}" if i < 8 else f"y{i - 8}" for i in indices_of(mask)]
    return "^".join(names)


def parse_monomial(text: str) -> int:
    text = text.strip()
    if not text:
        raise FormatError("empty monomial")
    bits = []
    for tok in text.split("^"):
        tok = tok.strip()
        if len(tok) != 2 or tok[0] not in "xy" or not tok[1].isdigit() or int(tok[1]) > 7:
            raise FormatError(f"bad factor {tok!r} in {text!r}")
        bits.append(int(tok[1]) + (8 if tok[0] == "y" else 0))
    if any(a >= b for a, b in zip(bits, bits[1:])):
        raise FormatError(f"factors of {text!r} are not in ascending order")
    return mask_of(bits)


def read_monomials(path) -> list[int]:
    out = []
    for n, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(parse_monomial(line))
        except FormatError as exc:
            raise FormatError(f"{path}:{n}: {exc}") from None
    if not out:
        raise FormatError(f"{path}: no monomials")
    if len(set(out)) != len(out):
        raise FormatError(f"{path}: duplicate monomials")
    return out


def format_coefficient(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def parse_coefficient(text: str):
    c = Fraction(text)
    return c.numerator if c.denominator == 1 else c


def form_to_dict(phi: ExtForm, name: str = None) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "form",
        "name": name,
        "dimension": phi.dim,
        "degree": phi.degree,
        "terms": [{"indices": list(indices_of(m)), "coefficient": format_coefficient(c)} for m, c in phi],
    }


def form_from_dict(data: dict) -> ExtForm:
    if data.get("kind") != "form":
        raise FormatError("not a form export")
    if data.get("schema_version") != SCHEMA_VERSION:
        raise FormatError(f"unsupported schema version {data.get('schema_version')!r}")
    terms = {}
    for t in data["terms"]:
        idx = t["indices"]
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise FormatError(f"indices {idx} not strictly ascending")
        terms[mask_of(idx)] = parse_coefficient(t["coefficient"])
    return ExtForm(data["dimension"], terms, data["degree"])


def form_to_csv(phi: ExtForm) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["indices", "monomial", "coefficient"])
    for m, c in phi:
        w.writerow([" ".join(map(str, indices_of(m))), format_monomial(m) if phi.dim == 16 else "", format_coefficient(c)])
    return buf.getvalue()


def form_from_csv(text: str, dim: int, degree: int) -> ExtForm:
    rows = list(csv.DictReader(io.StringIO(text)))
    terms = {}
    for r in rows:
        idx = [int(i) for i in r["indices"].split()]
        terms[mask_of(idx)] = parse_coefficient(r["coefficient"])
    return ExtForm(dim, terms, degree)


TABLE3_COLUMNS = ["Coefficient", "Basis vector", "Specification", "Number"]


def table3_to_dict(report: Table3Report) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "table3",
        "total": report.total,
        "rows": [
            {
                "row": r.row,
                "coefficient": r.spec.coefficient,
                "basis_vector": r.spec.pattern,
                "specification": r.spec.specification,
                "number": r.count,
                "observed": {format_coefficient(c): n for c, n in sorted(r.coefficients.items())},
            }
            for r in report.rows
        ],
    }


def table3_to_csv(report: Table3Report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TABLE3_COLUMNS)
    for r in report.rows:
        w.writerow([r.spec.coefficient, r.spec.pattern, r.spec.specification, r.count])
    return buf.getvalue()


def dumps_json(data: dict) -> str:
    return json.dumps(data, indent=1) + "\n"
