"""Reading and writing algebra documents.

An algebra document is one JSON object per algebra with fields `dim`,
`kind`, `basis`, and `brackets`; bracket pairs that are not listed are
zero.  A parameterized document additionally declares `params`, and its
coefficient strings may be polynomial expressions in those parameters.
A `name` field is optional metadata on either flavor.

Documents are emitted in a canonical form (fixed key order, sorted
bracket pairs, two-space indent) so identical inputs produce identical
bytes.
"""

import json

from .algebras import AlgebraSpec
from .families import ParamAlgebra
from .polynomials import format_poly, parse_poly
from .scalars import format_scalar, parse_scalar

__all__ = [
    "FormatError",
    "load_document",
    "parse_document",
    "document_to_algebra",
    "document_to_family",
    "algebra_to_document",
    "family_to_document",
    "dumps_canonical",
    "cochain_entries",
    "cochain_from_entries",
]

_KINDS = ("lie", "leibniz")
_TOP_FIELDS = ("dim", "kind", "basis", "name", "params", "brackets")
_ENTRY_FIELDS = ("left", "right", "value")
_TERM_FIELDS = ("basis", "coeff")


class FormatError(ValueError):
    """Document failure naming the offending line or field."""

    def __init__(self, message, line=None, field=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field '{field}'")
        prefix = ", ".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)
        self.line = line
        self.field = field


def load_document(text: str) -> dict:
    """JSON text to a raw document object; syntax errors carry the line."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(exc.msg, line=exc.lineno) from exc
    if not isinstance(doc, dict):
        raise FormatError("document must be a JSON object")
    return doc


def _check_keys(mapping, allowed, path):
    for key in mapping:
        if key not in allowed:
            full = f"{path}.{key}" if path else str(key)
            raise FormatError("unknown field", field=full)


def _structure(doc, coeff_parser, coeff_label):
    """Shared walk of a document body; returns the algebra ingredients."""
    dim = doc.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise FormatError("expected a positive integer", field="dim")
    kind = doc.get("kind", "lie")
    if kind not in _KINDS:
        raise FormatError("expected 'lie' or 'leibniz'", field="kind")
    basis = doc.get("basis", [f"x{i + 1}" for i in range(dim)])
    if (not isinstance(basis, list)
            or any(not isinstance(b, str) or not b for b in basis)):
        raise FormatError("expected a list of nonempty names", field="basis")
    if len(basis) != dim or len(set(basis)) != dim:
        raise FormatError(f"expected {dim} distinct names", field="basis")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise FormatError("expected a string", field="name")
    index = {label: i for i, label in enumerate(basis)}
    entries = doc.get("brackets", [])
    if not isinstance(entries, list):
        raise FormatError("expected a list", field="brackets")
    brackets = {}
    for pos, entry in enumerate(entries):
        path = f"brackets[{pos}]"
        if not isinstance(entry, dict):
            raise FormatError("expected an object", field=path)
        _check_keys(entry, _ENTRY_FIELDS, path)
        pair = []
        for side in ("left", "right"):
            label = entry.get(side)
            if label not in index:
                raise FormatError(f"unknown basis name {label!r}",
                                  field=f"{path}.{side}")
            pair.append(index[label])
        key = tuple(pair)
        if key in brackets:
            raise FormatError("duplicate bracket pair", field=path)
        value = entry.get("value")
        if not isinstance(value, list):
            raise FormatError("expected a list", field=f"{path}.value")
        cell = {}
        for vpos, term in enumerate(value):
            vpath = f"{path}.value[{vpos}]"
            if not isinstance(term, dict):
                raise FormatError("expected an object", field=vpath)
            _check_keys(term, _TERM_FIELDS, vpath)
            label = term.get("basis")
            if label not in index:
                raise FormatError(f"unknown basis name {label!r}",
                                  field=f"{vpath}.basis")
            k = index[label]
            if k in cell:
                raise FormatError("duplicate basis component",
                                  field=f"{vpath}.basis")
            coeff = term.get("coeff")
            if not isinstance(coeff, str):
                raise FormatError(f"expected a {coeff_label} string",
                                  field=f"{vpath}.coeff")
            try:
                cell[k] = coeff_parser(coeff)
            except ValueError as exc:
                raise FormatError(str(exc), field=f"{vpath}.coeff") from exc
        brackets[key] = cell
    return dim, kind, basis, name, brackets


def document_to_algebra(doc: dict) -> AlgebraSpec:
    """Concrete algebra from a raw document object."""
    if "params" in doc:
        raise FormatError("parameterized document where a concrete algebra "
                          "was expected", field="params")
    _check_keys(doc, _TOP_FIELDS, "")
    dim, kind, basis, name, brackets = _structure(doc, parse_scalar, "scalar")
    return AlgebraSpec(dim, brackets, kind=kind, name=name, basis_names=basis)


def document_to_family(doc: dict) -> ParamAlgebra:
    """Parameterized algebra from a raw document object."""
    _check_keys(doc, _TOP_FIELDS, "")
    params = doc.get("params")
    if (not isinstance(params, list)
            or any(not isinstance(p, str) for p in params)):
        raise FormatError("expected a list of parameter names",
                          field="params")
    params = tuple(params)
    try:
        parse_poly("0", params)
    except ValueError as exc:
        raise FormatError(str(exc), field="params") from exc
    dim, kind, basis, name, brackets = _structure(
        doc, lambda s: parse_poly(s, params), "polynomial")
    return ParamAlgebra(dim, params, brackets, kind=kind, name=name,
                        basis_names=basis)


def parse_document(text: str):
    """Parse JSON text into an AlgebraSpec or, if `params` is declared,
    a ParamAlgebra."""
    doc = load_document(text)
    if "params" in doc:
        return document_to_family(doc)
    return document_to_algebra(doc)


def algebra_to_document(spec: AlgebraSpec) -> dict:
    doc = {"dim": spec.dim, "kind": spec.kind,
           "basis": list(spec.basis_names)}
    if spec.name:
        doc["name"] = spec.name
    names = spec.basis_names
    doc["brackets"] = [
        {"left": names[i], "right": names[j],
         "value": [{"basis": names[k], "coeff": format_scalar(cell[k])}
                   for k in sorted(cell)]}
        for i, j, cell in spec.nonzero_brackets()
    ]
    return doc


def family_to_document(pa: ParamAlgebra) -> dict:
    doc = {"dim": pa.dim, "kind": pa.kind, "params": list(pa.params),
           "basis": list(pa.basis_names)}
    if pa.name:
        doc["name"] = pa.name
    names = pa.basis_names
    brackets = []
    for (i, j) in sorted(pa.table):
        cell = pa.table[(i, j)]
        brackets.append(
            {"left": names[i], "right": names[j],
             "value": [{"basis": names[k], "coeff": format_poly(cell[k])}
                       for k in sorted(cell)]})
    doc["brackets"] = brackets
    return doc


def dumps_canonical(doc) -> str:
    """Stable JSON text: insertion key order, two-space indent, trailing
    newline."""
    return json.dumps(doc, indent=2, ensure_ascii=True, allow_nan=False) + "\n"


def cochain_entries(scheme, n: int, data: dict) -> list:
    """Readable nonzero entries of a degree-n cochain in flat-index order.

    Adjoint entries carry the output basis name under `basis`; trivial
    entries omit it.
    """
    names = scheme.spec.basis_names
    out = []
    for idx in sorted(data):
        coeff = data[idx]
        if not coeff:
            continue
        k, t = scheme.unflatten(n, idx)
        entry = {"args": [names[v] for v in t]}
        if k is not None:
            entry["basis"] = names[k]
        entry["coeff"] = format_scalar(coeff)
        out.append(entry)
    return out


def cochain_from_entries(scheme, n: int, entries) -> dict:
    """Inverse of cochain_entries for round-trips in tests and tooling."""
    index = {label: i for i, label in enumerate(scheme.spec.basis_names)}
    data = {}
    for entry in entries:
        t = tuple(index[label] for label in entry["args"])
        if len(t) != n:
            raise ValueError(f"expected {n} arguments, got {len(t)}")
        if scheme.adjoint:
            if "basis" not in entry:
                raise ValueError("adjoint cochain entry needs a basis name")
            k = index[entry["basis"]]
        else:
            k = None
        flat = scheme.flat_index(k, t)
        coeff = parse_scalar(entry["coeff"])
        if coeff:
            data[flat] = coeff
    return data
