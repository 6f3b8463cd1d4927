"""JSON file formats: complexes, certificates and reports.

Complex file::

    {"name": "grotzsch", "m": 11, "facets": [[0, 1], [0, 4], ...]}

Certificate file (``complex`` is inline or a path relative to the file)::

    {"complex": "../complexes/grotzsch.json", "field": "gf2", "l": 3,
     "vectors": ["100", "010", ...]}

GF(2) vectors are 0/1 strings whose i-th character is coordinate i;
integer vectors are lists of ints.  Reports are dumped with sorted keys so
that equal inputs give byte-identical files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .complex import SimplicialComplex, build_complex
from .gf2 import from_bits, to_bits
from .invariants import CharMapGF2, CharMapInt

FIELDS = ("gf2", "int")


class FormatError(ValueError):
    """Malformed input file; ``where`` is a line/column or a JSON path."""

    def __init__(self, message, where=None):
        super().__init__(f"{where}: {message}" if where else message)
        self.where = where


def _load_json(text, source):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(e.msg, f"{source}:{e.lineno}:{e.colno}") from None


def _read(path):
    try:
        return Path(path).read_text()
    except OSError as e:
        raise FormatError(str(e.strerror or e), str(path)) from None


# --- complexes -----------------------------------------------------------------------


@dataclass(frozen=True)
class ComplexFile:
    name: str
    complex: SimplicialComplex
    extra: dict | None = None


def complex_from_obj(obj, source="<complex>"):
    if not isinstance(obj, dict):
        raise FormatError("expected an object", source)
    for key in ("m", "facets"):
        if key not in obj:
            raise FormatError(f"missing field {key!r}", source)
    m, facets = obj["m"], obj["facets"]
    if not isinstance(m, int) or isinstance(m, bool):
        raise FormatError("'m' must be an integer", f"{source}.m")
    if not isinstance(facets, list):
        raise FormatError("'facets' must be a list", f"{source}.facets")
    for i, f in enumerate(facets):
        if not isinstance(f, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in f):
            raise FormatError("facet must be a list of integers", f"{source}.facets[{i}]")
    try:
        K = build_complex(m, facets)
    except ValueError as e:
        raise FormatError(str(e), source) from None
    extra = {k: v for k, v in obj.items() if k not in ("name", "m", "facets")}
    return ComplexFile(str(obj.get("name", "")), K, extra or None)


def complex_to_obj(K, name="", **extra):
    obj = {"name": name, "m": K.m, "facets": [list(f) for f in sorted(K.facets)]}
    obj.update(extra)
    return obj


def parse_complex(text, source="<complex>"):
    return complex_from_obj(_load_json(text, source), source)


def load_complex(path):
    return parse_complex(_read(path), str(path))


def dump_complex(K, name="", **extra):
    return _dumps(complex_to_obj(K, name, **extra), compact_lists=True)


def save_complex(path, K, name="", **extra):
    Path(path).write_text(dump_complex(K, name, **extra))


# --- certificates -------------------------------------------------------------------


@dataclass(frozen=True)
class CertificateFile:
    field: str
    l: int
    vectors: tuple
    complex: SimplicialComplex
    complex_ref: object = None

    def char_map(self):
        if self.field == "gf2":
            return CharMapGF2(self.complex, self.l, self.vectors)
        return CharMapInt(self.complex, self.l, self.vectors)


def certificate_from_obj(obj, source="<certificate>", base=None):
    if not isinstance(obj, dict):
        raise FormatError("expected an object", source)
    for key in ("complex", "field", "l", "vectors"):
        if key not in obj:
            raise FormatError(f"missing field {key!r}", source)
    field, l, raw = obj["field"], obj["l"], obj["vectors"]
    if field not in FIELDS:
        raise FormatError(f"field must be one of {FIELDS}", f"{source}.field")
    if not isinstance(l, int) or isinstance(l, bool) or l < 1:
        raise FormatError("'l' must be a positive integer", f"{source}.l")
    ref = obj["complex"]
    if isinstance(ref, str):
        path = Path(ref) if base is None else Path(base) / ref
        K = load_complex(path).complex
    else:
        K = complex_from_obj(ref, f"{source}.complex").complex
    if not isinstance(raw, list) or len(raw) != K.m:
        raise FormatError(f"expected {K.m} vectors", f"{source}.vectors")
    vectors = []
    for i, v in enumerate(raw):
        where = f"{source}.vectors[{i}]"
        if field == "gf2":
            if not isinstance(v, str) or len(v) != l or set(v) - {"0", "1"}:
                raise FormatError(f"expected a 0/1 string of length {l}", where)
            vectors.append(from_bits(v))
        else:
            ok = isinstance(v, list) and len(v) == l
            if not ok or not all(isinstance(c, int) and not isinstance(c, bool) for c in v):
                raise FormatError(f"expected a list of {l} integers", where)
            vectors.append(tuple(v))
    return CertificateFile(field, l, tuple(vectors), K, ref)


def certificate_to_obj(c, complex_ref=None, name=""):
    """Serialize a CharMapGF2 / CharMapInt; the complex inline unless ``complex_ref``."""
    if isinstance(c, CharMapGF2):
        field, vectors = "gf2", [to_bits(v, c.l) for v in c.images]
    else:
        field, vectors = "int", [list(v) for v in c.images]
    ref = complex_ref if complex_ref is not None else complex_to_obj(c.K, name)
    return {"complex": ref, "field": field, "l": c.l, "vectors": vectors}


def parse_certificate(text, source="<certificate>", base=None):
    return certificate_from_obj(_load_json(text, source), source, base)


def load_certificate(path):
    path = Path(path)
    return parse_certificate(_read(path), str(path), path.parent)


def dump_certificate(c, complex_ref=None, name=""):
    return _dumps(certificate_to_obj(c, complex_ref, name), compact_lists=True)


def save_certificate(path, c, complex_ref=None, name=""):
    Path(path).write_text(dump_certificate(c, complex_ref, name))


# --- reports -------------------------------------------------------------------------


def report_obj(report, name="", budget=None):
    body = report.as_dict() if hasattr(report, "as_dict") else dict(report)
    return {
        "tool": "bux",
        "version": __version__,
        "complex": name,
        "budget": budget if budget is not None else body.get("budget"),
        "report": body,
    }


def dump_report(report, name="", budget=None):
    return _dumps(report_obj(report, name, budget))


# --- serialization ------------------------------------------------------------------


def _dumps(obj, compact_lists=False):
    """Sorted-key JSON; with ``compact_lists`` inner lists stay on one line."""
    if not compact_lists:
        return json.dumps(obj, sort_keys=True, indent=2) + "\n"
    return _compact(obj, 0) + "\n"


def _compact(obj, depth):
    pad = "  " * (depth + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(k)}: {_compact(obj[k], depth + 1)}" for k in sorted(obj)]
        return "{\n" + ",\n".join(items) + "\n" + "  " * depth + "}"
    if isinstance(obj, list) and obj and all(isinstance(x, list) for x in obj):
        rows = [pad + json.dumps(x, separators=(", ", ": ")) for x in obj]
        return "[\n" + ",\n".join(rows) + "\n" + "  " * depth + "]"
    if isinstance(obj, list) and len(obj) > 8 and all(isinstance(x, str) for x in obj):
        rows = [pad + json.dumps(x) for x in obj]
        return "[\n" + ",\n".join(rows) + "\n" + "  " * depth + "]"
    return json.dumps(obj)
