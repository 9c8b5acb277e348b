"""JSON documents exchanged by the command line tool.

Schema::

    {"kind": "vector" | "matrix" | "generators" | "configuration",
     "carrier": "maxtimes" | "minplus",
     "entries": [...]}

``vector`` entries are a flat list, the other kinds a rectangular list of
rows.  Min-plus infinity is the string ``"inf"``.  On load every payload is
converted to max-times values; ``dumps`` writes floats with 17 significant
digits so that re-parsing reproduces them bit for bit.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

from .scalar import INF, to_maxtimes, to_minplus

KINDS = ("vector", "matrix", "generators", "configuration")
CARRIERS = ("maxtimes", "minplus")


class DocumentError(ValueError):
    pass


@dataclass(frozen=True)
class Document:
    kind: str
    carrier: str
    entries: tuple  # max-times floats: tuple, or tuple of row tuples
    extra: tuple = ()  # additional top-level (key, value) pairs


def _number(x, carrier: str) -> float:
    if carrier == "minplus" and x == "inf":
        return 0.0
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise DocumentError(f"expected a number, got {x!r}")
    x = float(x)
    if not math.isfinite(x):
        raise DocumentError(f"non-finite number {x!r}")
    if carrier == "maxtimes":
        if x < 0:
            raise DocumentError(f"max-times entries must be >= 0, got {x!r}")
        return x
    return to_maxtimes(x)


def _row(values, carrier: str) -> tuple[float, ...]:
    if not isinstance(values, list) or not values:
        raise DocumentError(f"expected a nonempty list, got {values!r}")
    return tuple(_number(x, carrier) for x in values)


def parse_document(data, kinds=KINDS) -> Document:
    if not isinstance(data, dict):
        raise DocumentError("document must be a JSON object")
    kind = data.get("kind")
    if kind not in KINDS:
        raise DocumentError(f"unknown kind {kind!r}")
    if kind not in kinds:
        raise DocumentError(f"expected kind {' or '.join(kinds)}, got {kind!r}")
    carrier = data.get("carrier", "maxtimes")
    if carrier not in CARRIERS:
        raise DocumentError(f"unknown carrier {carrier!r}")
    if "entries" not in data:
        raise DocumentError("missing 'entries'")
    raw = data["entries"]
    if kind == "vector":
        entries = _row(raw, carrier)
    else:
        if not isinstance(raw, list) or not raw:
            raise DocumentError("entries must be a nonempty list of rows")
        entries = tuple(_row(r, carrier) for r in raw)
        if len({len(r) for r in entries}) != 1:
            raise DocumentError("rows have different lengths")
    extra = tuple((k, v) for k, v in data.items() if k not in ("kind", "carrier", "entries"))
    return Document(kind, carrier, entries, extra)


def load_document(path, kinds=KINDS) -> Document:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    try:
        return parse_document(data, kinds)
    except DocumentError as exc:
        raise DocumentError(f"{path}: {exc}") from None


def encode_entry(x: float, carrier: str):
    """Max-times value as it appears in a document of the given carrier."""
    if carrier == "maxtimes":
        return float(x)
    t = to_minplus(float(x))
    return "inf" if t == INF else t


def document_payload(kind: str, entries, carrier: str = "maxtimes", **extra) -> dict:
    if kind == "vector":
        body = [encode_entry(x, carrier) for x in entries]
    else:
        body = [[encode_entry(x, carrier) for x in row] for row in entries]
    return {"kind": kind, "carrier": carrier, **extra, "entries": body}


def _format_float(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        raise ValueError(f"cannot encode {x!r} as a JSON number")
    text = "%.17g" % x
    return "0" if text == "-0" else text


def dumps(obj) -> str:
    """Deterministic JSON with 17-significant-digit floats, key order kept."""
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _format_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot encode {type(obj).__name__}")
