"""Reading and writing diagram files.

A diagram file is one JSON object::

    {
      "delta": 6,
      "k": 5,
      "vertices": ["a", "b"],
      "edges": [
        {"u": "a", "v": "b", "kind": "thick", "alpha": 3, "beta": 4}
      ],
      "rotation": {
        "a": [[0, 1]],
        "b": [[0, 1]]
      }
    }

``edges`` are referenced by position. The optional ``rotation`` block lists,
for every vertex, its incident edges in cyclic order, each paired with the
edge's sign (+1 or -1, identical at both ends). ``kind`` must agree with the
labels (``thin`` iff ``alpha == beta == 1``). Unknown or duplicated fields
are errors.

:func:`dumps` writes the canonical layout shown above (two-space indent, one
edge or rotation per line, keys in the order shown, trailing newline), so
``dumps(loads(text)) == text`` for any canonical ``text``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .diagram import Diagram, DiagramEdge
from .embedding import EmbeddingScheme
from .errors import InputError

_TOP_FIELDS = ("delta", "k", "vertices", "edges", "rotation")
_EDGE_FIELDS = ("u", "v", "kind", "alpha", "beta")


@dataclass(frozen=True)
class DiagramDocument:
    diagram: Diagram
    scheme: EmbeddingScheme | None = None


def _no_duplicates(pairs):
    out = {}
    for key, value in pairs:
        if key in out:
            raise InputError(f"duplicate field {key!r}")
        out[key] = value
    return out


def _int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{what} must be an integer")
    return value


def loads(text: str) -> DiagramDocument:
    try:
        raw = json.loads(text, object_pairs_hook=_no_duplicates)
    except json.JSONDecodeError as exc:
        raise InputError(f"not a diagram file: {exc}") from None
    if not isinstance(raw, dict):
        raise InputError("diagram file must hold a single object")
    unknown = set(raw) - set(_TOP_FIELDS)
    if unknown:
        raise InputError(f"unknown fields: {sorted(unknown)}")
    missing = [f for f in _TOP_FIELDS[:4] if f not in raw]
    if missing:
        raise InputError(f"missing fields: {missing}")

    vertices = raw["vertices"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise InputError("vertices must be a list of strings")
    if len(set(vertices)) != len(vertices):
        raise InputError("vertex ids must be distinct")
    known = set(vertices)

    edges = []
    for n, rec in enumerate(raw["edges"]):
        if not isinstance(rec, dict):
            raise InputError(f"edge {n} must be an object")
        extra = set(rec) - set(_EDGE_FIELDS)
        if extra or set(rec) != set(_EDGE_FIELDS):
            raise InputError(f"edge {n} must have exactly the fields {list(_EDGE_FIELDS)}")
        u, v = rec["u"], rec["v"]
        if u not in known or v not in known:
            raise InputError(f"edge {n} references an unknown vertex")
        alpha, beta = _int(rec["alpha"], f"edge {n} alpha"), _int(rec["beta"], f"edge {n} beta")
        thin = alpha == 1 and beta == 1
        if rec["kind"] not in ("thin", "thick") or (rec["kind"] == "thin") != thin:
            raise InputError(f"edge {n}: kind {rec['kind']!r} disagrees with label {alpha}({beta})")
        edges.append(DiagramEdge(u, v, alpha, beta))

    diagram = Diagram(_int(raw["delta"], "delta"), _int(raw["k"], "k"), tuple(vertices), tuple(edges))
    scheme = None
    if "rotation" in raw:
        scheme = _parse_rotation(diagram, raw["rotation"])
    return DiagramDocument(diagram, scheme)


def _parse_rotation(diagram: Diagram, block) -> EmbeddingScheme:
    if not isinstance(block, dict) or set(block) != set(diagram.vertices):
        raise InputError("rotation must list every vertex exactly once")
    signs: dict[int, int] = {}
    rotation = {}
    for v in diagram.vertices:
        darts = []
        for entry in block[v]:
            if not (isinstance(entry, list) and len(entry) == 2):
                raise InputError(f"rotation entry at {v!r} must be [edge, sign]")
            i, s = _int(entry[0], "edge reference"), _int(entry[1], "sign")
            if not 0 <= i < len(diagram.edges):
                raise InputError(f"rotation at {v!r} references missing edge {i}")
            e = diagram.edges[i]
            if v not in (e.u, e.v):
                raise InputError(f"edge {i} is not incident with {v!r}")
            if signs.setdefault(i, s) != s:
                raise InputError(f"edge {i} has different signs at its two ends")
            darts.append((i, 0 if v == e.u else 1))
        rotation[v] = tuple(darts)
    return EmbeddingScheme(diagram.vertices, tuple((e.u, e.v) for e in diagram.edges), rotation,
                           tuple(signs.get(i, 1) for i in range(len(diagram.edges))))


def _line(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def dumps(diagram: Diagram, scheme: EmbeddingScheme | None = None) -> str:
    if scheme is not None and (tuple(scheme.vertices) != diagram.vertices
                               or scheme.edges != tuple((e.u, e.v) for e in diagram.edges)):
        raise InputError("scheme does not describe this diagram")
    out = ["{",
           f'  "delta": {diagram.delta},',
           f'  "k": {diagram.k},',
           f'  "vertices": {_line(list(diagram.vertices))},']
    records = [_line({"u": e.u, "v": e.v, "kind": e.kind, "alpha": e.alpha, "beta": e.beta})
               for e in diagram.edges]
    tail = "," if scheme is not None else ""
    if records:
        out.append('  "edges": [')
        out.extend(f"    {r}," for r in records[:-1])
        out.append(f"    {records[-1]}")
        out.append(f"  ]{tail}")
    else:
        out.append(f'  "edges": []{tail}')
    if scheme is not None:
        rows = [f"    {_line(v)}: {_line([[i, scheme.signs[i]] for i, _ in scheme.rotation[v]])}"
                for v in diagram.vertices]
        out.append('  "rotation": {')
        out.append(",\n".join(rows))
        out.append("  }")
    out.append("}")
    return "\n".join(out) + "\n"


def load(path) -> DiagramDocument:
    return loads(Path(path).read_text(encoding="utf-8"))


def dump(path, diagram: Diagram, scheme: EmbeddingScheme | None = None) -> None:
    Path(path).write_text(dumps(diagram, scheme), encoding="utf-8")
