"""Reading and writing design, partition and edge-colouring files.

All files are UTF-8 JSON objects with ``"version": 1``. The writer emits a
fixed layout (one block or clique per line, metadata keys sorted) so that a
canonical object always serialises to the same bytes. See docs/formats.md.
"""

from __future__ import annotations

import json
from pathlib import Path

from .classical import EdgeColoring
from .design import Design, Resolution
from .graphs import CliquePartition, Graph, explicit_graph, graph_from_family

__all__ = [
    "FORMAT_VERSION",
    "DesignFormatError",
    "dumps_design",
    "write_design",
    "read_design",
    "read_metadata",
    "dumps_partition",
    "write_partition",
    "read_partition",
    "write_edge_coloring",
    "read_edge_coloring",
    "document_kind",
]

FORMAT_VERSION = 1


class DesignFormatError(ValueError):
    """Parse or schema error. ``line``/``column`` are set for syntax errors,
    ``where`` (a JSON path such as ``blocks[3]``) for schema errors."""

    def __init__(self, message, *, line=None, column=None, where=None):
        loc = []
        if line is not None:
            loc.append(f"line {line}, column {column}")
        if where is not None:
            loc.append(where)
        super().__init__(f"{message} ({'; '.join(loc)})" if loc else message)
        self.line, self.column, self.where = line, column, where


def _rows(name, rows, last=False):
    if not rows:
        return [f'  "{name}": []' + ("" if last else ",")]
    out = [f'  "{name}": [']
    out += ["    " + json.dumps(list(r)) + ("," if i < len(rows) - 1 else "") for i, r in enumerate(rows)]
    out.append("  ]" + ("" if last else ","))
    return out


def _assemble(head: dict, tables: list, metadata: dict | None) -> str:
    lines = ["{"]
    for key, value in head.items():
        lines.append(f"  {json.dumps(key)}: {json.dumps(value, sort_keys=True)},")
    for i, (name, rows) in enumerate(tables):
        lines += _rows(name, rows, last=(i == len(tables) - 1 and not metadata))
    if metadata:
        lines.append(f'  "metadata": {json.dumps(metadata, sort_keys=True)}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps_design(d: Design, resolution: Resolution | None = None, metadata: dict | None = None) -> str:
    tables = [("blocks", d.blocks)]
    if resolution is not None:
        tables.append(("resolution", resolution.classes))
    return _assemble({"version": FORMAT_VERSION, "n": d.n}, tables, metadata)


def write_design(d: Design, path, resolution: Resolution | None = None, metadata: dict | None = None) -> None:
    Path(path).write_text(dumps_design(d, resolution, metadata), encoding="utf-8")


def _load(path) -> dict:
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DesignFormatError(exc.msg, line=exc.lineno, column=exc.colno) from None
    if not isinstance(doc, dict):
        raise DesignFormatError("top level must be an object", where="$")
    if doc.get("version") != FORMAT_VERSION:
        raise DesignFormatError(
            f"unsupported schema version {doc.get('version')!r}, expected {FORMAT_VERSION}", where="version"
        )
    return doc


def _int(value, where):
    if not isinstance(value, int) or isinstance(value, bool):
        raise DesignFormatError(f"expected an integer, got {value!r}", where=where)
    return value


def _int_rows(doc, key, *, distinct=True):
    rows = doc.get(key)
    if not isinstance(rows, list):
        raise DesignFormatError(f"{key!r} must be an array", where=key)
    out = []
    for i, row in enumerate(rows):
        where = f"{key}[{i}]"
        if not isinstance(row, list):
            raise DesignFormatError("expected an array of integers", where=where)
        vals = [_int(x, f"{where}[{j}]") for j, x in enumerate(row)]
        if distinct and len(set(vals)) != len(vals):
            raise DesignFormatError("duplicate point", where=where)
        out.append(vals)
    return out


def document_kind(path) -> str:
    """'design', 'partition' or 'coloring', judged by the keys present."""
    doc = _load(path)
    if "cliques" in doc:
        return "partition"
    if "classes" in doc:
        return "coloring"
    if "blocks" in doc:
        return "design"
    raise DesignFormatError("not a design, partition or colouring document", where="$")


def read_design(path) -> tuple[Design, Resolution | None]:
    doc = _load(path)
    n = _int(doc.get("n"), "n")
    blocks = _int_rows(doc, "blocks")
    for i, b in enumerate(blocks):
        if len(b) < 2:
            raise DesignFormatError("block has fewer than 2 points", where=f"blocks[{i}]")
        if min(b) < 0 or max(b) >= n:
            raise DesignFormatError(f"point outside 0..{n - 1}", where=f"blocks[{i}]")
    d = Design(n, blocks)
    if [list(b) for b in d.blocks] != [sorted(b) for b in blocks]:
        # Resolution indices refer to the stored order; refuse non-canonical
        # files that carry one instead of silently renumbering.
        if "resolution" in doc:
            raise DesignFormatError("blocks are not in canonical order", where="blocks")
    res = None
    if "resolution" in doc:
        classes = _int_rows(doc, "resolution")
        for i, cls in enumerate(classes):
            for idx in cls:
                if not 0 <= idx < len(d.blocks):
                    raise DesignFormatError(f"block index {idx} out of range", where=f"resolution[{i}]")
        res = Resolution(classes)
    return d, res


def read_metadata(path) -> dict:
    return _load(path).get("metadata", {}) or {}


def _graph_descriptor(g: Graph) -> dict:
    if g.family[0] == "explicit":
        return {"family": "explicit", "n": g.n, "edges": [list(e) for e in g.sorted_edges()]}
    names = {
        "complete_minus_clique": ("n", "m"),
        "complement_path": ("n",),
        "complement_cycle": ("n",),
        "cocktail_party": ("n",),
    }
    return {"family": g.family[0], **dict(zip(names[g.family[0]], g.family[1:]))}


def dumps_partition(g: Graph, p: CliquePartition, metadata: dict | None = None) -> str:
    return _assemble(
        {"version": FORMAT_VERSION, "graph": _graph_descriptor(g)}, [("cliques", p.cliques)], metadata
    )


def write_partition(g: Graph, p: CliquePartition, path, metadata: dict | None = None) -> None:
    Path(path).write_text(dumps_partition(g, p, metadata), encoding="utf-8")


def _graph_from_descriptor(desc) -> Graph:
    if not isinstance(desc, dict) or "family" not in desc:
        raise DesignFormatError("graph descriptor must be an object with a family", where="graph")
    fam = desc["family"]
    if fam == "explicit":
        n = _int(desc.get("n"), "graph.n")
        edges = _int_rows(desc, "edges")
        try:
            return explicit_graph(n, edges)
        except ValueError as exc:
            raise DesignFormatError(str(exc), where="graph.edges") from None
    params = {
        "complete_minus_clique": ("n", "m"),
        "complement_path": ("n",),
        "complement_cycle": ("n",),
        "cocktail_party": ("n",),
    }.get(fam)
    if params is None:
        raise DesignFormatError(f"unknown graph family {fam!r}", where="graph.family")
    args = [_int(desc.get(k), f"graph.{k}") for k in params]
    try:
        return graph_from_family(fam, *args)
    except ValueError as exc:
        raise DesignFormatError(str(exc), where="graph") from None


def read_partition(path) -> tuple[Graph, CliquePartition, dict]:
    doc = _load(path)
    g = _graph_from_descriptor(doc.get("graph"))
    cliques = _int_rows(doc, "cliques")
    return g, CliquePartition(cliques), doc.get("metadata", {}) or {}


def write_edge_coloring(c: EdgeColoring, path, metadata: dict | None = None) -> None:
    lines = ["{", f'  "version": {FORMAT_VERSION},', f'  "v": {c.v},', '  "classes": [']
    for i, cls in enumerate(c.classes):
        lines.append("    " + json.dumps([list(e) for e in cls]) + ("," if i < len(c.classes) - 1 else ""))
    lines.append("  ]" + ("," if metadata else ""))
    if metadata:
        lines.append(f'  "metadata": {json.dumps(metadata, sort_keys=True)}')
    lines.append("}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_edge_coloring(path) -> EdgeColoring:
    doc = _load(path)
    v = _int(doc.get("v"), "v")
    classes = doc.get("classes")
    if not isinstance(classes, list):
        raise DesignFormatError("'classes' must be an array", where="classes")
    out = []
    for i, cls in enumerate(classes):
        rows = _int_rows({"c": cls}, "c")
        if any(len(e) != 2 for e in rows):
            raise DesignFormatError("every edge must have 2 endpoints", where=f"classes[{i}]")
        out.append(rows)
    return EdgeColoring(v, out)
