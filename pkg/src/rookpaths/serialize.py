"""Deterministic JSON, DOT, and edge-text serialization.

The JSON layout is fixed: top-level keys graph, group, base, blocks,
report in that order, edge arrays sorted canonically, vertices written
as [row, col] pairs on grids and bare integer labels on complete
graphs.  Identical inputs always serialize to identical bytes, so
outputs can be diffed and used as golden files.

Parsing is strict and reports the JSON path of the first offending
element, e.g. "$.blocks[2].edges[0]".
"""

from __future__ import annotations

import json
from typing import Iterable, NamedTuple, Sequence

from .decompose import CompleteGraph, Decomposition, LabelEdge, Subgraph, VerificationReport
from .grid import GridEdge, GridGraph, GridVertex, Step, make_grid
from .groups import (
    DIAGONAL_SHIFT,
    EXPLICIT,
    ROW_SHIFT,
    FiniteGroup,
    Permutation,
    diagonal_shift,
    generate_group,
    row_shift,
)
from .staircase import Walk, walk_from_array

__all__ = [
    "PALETTE",
    "ParsedDecomposition",
    "SchemaError",
    "blocks_to_text",
    "decomposition_to_json",
    "decomposition_to_json_dict",
    "dot_for_blocks",
    "dumps",
    "edges_to_text",
    "export_dot",
    "orbit_id_str",
    "parse_decomposition",
    "permutation_to_json",
    "report_to_json_dict",
    "step_array_to_json",
    "walk_to_json",
]

# 12 distinguishable edge colors, cycled by block index
PALETTE = (
    "#a6cee3", "#1f78b4", "#b2df8a", "#33a02c",
    "#fb9a99", "#e31a1c", "#fdbf6f", "#ff7f00",
    "#cab2d6", "#6a3d9a", "#b15928", "#ffff99",
)


class SchemaError(ValueError):
    """Malformed serialized input; ``path`` points at the offending element."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.reason = message


def dumps(obj) -> str:
    """Compact deterministic JSON: fixed key order, no whitespace variance."""
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=True)


def _vertex_json(v):
    if isinstance(v, GridVertex):
        return [v.row, v.col]
    return v


def _edge_json(e):
    if isinstance(e, GridEdge):
        return [[e.u.row, e.u.col], [e.v.row, e.v.col]]
    return [e.u, e.v]


def _step_json(s: Step):
    return [s.drow, s.dcol]


def step_array_to_json(steps: Sequence[Step], n: int) -> dict:
    return {"n": n, "steps": [_step_json(s) for s in steps]}


def walk_to_json(walk: Walk) -> dict:
    out: dict = {"n": walk.n}
    if walk.m != walk.n:
        out["m"] = walk.m
    out["steps"] = [_step_json(s) for s in walk.steps]
    out["start"] = _vertex_json(walk.start)
    out["vertices"] = [_vertex_json(v) for v in walk.vertices]
    return out


def permutation_to_json(perm: Permutation) -> dict:
    if perm.kind in (ROW_SHIFT, DIAGONAL_SHIFT):
        return {"kind": perm.kind, "n": perm.n, "m": perm.m}
    pairs = sorted(perm.mapping().items())
    return {"kind": EXPLICIT, "map": [[_vertex_json(v), _vertex_json(w)] for v, w in pairs]}


def _graph_json(graph) -> dict:
    if isinstance(graph, GridGraph):
        return {"kind": "grid", "n": graph.n, "m": graph.m}
    return {"kind": "complete", "n": graph.n}


def _group_json(group: FiniteGroup) -> dict:
    kind = group.generator_kind
    if kind in (ROW_SHIFT, DIAGONAL_SHIFT):
        return {"kind": kind, "order": group.order}
    return {
        "kind": EXPLICIT,
        "order": group.order,
        "generators": [permutation_to_json(g) for g in group.generators],
    }


def _base_json(base: Subgraph) -> dict:
    if base.walk is not None:
        w = base.walk
        return {"start": _vertex_json(w.start), "steps": [_step_json(s) for s in w.steps]}
    return {"edges": [_edge_json(e) for e in base.edges]}


def _jsonable(value):
    """Best-effort conversion of witness payloads to plain JSON values."""
    if isinstance(value, (GridEdge, LabelEdge)):
        return _edge_json(value)
    if isinstance(value, GridVertex):
        return _vertex_json(value)
    if isinstance(value, Step):
        return _step_json(value)
    if isinstance(value, Permutation):
        return permutation_to_json(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value, key=str) if isinstance(value, (set, frozenset)) else value
        return [_jsonable(v) for v in items]
    return value


def report_to_json_dict(report: VerificationReport) -> dict:
    out: dict = dict(report.flags())
    if report.witnesses:
        out["witnesses"] = _jsonable(report.witnesses)
    return out


def decomposition_to_json_dict(graph, dec: Decomposition, report: VerificationReport) -> dict:
    return {
        "graph": _graph_json(graph),
        "group": _group_json(dec.group),
        "base": _base_json(dec.base),
        "blocks": [{"edges": [_edge_json(e) for e in b.edges]} for b in dec.blocks],
        "report": report_to_json_dict(report),
    }


def decomposition_to_json(graph, dec: Decomposition, report: VerificationReport) -> str:
    return dumps(decomposition_to_json_dict(graph, dec, report))


def orbit_id_str(oid: tuple) -> str:
    tag = oid[0]
    if tag in ("H", "V"):
        return f"{tag}({oid[1]},{oid[2]})"
    return f"O({oid[1]})"


# ---------------------------------------------------------------- parsing


def _expect(cond: bool, path: str, message: str) -> None:
    if not cond:
        raise SchemaError(path, message)


def _get(obj: dict, key: str, path: str):
    _expect(isinstance(obj, dict), path, "expected an object")
    _expect(key in obj, path, f"missing key {key!r}")
    return obj[key]


def _int_at(value, path: str) -> int:
    _expect(isinstance(value, int) and not isinstance(value, bool), path, "expected an integer")
    return value


def _parse_graph(obj, path: str):
    kind = _get(obj, "kind", path)
    if kind == "grid":
        n = _int_at(_get(obj, "n", path), f"{path}.n")
        m = _int_at(_get(obj, "m", path), f"{path}.m")
        _expect(n >= 2 and m >= 2, path, f"grid needs n, m >= 2, got {n} x {m}")
        return make_grid(n, m)
    if kind == "complete":
        n = _int_at(_get(obj, "n", path), f"{path}.n")
        _expect(n >= 1, f"{path}.n", f"complete graph needs n >= 1, got {n}")
        return CompleteGraph(n)
    raise SchemaError(f"{path}.kind", f"unknown graph kind {kind!r}")


def _parse_vertex(graph, value, path: str):
    if isinstance(graph, GridGraph):
        _expect(
            isinstance(value, list) and len(value) == 2, path, "expected a [row, col] pair"
        )
        row = _int_at(value[0], f"{path}[0]")
        col = _int_at(value[1], f"{path}[1]")
        v = GridVertex(row, col)
        _expect(graph.contains(v), path, f"vertex {v} outside {graph}")
        return v
    label = _int_at(value, path)
    _expect(graph.contains(label), path, f"vertex {label} outside {graph}")
    return label


def _parse_edge(graph, value, path: str):
    _expect(isinstance(value, list) and len(value) == 2, path, "expected an endpoint pair")
    u = _parse_vertex(graph, value[0], f"{path}[0]")
    v = _parse_vertex(graph, value[1], f"{path}[1]")
    try:
        return graph.edge(u, v)
    except ValueError as err:
        raise SchemaError(path, str(err)) from None


def _parse_step(value, path: str) -> Step:
    _expect(isinstance(value, list) and len(value) == 2, path, "expected a [drow, dcol] pair")
    dr = _int_at(value[0], f"{path}[0]")
    dc = _int_at(value[1], f"{path}[1]")
    try:
        return Step(dr, dc)
    except ValueError as err:
        raise SchemaError(path, str(err)) from None


def _parse_permutation(graph, obj, path: str) -> Permutation:
    kind = _get(obj, "kind", path)
    if kind == ROW_SHIFT:
        _expect(isinstance(graph, GridGraph), path, "row_shift needs a grid graph")
        return row_shift(graph.n, graph.m)
    if kind == DIAGONAL_SHIFT:
        _expect(isinstance(graph, GridGraph), path, "diagonal_shift needs a grid graph")
        _expect(graph.n == graph.m, path, "diagonal_shift needs a square grid")
        return diagonal_shift(graph.n)
    if kind == EXPLICIT:
        entries = _get(obj, "map", path)
        _expect(isinstance(entries, list), f"{path}.map", "expected a list of pairs")
        mapping = {}
        for i, pair in enumerate(entries):
            ppath = f"{path}.map[{i}]"
            _expect(isinstance(pair, list) and len(pair) == 2, ppath, "expected a [vertex, image] pair")
            v = _parse_vertex(graph, pair[0], f"{ppath}[0]")
            w = _parse_vertex(graph, pair[1], f"{ppath}[1]")
            _expect(v not in mapping, ppath, f"vertex {v} mapped twice")
            mapping[v] = w
        _expect(
            set(mapping) == set(graph.vertices()),
            f"{path}.map",
            "map does not cover the vertex set exactly",
        )
        try:
            return Permutation(mapping)
        except ValueError as err:
            raise SchemaError(f"{path}.map", str(err)) from None
    raise SchemaError(f"{path}.kind", f"unknown permutation kind {kind!r}")


def _parse_group(graph, obj, path: str) -> FiniteGroup:
    kind = _get(obj, "kind", path)
    order = _int_at(_get(obj, "order", path), f"{path}.order")
    _expect(order >= 1, f"{path}.order", "group order must be positive")
    if kind == ROW_SHIFT:
        _expect(isinstance(graph, GridGraph), path, "row_shift needs a grid graph")
        return generate_group([row_shift(graph.n, graph.m)])
    if kind == DIAGONAL_SHIFT:
        _expect(isinstance(graph, GridGraph), path, "diagonal_shift needs a grid graph")
        _expect(graph.n == graph.m, path, "diagonal_shift needs a square grid")
        return generate_group([diagonal_shift(graph.n)])
    if kind == EXPLICIT:
        gens = _get(obj, "generators", path)
        _expect(isinstance(gens, list) and gens, f"{path}.generators", "expected a non-empty list")
        parsed = [
            _parse_permutation(graph, g, f"{path}.generators[{i}]") for i, g in enumerate(gens)
        ]
        return generate_group(parsed)
    raise SchemaError(f"{path}.kind", f"unknown group kind {kind!r}")


def _parse_base(graph, obj, path: str) -> Subgraph:
    _expect(isinstance(obj, dict), path, "expected an object")
    if "start" in obj or "steps" in obj:
        _expect(
            isinstance(graph, GridGraph), path, "walk bases are only defined on grid graphs"
        )
        start = _parse_vertex(graph, _get(obj, "start", path), f"{path}.start")
        raw = _get(obj, "steps", path)
        _expect(isinstance(raw, list) and raw, f"{path}.steps", "expected a non-empty list")
        steps = [_parse_step(s, f"{path}.steps[{i}]") for i, s in enumerate(raw)]
        try:
            walk = walk_from_array(start, steps, graph.n, graph.m)
        except ValueError as err:
            raise SchemaError(f"{path}.steps", str(err)) from None
        return Subgraph(tuple(sorted(walk.edges())), walk=walk)
    if "edges" in obj:
        return _parse_subgraph_edges(graph, obj["edges"], f"{path}.edges")
    raise SchemaError(path, "base needs either start+steps or edges")


def _parse_subgraph_edges(graph, value, path: str) -> Subgraph:
    _expect(isinstance(value, list) and value, path, "expected a non-empty edge list")
    edges = [_parse_edge(graph, e, f"{path}[{i}]") for i, e in enumerate(value)]
    try:
        return Subgraph(tuple(edges))
    except ValueError as err:
        raise SchemaError(path, str(err)) from None


def _parse_report_stub(obj, path: str) -> None:
    """The embedded report is never trusted, but it must be well-formed."""
    _expect(isinstance(obj, dict), path, "expected an object")
    for flag in VerificationReport.FLAGS:
        value = _get(obj, flag, path)
        _expect(isinstance(value, bool), f"{path}.{flag}", "expected a boolean")


class ParsedDecomposition(NamedTuple):
    graph: object
    group: FiniteGroup
    decomposition: Decomposition


def parse_decomposition(data) -> ParsedDecomposition:
    """Rebuild (graph, group, decomposition) from serialized form.

    ``data`` is a JSON string or an already-decoded object.  The
    embedded report is type-checked but otherwise ignored; callers are
    expected to re-verify.  Explicit generators are checked to be
    bijections here; whether they are automorphisms is a mathematical
    question left to the caller.
    """
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as err:
            raise SchemaError("$", f"invalid JSON: {err}") from None
    _expect(isinstance(data, dict), "$", "expected a top-level object")
    graph = _parse_graph(_get(data, "graph", "$"), "$.graph")
    group = _parse_group(graph, _get(data, "group", "$"), "$.group")
    base = _parse_base(graph, _get(data, "base", "$"), "$.base")
    raw_blocks = _get(data, "blocks", "$")
    _expect(isinstance(raw_blocks, list) and raw_blocks, "$.blocks", "expected a non-empty list")
    blocks = []
    for i, entry in enumerate(raw_blocks):
        bpath = f"$.blocks[{i}]"
        blocks.append(_parse_subgraph_edges(graph, _get(entry, "edges", bpath), f"{bpath}.edges"))
    _parse_report_stub(_get(data, "report", "$"), "$.report")
    dec = Decomposition(tuple(blocks), group, base)
    return ParsedDecomposition(graph, group, dec)


# ---------------------------------------------------------------- text formats


def _vertex_dot_id(v) -> str:
    if isinstance(v, GridVertex):
        return f"{v.row},{v.col}"
    return str(v)


def edges_to_text(edges: Iterable) -> str:
    """One edge per line, canonical endpoint first: (a,b)-(c,d) or u-v."""
    return "".join(f"{e}\n" for e in edges)


def blocks_to_text(blocks: Sequence[Subgraph]) -> str:
    """Edge text for several blocks, with a comment header per block."""
    chunks = []
    for i, b in enumerate(blocks):
        chunks.append(f"# block {i}\n")
        chunks.append(edges_to_text(b.edges))
    return "".join(chunks)


def dot_for_blocks(blocks: Sequence[Subgraph], name: str = "decomposition") -> str:
    vertices = sorted({v for b in blocks for v in b.vertex_set()})
    lines = [f"graph {name} {{", "  node [shape=circle fontsize=10];"]
    for v in vertices:
        lines.append(f'  "{_vertex_dot_id(v)}";')
    for i, b in enumerate(blocks):
        color = PALETTE[i % len(PALETTE)]
        for e in b.edges:
            lines.append(
                f'  "{_vertex_dot_id(e.u)}" -- "{_vertex_dot_id(e.v)}" [color="{color}"];'
            )
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(dec: Decomposition) -> str:
    """GraphViz text with one fixed palette color per block."""
    return dot_for_blocks(dec.blocks)
