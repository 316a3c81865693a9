"""Text formats: edge lists, degree CSV, stage tables, generic records.

* Edge list: one ``u<TAB>v`` per line, 1-indexed, u < v, sorted.
* Degree CSV: header ``rank,degree``.
* Stage layer CSV: ``stage,mode,depth,layer,node_lo,node_hi,degree``.
* Stage summary CSV: ``stage,mode,depth,nodes,total_connections``.

Floats are written with 10 significant digits.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, Sequence

from .graph_realization import SimpleGraph


class FormatError(Exception):
    """Malformed input file."""


def fmt(x) -> str:
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        if x == int(x) and abs(x) < 1e15:
            return str(int(x))
        return format(x, ".10g")
    return str(x)


def _json_default(x):
    raise TypeError(f"not serializable: {x!r}")


def _round_floats(obj):
    if isinstance(obj, float):
        return float(format(obj, ".10g"))
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def json_line(record: dict) -> str:
    return json.dumps(_round_floats(record), sort_keys=False, default=_json_default)


def csv_text(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(v) for v in row])
    return buf.getvalue()


def table_text(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    cells = [list(header)] + [[fmt(v) for v in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "".join(
        "  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in cells)


def render(header, rows, style: str) -> str:
    rows = [list(r) for r in rows]
    if style == "csv":
        return csv_text(header, rows)
    if style == "table":
        return table_text(header, rows)
    if style == "json":
        return "".join(json_line(dict(zip(header, r))) + "\n" for r in rows)
    raise ValueError(f"unknown format {style!r}")


def write_edge_list(graph: SimpleGraph) -> str:
    return "".join(f"{u}\t{v}\n" for u, v in graph.edges)


def read_edge_list(text: str) -> SimpleGraph:
    """Parse an edge list; the node count is the largest id seen."""
    edges = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u<TAB>v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: node ids must be integers") from None
        if u < 1 or v < 1:
            raise FormatError(f"line {lineno}: node ids are 1-indexed")
        edges.append((u, v))
    if not edges:
        raise FormatError("edge list is empty")
    n = max(max(e) for e in edges)
    try:
        return SimpleGraph(n, tuple(edges))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def write_degree_csv(degrees: Sequence[float]) -> str:
    return csv_text(["rank", "degree"], ((k, d) for k, d in enumerate(degrees, start=1)))


def read_degree_csv(text: str) -> list[float]:
    """Degrees ordered by the ``rank`` column."""
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None or not {"rank", "degree"} <= set(reader.fieldnames):
        raise FormatError("degree CSV needs a 'rank,degree' header")
    rows = []
    for row in reader:
        try:
            rows.append((int(row["rank"]), float(row["degree"])))
        except (TypeError, ValueError):
            raise FormatError(f"bad degree row {row!r}") from None
    if not rows:
        raise FormatError("degree CSV has no rows")
    rows.sort()
    return [d for _, d in rows]


def stage_summary_rows(stages):
    return [(s.index, s.mode.r, s.depth, s.node_count, s.total_connections) for s in stages]


STAGE_SUMMARY_HEADER = ("stage", "mode", "depth", "nodes", "total_connections")
STAGE_LAYER_HEADER = ("stage", "mode", "depth", "layer", "node_lo", "node_hi", "degree")


def stage_layer_rows(stages):
    return [(s.index, s.mode.r, s.depth, layer.level, layer.node_lo, layer.node_hi, layer.degree)
            for s in stages for layer in s.layers]
