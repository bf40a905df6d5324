"""The wlbound-v1 JSONL dataset format.

Line 1 is a header object; each following line is one graph:

    {"format":"wlbound-v1","task":...,"metric":...,"precision":...,"name":...}
    {"id":0,"n":3,"edges":[[0,1],[1,2]],"node_labels":[..],"edge_labels":[..],
     "node_feats":[[..]],"edge_feats":[[..]],"targets":...}

Labels are discrete tokens (ints or strings); feats are real vectors that
are re-quantized at the declared precision on load. save(load(x)) is the
identity on canonical files, and a second save is byte-identical.
"""
from __future__ import annotations

import json
import math
from pathlib import Path

from .errors import SchemaViolation
from .graphs import (DEFAULT_PRECISION, Dataset, Graph, InvalidGraph, Metric,
                     Task, quantize)

FORMAT = "wlbound-v1"

_HEADER_KEYS = {"format", "task", "metric", "precision", "name"}
_GRAPH_KEYS = {"id", "n", "edges", "node_labels", "edge_labels",
               "node_feats", "edge_feats", "targets"}


def _attr_rows(labels, feats, count, what, line, precision):
    if labels is not None and len(labels) != count:
        raise SchemaViolation(f"{what}_labels length != {count}", line,
                              f"{what}_labels")
    if feats is not None and len(feats) != count:
        raise SchemaViolation(f"{what}_feats length != {count}", line,
                              f"{what}_feats")
    if labels is None and feats is None:
        return None
    rows = []
    for i in range(count):
        row: list = []
        if labels is not None:
            lab = labels[i]
            row.extend(lab if isinstance(lab, list) else [lab])
        if feats is not None:
            for x in feats[i]:
                if not isinstance(x, (int, float)) or not math.isfinite(x):
                    raise SchemaViolation("non-finite feature", line,
                                          f"{what}_feats")
                row.append(quantize(float(x), precision))
        rows.append(row)
    return rows


def _parse_graph(obj: dict, line: int, task: Task, precision: int):
    unknown = set(obj) - _GRAPH_KEYS
    if unknown:
        raise SchemaViolation(f"unknown keys {sorted(unknown)}", line)
    for key in ("id", "n", "edges", "targets"):
        if key not in obj:
            raise SchemaViolation(f"missing key {key!r}", line, key)
    n = obj["n"]
    if not isinstance(n, int) or n < 0:
        raise SchemaViolation("n must be a non-negative integer", line, "n")
    edges = []
    for e in obj["edges"]:
        if not isinstance(e, list) or len(e) != 2:
            raise SchemaViolation("edge must be a pair", line, "edges")
        edges.append((int(e[0]), int(e[1])))
    node_attrs = _attr_rows(obj.get("node_labels"), obj.get("node_feats"),
                            n, "node", line, precision)
    edge_attrs = _attr_rows(obj.get("edge_labels"), obj.get("edge_feats"),
                            len(edges), "edge", line, precision)
    try:
        g = Graph.build(n, edges, node_attrs, edge_attrs, precision)
    except InvalidGraph as exc:
        raise SchemaViolation(str(exc), line, "edges")

    t = obj["targets"]
    if task is Task.GRAPH_REGRESSION:
        if not isinstance(t, (int, float)) or not math.isfinite(t):
            raise SchemaViolation("regression target must be finite", line,
                                  "targets")
        target = float(t)
    elif task is Task.GRAPH_CLASSIFICATION:
        if not isinstance(t, (str, int)):
            raise SchemaViolation("classification target must be scalar",
                                  line, "targets")
        target = str(t)
    else:
        expected = g.node_count if task is Task.NODE_CLASSIFICATION \
            else g.edge_count
        if not isinstance(t, list) or len(t) != expected:
            raise SchemaViolation(f"targets must list {expected} labels",
                                  line, "targets")
        target = tuple(str(x) for x in t)
    return g, target


def load_jsonl(path: str | Path) -> Dataset:
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines:
        raise SchemaViolation("empty file", 1)
    try:
        header = json.loads(lines[0])
    except json.JSONDecodeError as exc:
        raise SchemaViolation(f"bad JSON: {exc}", 1)
    if not isinstance(header, dict) or header.get("format") != FORMAT:
        raise SchemaViolation(f"expected format {FORMAT!r}", 1, "format")
    unknown = set(header) - _HEADER_KEYS
    if unknown:
        raise SchemaViolation(f"unknown header keys {sorted(unknown)}", 1)
    try:
        task = Task(header["task"])
        metric = Metric(header["metric"])
    except (KeyError, ValueError) as exc:
        raise SchemaViolation(f"bad task/metric: {exc}", 1)
    precision = header.get("precision", DEFAULT_PRECISION)
    if not isinstance(precision, int) or not 0 <= precision <= 15:
        raise SchemaViolation("precision must be 0..15", 1, "precision")
    name = header.get("name", "")

    graphs = []
    targets = []
    for lineno, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            continue
        try:
            obj = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise SchemaViolation(f"bad JSON: {exc}", lineno)
        g, t = _parse_graph(obj, lineno, task, precision)
        graphs.append(g)
        targets.append(t)
    return Dataset(name, task, metric, tuple(graphs), tuple(targets), precision)


def _token_to_json(token: bytes):
    text = token.decode("utf-8", errors="surrogateescape")
    try:
        return int(text)
    except ValueError:
        return text


def save_jsonl(dataset: Dataset, path: str | Path) -> None:
    """Canonical serialization: one compact object per line, fixed key order.

    All attribute tokens are emitted as node/edge labels: tokens are already
    canonical (quantization happened on the way in), so a reload round-trips
    byte-identically.
    """
    lines = [json.dumps({
        "format": FORMAT,
        "task": dataset.task.value,
        "metric": dataset.metric.value,
        "precision": dataset.precision,
        "name": dataset.name,
    }, sort_keys=False, separators=(",", ":"))]
    for i, g in enumerate(dataset.graphs):
        obj: dict = {
            "id": i,
            "n": g.node_count,
            "edges": [[u, v] for u, v in g.edges],
        }
        if g.node_attrs is not None:
            obj["node_labels"] = [
                [_token_to_json(t) for t in row] for row in g.node_attrs
            ]
        if g.edge_attrs is not None:
            obj["edge_labels"] = [
                [_token_to_json(t) for t in row] for row in g.edge_attrs
            ]
        t = dataset.targets[i]
        if dataset.task is Task.GRAPH_REGRESSION:
            obj["targets"] = t
        elif dataset.task is Task.GRAPH_CLASSIFICATION:
            obj["targets"] = _token_to_json(t.encode())
        else:
            obj["targets"] = [_token_to_json(x.encode()) for x in t]
        lines.append(json.dumps(obj, sort_keys=False, separators=(",", ":")))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
