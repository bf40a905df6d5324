"""Loader for the TU graph-classification raw text format.

A dataset directory DS contains DS_A.txt (1-indexed arcs, both directions
listed), DS_graph_indicator.txt, DS_graph_labels.txt and optionally
DS_node_labels.txt / DS_edge_labels.txt / DS_node_attributes.txt. Arcs are
deduplicated into undirected edges, labels become canonical byte tokens,
vertices are reindexed per graph, and real attributes are quantized at the
dataset precision.
"""
from __future__ import annotations

from pathlib import Path

from .errors import IndexOutOfRange, MissingFile, RaggedAttributeRow
from .graphs import DEFAULT_PRECISION, Dataset, Graph, Metric, Task


def _dataset_prefix(directory: Path) -> str:
    hits = sorted(directory.glob("*_A.txt"))
    if not hits:
        raise MissingFile(f"no *_A.txt in {directory}")
    return hits[0].name[: -len("_A.txt")]


def _read_lines(path: Path) -> list[str]:
    if not path.exists():
        raise MissingFile(str(path))
    return [ln for ln in path.read_text().splitlines() if ln.strip()]


def load_tu_dataset(directory: str | Path,
                    precision: int = DEFAULT_PRECISION) -> Dataset:
    directory = Path(directory)
    if not directory.is_dir():
        raise MissingFile(f"dataset directory not found: {directory}")
    prefix = _dataset_prefix(directory)

    def path(suffix: str) -> Path:
        return directory / f"{prefix}_{suffix}.txt"

    indicator = [int(x) for x in _read_lines(path("graph_indicator"))]
    node_total = len(indicator)
    graph_labels = _read_lines(path("graph_labels"))
    graph_count = len(graph_labels)
    if any(not 1 <= gi <= graph_count for gi in indicator):
        raise IndexOutOfRange(f"{path('graph_indicator')}: graph id out of range")

    # per-graph 0-based vertex reindexing, preserving global order
    local_index = [0] * node_total
    node_of_graph: list[list[int]] = [[] for _ in range(graph_count)]
    for global_id, gi in enumerate(indicator):
        local_index[global_id] = len(node_of_graph[gi - 1])
        node_of_graph[gi - 1].append(global_id)

    arcs = []
    for lineno, line in enumerate(_read_lines(path("A")), start=1):
        parts = line.replace(",", " ").split()
        if len(parts) != 2:
            raise RaggedAttributeRow(f"{path('A')}:{lineno}: expected two indices")
        u, v = int(parts[0]), int(parts[1])
        if not (1 <= u <= node_total and 1 <= v <= node_total):
            raise IndexOutOfRange(f"{path('A')}:{lineno}: node id out of range")
        arcs.append((u - 1, v - 1, lineno))

    edge_label_lines = None
    if path("edge_labels").exists():
        edge_label_lines = _read_lines(path("edge_labels"))
        if len(edge_label_lines) != len(arcs):
            raise RaggedAttributeRow(
                f"{path('edge_labels')}: {len(edge_label_lines)} rows for "
                f"{len(arcs)} arcs"
            )

    node_rows: list[list] = [[] for _ in range(node_total)]
    if path("node_labels").exists():
        lines = _read_lines(path("node_labels"))
        if len(lines) != node_total:
            raise RaggedAttributeRow(f"{path('node_labels')}: wrong row count")
        for v, ln in enumerate(lines):
            node_rows[v].extend(int(x) for x in ln.replace(",", " ").split())
    if path("node_attributes").exists():
        lines = _read_lines(path("node_attributes"))
        if len(lines) != node_total:
            raise RaggedAttributeRow(f"{path('node_attributes')}: wrong row count")
        width = None
        for v, ln in enumerate(lines):
            vals = [float(x) for x in ln.replace(",", " ").split()]
            if width is None:
                width = len(vals)
            elif len(vals) != width:
                raise RaggedAttributeRow(
                    f"{path('node_attributes')}:{v + 1}: ragged row"
                )
            node_rows[v].extend(vals)
    has_node_attrs = any(node_rows)

    # deduplicate arcs into undirected edges; first occurrence wins the label
    per_graph_edges: list[dict[tuple[int, int], int]] = [
        {} for _ in range(graph_count)
    ]
    for idx, (u, v, lineno) in enumerate(arcs):
        if u == v:
            raise IndexOutOfRange(f"{path('A')}:{lineno}: self-loop")
        gu, gv = indicator[u] - 1, indicator[v] - 1
        if gu != gv:
            raise IndexOutOfRange(
                f"{path('A')}:{lineno}: edge crosses graphs {gu + 1}/{gv + 1}"
            )
        a, b = local_index[u], local_index[v]
        if a > b:
            a, b = b, a
        per_graph_edges[gu].setdefault((a, b), idx)

    graphs = []
    for gi in range(graph_count):
        nodes = node_of_graph[gi]
        edge_map = per_graph_edges[gi]
        edges = sorted(edge_map)
        node_attrs = None
        if has_node_attrs:
            node_attrs = [node_rows[g] for g in nodes]
        edge_attrs = None
        if edge_label_lines is not None:
            edge_attrs = [
                [int(x) for x in
                 edge_label_lines[edge_map[e]].replace(",", " ").split()]
                for e in edges
            ]
        graphs.append(
            Graph.build(len(nodes), edges, node_attrs, edge_attrs, precision)
        )

    targets = tuple(str(int(x)) for x in graph_labels)
    return Dataset(
        name=prefix,
        task=Task.GRAPH_CLASSIFICATION,
        metric=Metric.ACCURACY,
        graphs=tuple(graphs),
        targets=targets,
        precision=precision,
    )
