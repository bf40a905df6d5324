"""Graph and Dataset data model, attribute token canonicalization, incidence transform.

Graphs are simple and undirected. Node/edge attributes are tuples of canonical
byte tokens so that equality is exact and hashable; reals are quantized to a
declared decimal precision before rendering.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InvalidGraph, TargetMismatch

DEFAULT_PRECISION = 6

# Role tags keep original-node and edge-node attribute alphabets disjoint in
# the output of incidence_transform.
NODE_ROLE = b"v"
EDGE_ROLE = b"e"

AttrTuple = tuple[bytes, ...]


def quantize(value: float, digits: int = DEFAULT_PRECISION) -> float:
    """Round a real to `digits` decimal places (half-even, via float rounding)."""
    return round(float(value), digits)


def canonical_token(value, digits: int = DEFAULT_PRECISION) -> bytes:
    """Render a value as its canonical byte token.

    Integers render in decimal; reals are quantized to `digits` decimals and
    rendered with no trailing zeros (and never as "-0"). Byte/str input that
    parses as a number is re-canonicalized, so the rendering is idempotent.
    """
    if isinstance(value, bool):
        return b"1" if value else b"0"
    if isinstance(value, int):
        return b"%d" % value
    if isinstance(value, float):
        if not math.isfinite(value):
            raise InvalidGraph(f"non-finite attribute value {value!r}")
        if value == int(value) and abs(value) < 1e15:
            return b"%d" % int(value)
        text = f"{value:.{digits}f}".rstrip("0").rstrip(".")
        if text in ("", "-0", "-"):
            text = "0"
        return text.encode("ascii")
    if isinstance(value, bytes):
        text = value.decode("utf-8", errors="surrogateescape")
    elif isinstance(value, str):
        text = value
    else:
        raise InvalidGraph(f"cannot tokenize attribute of type {type(value).__name__}")
    raw = text.encode("utf-8", errors="surrogateescape")
    try:
        return canonical_token(int(text), digits)
    except ValueError:
        pass
    try:
        num = float(text)
    except ValueError:
        return raw
    return canonical_token(num, digits) if math.isfinite(num) else raw


def _as_attr_tuple(row, digits: int) -> AttrTuple:
    if isinstance(row, (bytes, str, int, float)):
        row = (row,)
    return tuple(canonical_token(v, digits) for v in row)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with optional canonical-token attributes.

    edges are unordered pairs stored as (u, v) with u < v, sorted
    lexicographically; node_attrs/edge_attrs, when present, align with the
    vertex range and the edge list respectively.
    """

    node_count: int
    edges: tuple[tuple[int, int], ...]
    node_attrs: tuple[AttrTuple, ...] | None = None
    edge_attrs: tuple[AttrTuple, ...] | None = None

    def __post_init__(self):
        n = self.node_count
        if n < 0:
            raise InvalidGraph("negative node_count")
        seen = set()
        prev = None
        for u, v in self.edges:
            if u == v:
                raise InvalidGraph(f"self-loop at vertex {u}")
            if not (0 <= u < v < n):
                raise InvalidGraph(f"edge ({u},{v}) out of range for n={n}")
            if (u, v) in seen:
                raise InvalidGraph(f"duplicate edge ({u},{v})")
            if prev is not None and (u, v) < prev:
                raise InvalidGraph("edge list not sorted")
            seen.add((u, v))
            prev = (u, v)
        if self.node_attrs is not None and len(self.node_attrs) != n:
            raise InvalidGraph("node_attrs length != node_count")
        if self.edge_attrs is not None and len(self.edge_attrs) != len(self.edges):
            raise InvalidGraph("edge_attrs length != edge count")

    @classmethod
    def build(cls, node_count: int, edges: Iterable[Sequence[int]],
              node_attrs=None, edge_attrs=None,
              digits: int = DEFAULT_PRECISION) -> "Graph":
        """Normalize raw input (orients pairs, sorts, tokenizes attributes)."""
        oriented = []
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u > v:
                u, v = v, u
            oriented.append((u, v))
        order = sorted(range(len(oriented)), key=lambda i: oriented[i])
        sorted_edges = tuple(oriented[i] for i in order)
        na = None
        if node_attrs is not None:
            na = tuple(_as_attr_tuple(row, digits) for row in node_attrs)
        ea = None
        if edge_attrs is not None:
            rows = list(edge_attrs)
            if len(rows) != len(oriented):
                raise InvalidGraph("edge_attrs length != edge count")
            ea = tuple(_as_attr_tuple(rows[i], digits) for i in order)
        return cls(node_count, sorted_edges, na, ea)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.node_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        """Map (u, v) with u < v to its position in `edges`."""
        return {e: i for i, e in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_index

    def node_attr(self, v: int) -> AttrTuple:
        return self.node_attrs[v] if self.node_attrs is not None else ()

    def edge_attr(self, u: int, v: int) -> AttrTuple:
        if self.edge_attrs is None:
            return ()
        if u > v:
            u, v = v, u
        return self.edge_attrs[self.edge_index[(u, v)]]

    def with_attrs(self, node_attrs=None, edge_attrs=None) -> "Graph":
        """Copy with attributes replaced (None keeps the current value)."""
        return Graph(
            self.node_count,
            self.edges,
            node_attrs if node_attrs is not None else self.node_attrs,
            edge_attrs if edge_attrs is not None else self.edge_attrs,
        )

    def stripped(self, node: bool = True, edge: bool = True) -> "Graph":
        """Copy with node and/or edge attributes removed."""
        return Graph(
            self.node_count,
            self.edges,
            None if node else self.node_attrs,
            None if edge else self.edge_attrs,
        )

    def complement(self) -> "Graph":
        edges = [
            (u, v)
            for u in range(self.node_count)
            for v in range(u + 1, self.node_count)
            if (u, v) not in self.edge_index
        ]
        return Graph(self.node_count, tuple(edges))

    def permuted(self, perm: Sequence[int]) -> "Graph":
        """Relabel vertices: vertex v becomes perm[v]; attributes follow."""
        if sorted(perm) != list(range(self.node_count)):
            raise InvalidGraph("not a permutation")
        edges = []
        for i, (u, v) in enumerate(self.edges):
            a, b = perm[u], perm[v]
            if a > b:
                a, b = b, a
            edges.append(((a, b), i))
        edges.sort()
        na = None
        if self.node_attrs is not None:
            inv = [0] * self.node_count
            for v, p in enumerate(perm):
                inv[p] = v
            na = tuple(self.node_attrs[inv[t]] for t in range(self.node_count))
        ea = None
        if self.edge_attrs is not None:
            ea = tuple(self.edge_attrs[i] for _, i in edges)
        return Graph(self.node_count, tuple(e for e, _ in edges), na, ea)


def incidence_transform(g: Graph) -> Graph:
    """Replace each edge by a midpoint node carrying the edge's attribute.

    The result has n + m nodes and 2m edges, no edge attributes. Original
    nodes keep their attributes behind a `v` role tag; edge-nodes carry the
    edge attribute behind an `e` role tag, so the two alphabets cannot
    collide. Absent edge attributes are treated as one uniform token.
    """
    n = g.node_count
    node_attrs: list[AttrTuple] = []
    for v in range(n):
        node_attrs.append((NODE_ROLE,) + g.node_attr(v))
    edges: list[tuple[int, int]] = []
    for j, (u, v) in enumerate(g.edges):
        w = n + j
        attr = g.edge_attrs[j] if g.edge_attrs is not None else ()
        node_attrs.append((EDGE_ROLE,) + attr)
        edges.append((u, w))
        edges.append((v, w))
    edges.sort()
    return Graph(n + g.edge_count, tuple(edges), tuple(node_attrs), None)


class Task(enum.Enum):
    GRAPH_CLASSIFICATION = "graph_classification"
    GRAPH_REGRESSION = "graph_regression"
    NODE_CLASSIFICATION = "node_classification"
    LINK_PREDICTION = "link_prediction"


class Metric(enum.Enum):
    ACCURACY = "accuracy"
    MACRO_F1 = "macro_f1"
    MSE = "mse"


CLASSIFICATION_TASKS = {
    Task.GRAPH_CLASSIFICATION,
    Task.NODE_CLASSIFICATION,
    Task.LINK_PREDICTION,
}


@dataclass(frozen=True)
class Dataset:
    """A corpus of graphs plus targets for one task.

    targets layout by task:
      graph_classification  -- one label token (str) per graph
      graph_regression      -- one finite float per graph
      node_classification   -- tuple of label tokens per graph, one per node
      link_prediction       -- tuple of label tokens per graph, one per edge
    """

    name: str
    task: Task
    metric: Metric
    graphs: tuple[Graph, ...]
    targets: tuple
    precision: int = DEFAULT_PRECISION

    def __post_init__(self):
        if len(self.targets) != len(self.graphs):
            raise TargetMismatch("one target row per graph required")
        for g, t in zip(self.graphs, self.targets):
            if self.task is Task.GRAPH_REGRESSION:
                if not isinstance(t, float) or not math.isfinite(t):
                    raise TargetMismatch("regression targets must be finite floats")
            elif self.task is Task.GRAPH_CLASSIFICATION:
                if not isinstance(t, str):
                    raise TargetMismatch("classification targets must be label strings")
            elif self.task is Task.NODE_CLASSIFICATION:
                if len(t) != g.node_count:
                    raise TargetMismatch("node target length != node_count")
            elif self.task is Task.LINK_PREDICTION:
                if len(t) != g.edge_count:
                    raise TargetMismatch("link target length != edge count")

    @property
    def graph_count(self) -> int:
        return len(self.graphs)

    def label_alphabet(self) -> tuple[str, ...]:
        """Sorted distinct classification labels over the whole corpus."""
        if self.task is Task.GRAPH_CLASSIFICATION:
            return tuple(sorted(set(self.targets)))
        if self.task in (Task.NODE_CLASSIFICATION, Task.LINK_PREDICTION):
            labels = set()
            for row in self.targets:
                labels.update(row)
            return tuple(sorted(labels))
        raise TargetMismatch("regression datasets have no label alphabet")
