"""Exhaustive substructure counting per vertex or per edge.

Patterns: cliques are vertex subsets, a size-s path is a simple path with s
edges by default (vertex-count convention available as a knob), a size-s
cycle has s vertices and is counted once, not per rotation or reflection.
Backtracking enumeration with an operation budget.
"""
from __future__ import annotations

from ..errors import BudgetExceeded
from ..graphs import Graph

DEFAULT_STEP_BUDGET = 50_000_000


class _Budget:
    __slots__ = ("left",)

    def __init__(self, steps: int):
        self.left = steps

    def spend(self):
        self.left -= 1
        if self.left < 0:
            raise BudgetExceeded("substructure enumeration budget exhausted")


def _count_cliques(g: Graph, size: int, node_ct, edge_ct, budget: _Budget):
    nbsets = [set(a) for a in g.adjacency]
    eidx = g.edge_index
    clique: list[int] = []

    def record():
        for v in clique:
            node_ct[v] += 1
        for i in range(size):
            for j in range(i + 1, size):
                a, b = clique[i], clique[j]
                edge_ct[eidx[(a, b) if a < b else (b, a)]] += 1

    def extend(candidates):
        budget.spend()
        if len(clique) == size:
            record()
            return
        for v in sorted(candidates):
            clique.append(v)
            extend(candidates & nbsets[v] & set(range(v + 1, g.node_count)))
            clique.pop()

    extend(set(range(g.node_count)))


def _count_paths(g: Graph, edge_len: int, node_ct, edge_ct, budget: _Budget):
    eidx = g.edge_index
    path: list[int] = []
    on_path = [False] * g.node_count

    def record():
        for v in path:
            node_ct[v] += 1
        for a, b in zip(path, path[1:]):
            edge_ct[eidx[(a, b) if a < b else (b, a)]] += 1

    def extend():
        budget.spend()
        if len(path) == edge_len + 1:
            # endpoint orientation: count each path once
            if path[0] < path[-1]:
                record()
            return
        v = path[-1]
        for w in g.adjacency[v]:
            if not on_path[w]:
                path.append(w)
                on_path[w] = True
                extend()
                on_path[w] = False
                path.pop()

    for s in range(g.node_count):
        path = [s]
        on_path[s] = True
        extend()
        on_path[s] = False

    return


def _count_cycles(g: Graph, size: int, node_ct, edge_ct, budget: _Budget):
    eidx = g.edge_index
    cycle: list[int] = []
    on_cycle = [False] * g.node_count

    def record():
        for v in cycle:
            node_ct[v] += 1
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            edge_ct[eidx[(a, b) if a < b else (b, a)]] += 1

    def extend():
        budget.spend()
        start = cycle[0]
        v = cycle[-1]
        if len(cycle) == size:
            # close up; reflection canonicalized by cycle[1] < cycle[-1]
            if start in g.adjacency[v] and cycle[1] < cycle[-1]:
                record()
            return
        for w in g.adjacency[v]:
            if not on_cycle[w] and w > start:
                cycle.append(w)
                on_cycle[w] = True
                extend()
                on_cycle[w] = False
                cycle.pop()

    for s in range(g.node_count):
        cycle = [s]
        on_cycle[s] = True
        extend()
        on_cycle[s] = False


def substructure_counts(g: Graph, pattern: str, size: int,
                        size_unit: str = "edges",
                        step_budget: int = DEFAULT_STEP_BUDGET):
    """Per-node and per-edge containment counts of the pattern.

    size: vertices for cliques and cycles; edges for paths unless
    size_unit="vertices" requests the vertex-count reading.
    """
    if size < 1 or size > 8:
        raise BudgetExceeded(f"pattern size {size} outside 1..8")
    node_ct = [0] * g.node_count
    edge_ct = [0] * g.edge_count
    budget = _Budget(step_budget)
    if pattern == "clique":
        if size >= 2:
            _count_cliques(g, size, node_ct, edge_ct, budget)
        else:
            node_ct = [1] * g.node_count
    elif pattern == "path":
        edge_len = size if size_unit == "edges" else size - 1
        if edge_len >= 1:
            _count_paths(g, edge_len, node_ct, edge_ct, budget)
    elif pattern == "cycle":
        if size < 3:
            raise BudgetExceeded(f"cycle size {size} below 3")
        _count_cycles(g, size, node_ct, edge_ct, budget)
    else:
        raise ValueError(f"unknown pattern {pattern!r}")
    return node_ct, edge_ct
