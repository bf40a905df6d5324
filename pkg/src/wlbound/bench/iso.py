"""Exact isomorphism testing via individualization-refinement backtracking.

Color refinement alone cannot decide isomorphism (regular graphs stall), so
the canonical form search individualizes one vertex of the first smallest
non-singleton cell, re-refines, and recurses; the canonical form is the
minimum leaf string. Automorphisms discovered from equal leaves prune
sibling branches through orbit representatives, which keeps highly
symmetric graphs (complete graphs, SRGs) tractable.
"""
from __future__ import annotations

from ..graphs import Graph


def _initial_colors(g: Graph) -> tuple[list[int], int]:
    """Attribute-induced initial coloring, renumbered by sorted attr key."""
    keys = [g.node_attr(v) for v in range(g.node_count)]
    mapping = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [mapping[k] for k in keys], len(mapping)


def _edge_token_ids(g: Graph):
    """Per-vertex incident edge token ids aligned with adjacency, or None."""
    if g.edge_attrs is None:
        return None, 0
    mapping = {k: i for i, k in enumerate(sorted(set(g.edge_attrs)))}
    etok = []
    for v in range(g.node_count):
        etok.append([mapping[g.edge_attr(v, w)] for w in g.adjacency[v]])
    return etok, len(mapping)


def _refine_colors(adj, etok, colors):
    """Refine to the coarsest stable partition; class ids follow sorted keys."""
    n = len(colors)
    while True:
        keys = []
        for v in range(n):
            if etok is None:
                nb = sorted(colors[w] for w in adj[v])
            else:
                nb = sorted(zip(etok[v], (colors[w] for w in adj[v])))
            keys.append((colors[v], tuple(nb)))
        mapping = {}
        for k in sorted(set(keys)):
            mapping[k] = len(mapping)
        new = [mapping[k] for k in keys]
        if new == colors:
            return colors
        colors = new


def _individualize(colors, v):
    keys = [(c, 0 if i == v else 1) for i, c in enumerate(colors)]
    keys[v] = (colors[v], 0)
    mapping = {}
    for k in sorted(set(keys)):
        mapping[k] = len(mapping)
    return [mapping[k] for k in keys]


def _target_cell(colors) -> list[int]:
    """Vertices of the first smallest non-singleton cell (empty if discrete)."""
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    best: list[int] = []
    for c in sorted(cells):
        members = cells[c]
        if len(members) > 1 and (not best or len(members) < len(best)):
            best = members
    return best


class _CanonSearch:
    def __init__(self, g: Graph):
        self.n = g.node_count
        self.adj = g.adjacency
        init, _ = _initial_colors(g)
        self.init = init
        self.etok, netok = _edge_token_ids(g)
        if netok > 254:
            raise ValueError("too many distinct edge tokens for canonical search")
        self.edge_cell: dict[tuple[int, int], int] = {}
        if self.etok is not None:
            for u, v in g.edges:
                self.edge_cell[(u, v)] = self.etok[u][self.adj[u].index(v)]
        else:
            self.edge_cell = {e: 0 for e in g.edges}
        self.best: bytes | None = None
        self.best_order: list[int] | None = None
        self.generators: list[list[int]] = []

    def _leaf(self, colors) -> tuple[bytes, list[int]]:
        order = sorted(range(self.n), key=colors.__getitem__)
        out = bytearray()
        for v in order:
            out += self.init[v].to_bytes(2, "big")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                u, w = order[i], order[j]
                if u > w:
                    u, w = w, u
                cell = self.edge_cell.get((u, w))
                out.append(0 if cell is None else cell + 1)
        return bytes(out), order

    def _orbit_reps(self, cell, prefix) -> list[int]:
        usable = [
            gen for gen in self.generators if all(gen[p] == p for p in prefix)
        ]
        if not usable:
            return cell
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gen in usable:
            for v in range(self.n):
                a, b = find(v), find(gen[v])
                if a != b:
                    parent[a] = b
        reps = []
        seen = set()
        for v in cell:
            r = find(v)
            if r not in seen:
                seen.add(r)
                reps.append(v)
        return reps

    def run(self) -> bytes:
        self._rec(_refine_colors(self.adj, self.etok, self.init), ())
        assert self.best is not None
        return self.best

    def _rec(self, colors, prefix):
        cell = _target_cell(colors)
        if not cell:
            leaf, order = self._leaf(colors)
            if self.best is None or leaf < self.best:
                self.best, self.best_order = leaf, order
            elif leaf == self.best and order != self.best_order:
                gen = [0] * self.n
                for a, b in zip(self.best_order, order):
                    gen[a] = b
                self.generators.append(gen)
            return
        for v in self._orbit_reps(cell, prefix):
            child = _refine_colors(self.adj, self.etok, _individualize(colors, v))
            self._rec(child, prefix + (v,))


def canonical_form(g: Graph) -> bytes:
    """Canonical byte certificate: equal byte strings iff isomorphic graphs.

    Respects node and edge attribute tokens (attribute-preserving
    isomorphism); attribute-free graphs compare purely structurally.
    """
    if g.node_count == 0:
        return b""
    return _CanonSearch(g).run()


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact attribute-preserving isomorphism verdict (sound and complete)."""
    if g1.node_count != g2.node_count or g1.edge_count != g2.edge_count:
        return False
    if sorted(map(len, g1.adjacency)) != sorted(map(len, g2.adjacency)):
        return False
    if (g1.node_attrs is None) != (g2.node_attrs is None):
        return False
    if g1.node_attrs is not None and sorted(g1.node_attrs) != sorted(g2.node_attrs):
        return False
    if (g1.edge_attrs is None) != (g2.edge_attrs is None):
        return False
    if g1.edge_attrs is not None and sorted(g1.edge_attrs) != sorted(g2.edge_attrs):
        return False
    return canonical_form(g1) == canonical_form(g2)
