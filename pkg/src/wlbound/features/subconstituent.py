"""Subconstituent signatures: edge-betweenness multisets of distance shells.

For each vertex v, take the subgraph induced by the vertices at distance
exactly n from v, compute its edge betweenness, sort and render the values
into one canonical token. Strongly regular graphs with equal parameters
share every distance- and path-based centrality, but their subconstituents
need not be regular, which is what makes this signature discriminating.
"""
from __future__ import annotations

from ..graphs import Graph, canonical_token
from .centrality import bfs_distances, edge_betweenness_values


def subconstituent_shell(g: Graph, v: int, n: int) -> Graph:
    """Induced subgraph on the vertices at distance exactly n from v."""
    dist = bfs_distances(g, v)
    members = [w for w in range(g.node_count) if dist[w] == n]
    index = {w: i for i, w in enumerate(members)}
    edges = [
        (index[a], index[b])
        for a, b in g.edges
        if a in index and b in index
    ]
    return Graph(len(members), tuple(sorted(edges)))


def subconstituent_signature(g: Graph, n: int,
                             quantize_digits: int = 6) -> list[bytes]:
    """Per-vertex signature token; empty shells give the empty token."""
    if n not in (1, 2):
        raise ValueError("subconstituent order must be 1 or 2")
    out = []
    for v in range(g.node_count):
        shell = subconstituent_shell(g, v, n)
        values = sorted(edge_betweenness_values(shell))
        token = b",".join(canonical_token(x, quantize_digits) for x in values)
        out.append(token)
    return out
