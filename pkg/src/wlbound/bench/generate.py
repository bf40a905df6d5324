"""Isomorph-free generation of small graph corpora.

All-nonisomorphic graphs are built by vertex augmentation: every n-vertex
graph arises from some (n-1)-vertex representative by attaching a new vertex
to a neighborhood subset, so extending every representative by every subset
and deduplicating by canonical form is complete. Even-degree ("Eulerian")
graphs use the classical surjection H -> H + vertex joined to the odd-degree
vertices of H, which maps the (n-1)-vertex universe onto the n-vertex
even-degree universe.
"""
from __future__ import annotations

from ..errors import OrderOutOfRange
from ..graphs import Graph
from ..refine import converged_certificate
from .iso import canonical_form

GENERATION_MIN_ORDER = 3
GENERATION_MAX_ORDER = 8
EULERIAN_MAX_ORDER = 9


def dedupe(graphs) -> list[Graph]:
    """Keep one representative per isomorphism class, sorted by canonical form."""
    by_cert: dict[bytes, dict[bytes, Graph]] = {}
    for g in graphs:
        bucket = by_cert.setdefault(converged_certificate(g), {})
        if len(bucket) == 0:
            # canonical form deferred until a certificate collision appears
            bucket[b""] = g
            continue
        if b"" in bucket:
            only = bucket.pop(b"")
            bucket[canonical_form(only)] = only
        form = canonical_form(g)
        bucket.setdefault(form, g)
    out = []
    for bucket in by_cert.values():
        for key, g in bucket.items():
            out.append((canonical_form(g) if key == b"" else key, g))
    out.sort(key=lambda t: t[0])
    return [g for _, g in out]


def _augment(parents: list[Graph], n: int) -> list[Graph]:
    children = []
    for p in parents:
        base = list(p.edges)
        for mask in range(1 << p.node_count):
            extra = [
                (v, n - 1) for v in range(p.node_count) if (mask >> v) & 1
            ]
            children.append(Graph(n, tuple(sorted(base + extra))))
    return dedupe(children)


def all_graphs_by_order(max_order: int) -> dict[int, list[Graph]]:
    """One representative per isomorphism class, for every order 1..max_order."""
    levels: dict[int, list[Graph]] = {1: [Graph(1, ())]}
    for n in range(2, max_order + 1):
        levels[n] = _augment(levels[n - 1], n)
    return levels


def generate_all_graphs(n: int) -> list[Graph]:
    """All non-isomorphic simple graphs on n vertices, 3 <= n <= 8."""
    if not (GENERATION_MIN_ORDER <= n <= GENERATION_MAX_ORDER):
        raise OrderOutOfRange(f"order {n} outside {GENERATION_MIN_ORDER}..{GENERATION_MAX_ORDER}")
    return all_graphs_by_order(n)[n]


def eulerian_graphs(n: int) -> list[Graph]:
    """All non-isomorphic graphs on n vertices with every degree even."""
    if not (GENERATION_MIN_ORDER <= n <= EULERIAN_MAX_ORDER):
        raise OrderOutOfRange(f"order {n} outside {GENERATION_MIN_ORDER}..{EULERIAN_MAX_ORDER}")
    parents = all_graphs_by_order(n - 1)[n - 1]
    images = []
    for p in parents:
        odd = [v for v in range(p.node_count) if p.degree(v) % 2 == 1]
        edges = list(p.edges) + [(v, n - 1) for v in odd]
        images.append(Graph(n, tuple(sorted(edges))))
    return dedupe(images)


def is_connected(g: Graph) -> bool:
    if g.node_count == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.node_count
