"""Classical node and edge centralities used as pre-coloring features.

All routines are pure Python over the immutable Graph, deterministic across
platforms. Disconnected graphs follow per-component conventions: closeness
and eccentricity are computed within the vertex's component, harmonic
centrality treats unreachable vertices as contributing zero, eigenvector
centrality runs per component with edgeless components pinned to zero.
"""
from __future__ import annotations

from collections import deque

from ..graphs import Graph

_EIG_TOL = 1e-12
_EIG_CAP = 10_000


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from source; -1 marks unreachable vertices."""
    dist = [-1] * g.node_count
    dist[source] = 0
    q = deque([source])
    while q:
        v = q.popleft()
        for w in g.adjacency[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                q.append(w)
    return dist


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.node_count
    comps = []
    for s in range(g.node_count):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def degree_values(g: Graph) -> list[float]:
    return [float(g.degree(v)) for v in range(g.node_count)]


def closeness_values(g: Graph) -> list[float]:
    out = [0.0] * g.node_count
    for comp in components(g):
        order = len(comp)
        for v in comp:
            if order == 1:
                continue
            dist = bfs_distances(g, v)
            total = sum(dist[u] for u in comp)
            out[v] = (order - 1) / total
    return out


def harmonic_values(g: Graph) -> list[float]:
    out = [0.0] * g.node_count
    for v in range(g.node_count):
        dist = bfs_distances(g, v)
        out[v] = sum(1.0 / d for d in dist if d > 0)
    return out


def eccentricity_values(g: Graph) -> list[float]:
    out = [0.0] * g.node_count
    for v in range(g.node_count):
        dist = bfs_distances(g, v)
        out[v] = float(max((d for d in dist if d >= 0), default=0))
    return out


def local_transitivity_values(g: Graph) -> list[float]:
    out = [0.0] * g.node_count
    nbsets = [set(a) for a in g.adjacency]
    for v in range(g.node_count):
        k = g.degree(v)
        if k < 2:
            continue
        closed = 0
        nb = g.adjacency[v]
        for i in range(k):
            si = nbsets[nb[i]]
            for j in range(i + 1, k):
                if nb[j] in si:
                    closed += 1
        out[v] = closed / (k * (k - 1) / 2)
    return out


def eigenvector_values(g: Graph) -> list[float]:
    out = [0.0] * g.node_count
    for comp in components(g):
        if all(g.degree(v) == 0 for v in comp):
            continue
        x = {v: 1.0 for v in comp}
        for _ in range(_EIG_CAP):
            y = {v: sum(x[w] for w in g.adjacency[v]) for v in comp}
            norm = max(abs(val) for val in y.values())
            if norm == 0.0:
                y = x
                break
            y = {v: val / norm for v, val in y.items()}
            if max(abs(y[v] - x[v]) for v in comp) < _EIG_TOL:
                x = y
                break
            x = y
        for v in comp:
            out[v] = x[v]
    return out


def burts_constraint_values(g: Graph) -> list[float]:
    out = [0.0] * g.node_count
    nbsets = [set(a) for a in g.adjacency]
    for i in range(g.node_count):
        k = g.degree(i)
        if k == 0:
            continue
        p_i = 1.0 / k
        total = 0.0
        for j in g.adjacency[i]:
            indirect = 0.0
            for q in g.adjacency[i]:
                if q != j and q in nbsets[j]:
                    indirect += p_i * (1.0 / g.degree(q))
            total += (p_i + indirect) ** 2
        out[i] = total
    return out


def _brandes(g: Graph, edges: bool):
    """Brandes accumulation; returns node or edge betweenness, pairs counted once."""
    n = g.node_count
    node_bc = [0.0] * n
    edge_bc = [0.0] * g.edge_count
    eidx = g.edge_index
    for s in range(n):
        sigma = [0.0] * n
        dist = [-1] * n
        preds: list[list[int]] = [[] for _ in range(n)]
        sigma[s] = 1.0
        dist[s] = 0
        q = deque([s])
        order = []
        while q:
            v = q.popleft()
            order.append(v)
            for w in g.adjacency[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    q.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta = [0.0] * n
        for w in reversed(order):
            for v in preds[w]:
                share = sigma[v] / sigma[w] * (1.0 + delta[w])
                if edges:
                    e = (v, w) if v < w else (w, v)
                    edge_bc[eidx[e]] += share
                delta[v] += share
            if w != s:
                node_bc[w] += delta[w]
    if edges:
        return [b / 2.0 for b in edge_bc]
    return [b / 2.0 for b in node_bc]


def betweenness_values(g: Graph) -> list[float]:
    return _brandes(g, edges=False)


def edge_betweenness_values(g: Graph) -> list[float]:
    return _brandes(g, edges=True)


def convergence_degree_values(g: Graph) -> list[float]:
    """Per edge: |#closer-to-u - #closer-to-v| / #strictly-closer-to-either."""
    out = []
    dist_cache: dict[int, list[int]] = {}

    def dist(v):
        if v not in dist_cache:
            dist_cache[v] = bfs_distances(g, v)
        return dist_cache[v]

    for u, v in g.edges:
        du, dv = dist(u), dist(v)
        s = t = 0
        for w in range(g.node_count):
            if w == u or w == v:
                continue
            a, b = du[w], dv[w]
            ra = a if a >= 0 else None
            rb = b if b >= 0 else None
            if ra is None and rb is None:
                continue
            if rb is None or (ra is not None and ra < rb):
                s += 1
            elif ra is None or rb < ra:
                t += 1
        out.append(abs(s - t) / (s + t) if s + t else 0.0)
    return out
