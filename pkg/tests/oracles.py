"""Independent brute-force oracles the fast implementations are checked
against. Everything here favors obviousness over speed and shares no code
with the implementations under test."""
from __future__ import annotations

from itertools import combinations, permutations

from wlbound.graphs import Graph


def all_pairs_distances(g: Graph) -> list[list[float]]:
    n = g.node_count
    inf = float("inf")
    dist = [[inf] * n for _ in range(n)]
    for v in range(n):
        dist[v][v] = 0
    for u, v in g.edges:
        dist[u][v] = dist[v][u] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if dist[i][k] + dist[k][j] < dist[i][j]:
                    dist[i][j] = dist[i][k] + dist[k][j]
    return dist


def _all_shortest_paths(g: Graph, s: int, t: int) -> list[list[int]]:
    """Every shortest s..t path as a vertex list (exponential; n <= 8)."""
    dist = all_pairs_distances(g)
    if dist[s][t] == float("inf"):
        return []
    out = []

    def walk(v, acc):
        if v == t:
            out.append(acc)
            return
        for w in g.adjacency[v]:
            if dist[s][w] == dist[s][v] + 1 and dist[w][t] == dist[v][t] - 1:
                walk(w, acc + [w])

    walk(s, [s])
    return out


def brute_betweenness(g: Graph) -> list[float]:
    """Node betweenness by explicit shortest-path enumeration, pairs once."""
    n = g.node_count
    bc = [0.0] * n
    for s in range(n):
        for t in range(s + 1, n):
            paths = _all_shortest_paths(g, s, t)
            if not paths:
                continue
            for p in paths:
                for v in p[1:-1]:
                    bc[v] += 1.0 / len(paths)
    return bc


def brute_edge_betweenness(g: Graph) -> list[float]:
    bc = [0.0] * g.edge_count
    eidx = g.edge_index
    for s in range(g.node_count):
        for t in range(s + 1, g.node_count):
            paths = _all_shortest_paths(g, s, t)
            if not paths:
                continue
            for p in paths:
                for a, b in zip(p, p[1:]):
                    e = (a, b) if a < b else (b, a)
                    bc[eidx[e]] += 1.0 / len(paths)
    return bc


def brute_substructure_counts(g: Graph, pattern: str, size: int):
    """Subset-based pattern counting; independent of the DFS enumerator.

    Cliques/cycles: vertex subsets of the exact size, checked for being a
    clique / having a Hamilton cycle (counted once). Paths of `size` edges:
    vertex subsets of size+1 with each Hamilton path counted once.
    """
    n = g.node_count
    adj = [set(a) for a in g.adjacency]
    node_ct = [0] * n
    edge_ct = [0] * g.edge_count
    eidx = g.edge_index

    def bump(vertices, edges):
        for v in vertices:
            node_ct[v] += 1
        for a, b in edges:
            edge_ct[eidx[(a, b) if a < b else (b, a)]] += 1

    if pattern == "clique":
        for sub in combinations(range(n), size):
            if all(b in adj[a] for a, b in combinations(sub, 2)):
                bump(sub, combinations(sub, 2))
    elif pattern == "cycle":
        for sub in combinations(range(n), size):
            seen = set()
            first = sub[0]
            for perm in permutations(sub[1:]):
                seq = (first,) + perm
                if perm[0] > perm[-1]:
                    continue  # one direction per cycle
                if all(seq[i + 1] in adj[seq[i]] for i in range(size - 1)) \
                        and first in adj[seq[-1]]:
                    key = seq
                    if key not in seen:
                        seen.add(key)
                        bump(sub, list(zip(seq, seq[1:] + (first,))))
    elif pattern == "path":
        for sub in combinations(range(n), size + 1):
            for perm in permutations(sub):
                if perm[0] > perm[-1]:
                    continue
                if all(perm[i + 1] in adj[perm[i]] for i in range(size)):
                    bump(perm, list(zip(perm, perm[1:])))
    else:
        raise ValueError(pattern)
    return node_ct, edge_ct


def brute_stable_partition(g: Graph) -> tuple[int, ...]:
    """Plain integer color refinement to a fixed point (no hashing)."""
    colors = [0] * g.node_count
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[w] for w in g.adjacency[v])))
            for v in range(g.node_count)
        ]
        order = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [order[k] for k in keys]
        if new == colors:
            return tuple(colors)
        colors = new


def exhaustive_best_accuracy(groups: list[list[str]], labels: list[str]):
    """Max accuracy over every hash-respecting predictor, by enumeration."""
    from itertools import product

    total = sum(len(g) for g in groups)
    best = -1.0
    for assignment in product(labels, repeat=len(groups)):
        hit = sum(
            sum(1 for y in grp if y == lab)
            for grp, lab in zip(groups, assignment)
        )
        best = max(best, hit / total)
    return best


def exhaustive_best_mse(groups: list[list[float]], grid: list[float]):
    """Min MSE over predictors constrained to a finite prediction grid,
    refined by local search around the grid optimum per group."""
    total = sum(len(g) for g in groups)
    best_sse = 0.0
    for grp in groups:
        best = min(sum((y - p) ** 2 for y in grp) for p in grid)
        best_sse += best
    return best_sse / total
