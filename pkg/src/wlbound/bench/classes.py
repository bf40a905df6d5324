"""Graph-class membership checkers for the synthetic benchmark.

Checkers are exact within their validated order budgets (exhaustive
searches back the perfect/planar/colorability checks); beyond the budget
they raise instead of guessing.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import BudgetExceeded
from ..features.centrality import bfs_distances, components
from ..graphs import Graph
from .generate import is_connected
from .hi import is_highly_irregular
from .iso import is_isomorphic

EXHAUSTIVE_ORDER_BUDGET = 16
COLORING_ORDER_BUDGET = 16


@dataclass(frozen=True)
class IntersectionArray:
    """Distance-regularity certificate: (b_i) and (c_i) sequences."""

    b: tuple[int, ...]
    c: tuple[int, ...]

    @property
    def diameter(self) -> int:
        return len(self.c)

    @property
    def degree(self) -> int:
        return self.b[0]

    def a(self, i: int) -> int:
        k = self.degree
        bi = self.b[i] if i < len(self.b) else 0
        ci = self.c[i - 1] if i >= 1 else 0
        return k - bi - ci


def is_eulerian(g: Graph) -> bool:
    """Even-degree test only; connectivity is deliberately not required."""
    return all(g.degree(v) % 2 == 0 for v in range(g.node_count))


def chordal_peo(g: Graph) -> list[int] | None:
    """Maximum-cardinality-search order if it is a perfect elimination order."""
    n = g.node_count
    nbsets = [set(a) for a in g.adjacency]
    weight = [0] * n
    order: list[int] = []
    placed = [False] * n
    for _ in range(n):
        v = max(
            (u for u in range(n) if not placed[u]),
            key=lambda u: (weight[u], -u),
        )
        placed[v] = True
        order.append(v)
        for w in nbsets[v]:
            if not placed[w]:
                weight[w] += 1
    order.reverse()  # elimination order
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in nbsets[v] if pos[w] > pos[v]]
        if not later:
            continue
        first = min(later, key=pos.__getitem__)
        for w in later:
            if w != first and w not in nbsets[first]:
                return None
    return order


def is_chordal(g: Graph) -> bool:
    return chordal_peo(g) is not None


def _has_odd_hole(g: Graph) -> bool:
    """Induced odd cycle of length >= 5, by induced-path backtracking."""
    n = g.node_count
    nbsets = [set(a) for a in g.adjacency]
    path: list[int] = []

    def extend(start: int) -> bool:
        v = path[-1]
        for w in sorted(nbsets[v]):
            if w <= start or w in path:
                continue
            # induced: w may touch only the path tip (and possibly start)
            touches = nbsets[w].intersection(path)
            closes = start in touches
            if touches - {v} - ({start} if closes else set()):
                continue
            if closes and len(path) >= 4 and (len(path) + 1) % 2 == 1:
                return True
            if closes and len(touches) > 1:
                # chord to start plus tip: w cannot extend an induced path
                continue
            path.append(w)
            if extend(start):
                return True
            path.pop()
        return False

    for s in range(n):
        path.clear()
        path.append(s)
        if extend(s):
            return True
    return False


def is_perfect(g: Graph) -> bool:
    """No induced odd hole >= 5 in the graph or its complement."""
    if g.node_count > EXHAUSTIVE_ORDER_BUDGET:
        raise BudgetExceeded(f"perfect check beyond n={EXHAUSTIVE_ORDER_BUDGET}")
    return not _has_odd_hole(g) and not _has_odd_hole(g.complement())


def is_colorable(g: Graph, k: int) -> bool:
    """Exact k-colorability by DSATUR-ordered backtracking."""
    if g.node_count > COLORING_ORDER_BUDGET:
        raise BudgetExceeded(f"coloring beyond n={COLORING_ORDER_BUDGET}")
    n = g.node_count
    if n == 0:
        return True
    colors = [-1] * n
    nbsets = [set(a) for a in g.adjacency]

    def pick() -> int:
        best, best_key = -1, (-1, -1)
        for v in range(n):
            if colors[v] >= 0:
                continue
            sat = len({colors[w] for w in nbsets[v] if colors[w] >= 0})
            key = (sat, len(nbsets[v]))
            if key > best_key:
                best, best_key = v, key
        return best

    def rec(done: int) -> bool:
        if done == n:
            return True
        v = pick()
        used = {colors[w] for w in nbsets[v] if colors[w] >= 0}
        limit = min(k, (max((c for c in colors if c >= 0), default=-1) + 2))
        for c in range(limit):
            if c not in used:
                colors[v] = c
                if rec(done + 1):
                    return True
                colors[v] = -1
        return False

    return rec(0)


def chromatic_number(g: Graph) -> int:
    for k in range(1, g.node_count + 1):
        if is_colorable(g, k):
            return k
    return max(g.node_count, 1)


def is_edge_4_critical(g: Graph) -> bool:
    if not is_connected(g) or g.edge_count == 0:
        return False
    if is_colorable(g, 3) or not is_colorable(g, 4):
        return False
    for i in range(g.edge_count):
        edges = g.edges[:i] + g.edges[i + 1:]
        if not is_colorable(Graph(g.node_count, edges), 3):
            return False
    return True


def is_self_complementary(g: Graph) -> bool:
    return is_isomorphic(g.stripped(), g.stripped().complement())


def _connects(nbsets, used, branch, required_pairs) -> bool:
    """Internally-disjoint paths realizing every required branch pair."""

    def connect(idx: int) -> bool:
        if idx == len(required_pairs):
            return True
        a, b = required_pairs[idx]
        va, vb = branch[a], branch[b]

        def dfs(v: int) -> bool:
            if vb in nbsets[v] and connect(idx + 1):
                return True
            for w in sorted(nbsets[v]):
                if not used[w] and w != vb:
                    used[w] = True
                    if dfs(w):
                        used[w] = False
                        return True
                    used[w] = False
            return False

        return dfs(va)

    return connect(0)


def _has_k5_subdivision(g: Graph) -> bool:
    from itertools import combinations

    n = g.node_count
    nbsets = [set(a) for a in g.adjacency]
    cand = [v for v in range(n) if len(nbsets[v]) >= 4]
    pairs = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    for branch in combinations(cand, 5):
        used = [False] * n
        for b in branch:
            used[b] = True
        if _connects(nbsets, used, branch, pairs):
            return True
    return False


def _has_k33_subdivision(g: Graph) -> bool:
    from itertools import combinations

    n = g.node_count
    nbsets = [set(a) for a in g.adjacency]
    cand = [v for v in range(n) if len(nbsets[v]) >= 3]
    pairs = [(i, 3 + j) for i in range(3) for j in range(3)]
    for chosen in combinations(cand, 6):
        # bipartitions into two unordered triples; anchor the first vertex
        for other in combinations(chosen[1:], 2):
            part_a = (chosen[0],) + other
            part_b = tuple(v for v in chosen if v not in part_a)
            branch = part_a + part_b
            used = [False] * n
            for b in branch:
                used[b] = True
            if _connects(nbsets, used, branch, pairs):
                return True
    return False


def is_planar(g: Graph) -> bool:
    """Kuratowski test: planar iff no K5 and no K3,3 subdivision."""
    if g.node_count > EXHAUSTIVE_ORDER_BUDGET:
        raise BudgetExceeded(f"planarity beyond n={EXHAUSTIVE_ORDER_BUDGET}")
    n, m = g.node_count, g.edge_count
    if n >= 3 and m > 3 * n - 6:
        return False
    return not _has_k5_subdivision(g) and not _has_k33_subdivision(g)


def strongly_regular_parameters(g: Graph) -> tuple[int, int, int, int] | None:
    """(n, k, lambda, mu) for non-trivial strongly regular graphs."""
    n = g.node_count
    if n < 2:
        return None
    degs = {g.degree(v) for v in range(n)}
    if len(degs) != 1:
        return None
    k = degs.pop()
    if k == 0 or k == n - 1:
        return None  # empty/complete are trivial
    nbsets = [set(a) for a in g.adjacency]
    lam = mu = None
    for u in range(n):
        for v in range(u + 1, n):
            common = len(nbsets[u] & nbsets[v])
            if v in nbsets[u]:
                if lam is None:
                    lam = common
                elif lam != common:
                    return None
            else:
                if mu is None:
                    mu = common
                elif mu != common:
                    return None
    return (n, k, lam if lam is not None else 0, mu if mu is not None else 0)


def intersection_array(g: Graph) -> IntersectionArray | None:
    """The (b_i, c_i) array if g is distance-regular, else None."""
    if g.node_count == 0 or not is_connected(g):
        return None
    degs = {g.degree(v) for v in range(g.node_count)}
    if len(degs) != 1:
        return None
    diameter = 0
    dists = []
    for v in range(g.node_count):
        d = bfs_distances(g, v)
        dists.append(d)
        diameter = max(diameter, max(d))
    b: dict[int, int] = {}
    c: dict[int, int] = {}
    for u in range(g.node_count):
        du = dists[u]
        for v in range(g.node_count):
            if u == v:
                continue
            i = du[v]
            ci = sum(1 for w in g.adjacency[v] if du[w] == i - 1)
            bi = sum(1 for w in g.adjacency[v] if du[w] == i + 1)
            if c.setdefault(i, ci) != ci or b.setdefault(i, bi) != bi:
                return None
    b[0] = degs.pop()
    return IntersectionArray(
        tuple(b[i] for i in range(diameter)),
        tuple(c[i] for i in range(1, diameter + 1)),
    )


def is_distance_regular(g: Graph) -> bool:
    return intersection_array(g) is not None


def is_strongly_regular(g: Graph) -> bool:
    return strongly_regular_parameters(g) is not None


CLASS_CHECKERS = {
    "all_nonisomorphic": lambda g: True,
    "eulerian": is_eulerian,
    "planar_connected": lambda g: is_connected(g) and is_planar(g),
    "chordal": is_chordal,
    "perfect": is_perfect,
    "highly_irregular": lambda g: is_connected(g) and is_highly_irregular(g),
    "edge_4_critical": is_edge_4_critical,
    "self_complementary": is_self_complementary,
    "distance_regular": is_distance_regular,
    "strongly_regular": is_strongly_regular,
}


def check_class(g: Graph, class_name: str) -> bool:
    try:
        checker = CLASS_CHECKERS[class_name]
    except KeyError:
        raise KeyError(f"unknown graph class {class_name!r}")
    return checker(g)
