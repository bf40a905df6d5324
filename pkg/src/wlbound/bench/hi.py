"""Exhaustive generation of connected highly irregular graphs.

A graph is highly irregular when the neighbors of every vertex have pairwise
distinct degrees. Equivalently, partition vertices into degree classes
D_1..D_Delta: every vertex has at most one neighbor per class, so edges
between two classes form a partial matching. Structure exploited here:

  * every degree value 1..Delta occurs (a Delta-vertex sees all of them);
  * each Delta-vertex has exactly one neighbor of every degree, so D_Delta
    is perfectly matched within itself (|D_Delta| even) and injects into
    every other class (|D_d| >= |D_Delta|);
  * Delta <= n/2 for connected graphs of order >= 2.

The search fixes a class-size profile, then fills vertex adjacency slots in
a fixed vertex order with first-untouched symmetry breaking inside classes;
completions are deduplicated by canonical form.
"""
from __future__ import annotations

from itertools import combinations

from ..errors import OrderOutOfRange
from ..graphs import Graph
from .generate import dedupe, is_connected

HI_MAX_ORDER = 13


def is_highly_irregular(g: Graph) -> bool:
    for v in range(g.node_count):
        degs = [g.degree(w) for w in g.adjacency[v]]
        if len(set(degs)) != len(degs):
            return False
    return True


def _profiles(n: int, delta: int):
    """Class-size profiles (n_1..n_delta) consistent with the structure facts."""
    if delta == 0:
        if n == 1:
            yield ()
        return

    def rec(d, left, minimum, acc):
        if d == delta:
            # the Delta-class injects into every other class: even, and
            # no larger than the smallest of them
            if left % 2 == 0 and 2 <= left <= minimum:
                yield acc + (left,)
            return
        for size in range(1, left - (delta - d) + 1):
            yield from rec(d + 1, left - size, min(minimum, size), acc + (size,))

    if delta == 1:
        if n >= 2 and n % 2 == 0:
            yield (n,)
        return
    yield from rec(1, n, n, ())


def _search(profile: tuple[int, ...], out: list[Graph]) -> None:
    delta = len(profile)
    n = sum(profile)
    # vertices ordered by class, highest degree first
    cls: list[int] = []
    for d in range(delta, 0, -1):
        cls.extend([d] * profile[d - 1])
    first_of_class = {}
    for i, d in enumerate(cls):
        first_of_class.setdefault(d, i)

    adj: list[list[int]] = [[] for _ in range(n)]
    used: list[set[int]] = [set() for _ in range(n)]  # classes used per vertex
    touched = [False] * n

    def candidates(v: int, c: int) -> list[int]:
        picks = []
        untouched_taken = False
        for w in range(v + 1, n):
            if cls[w] != c or cls[v] in used[w] or len(adj[w]) >= cls[w]:
                continue
            if touched[w]:
                picks.append(w)
            elif not untouched_taken:
                picks.append(w)
                untouched_taken = True
        return picks

    def place(v: int, classes: tuple[int, ...], idx: int) -> None:
        if idx == len(classes):
            advance(v + 1)
            return
        c = classes[idx]
        for w in candidates(v, c):
            adj[v].append(w)
            adj[w].append(v)
            used[v].add(c)
            used[w].add(cls[v])
            was = touched[w]
            touched[w] = touched[v] = True
            place(v, classes, idx + 1)
            adj[v].pop()
            adj[w].pop()
            used[v].discard(c)
            used[w].discard(cls[v])
            touched[w] = was

    def advance(v: int) -> None:
        if v == n:
            edges = sorted(
                (min(a, b), max(a, b)) for a in range(n) for b in adj[a] if a < b
            )
            g = Graph(n, tuple(edges))
            if is_connected(g):
                out.append(g)
            return
        if len(adj[v]) > cls[v]:
            return
        need = cls[v] - len(adj[v])
        free = [c for c in range(1, delta + 1) if c not in used[v]]
        if need > len(free):
            return
        for classes in combinations(free, need):
            place(v, classes, 0)

    advance(0)


def highly_irregular_graphs(n: int) -> list[Graph]:
    """All connected highly irregular graphs on n vertices, 1 <= n <= 13."""
    if not (1 <= n <= HI_MAX_ORDER):
        raise OrderOutOfRange(f"order {n} outside 1..{HI_MAX_ORDER}")
    if n == 1:
        return [Graph(1, ())]
    raw: list[Graph] = []
    for delta in range(1, n // 2 + 1):
        for profile in _profiles(n, delta):
            _search(profile, raw)
    return dedupe(raw)
