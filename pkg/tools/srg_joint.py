"""Joint closure of the order-25 and order-26 strongly regular families.

Both families live in the same four switching classes of 26-point regular
two-graphs: descendants of a class are the SRG(25,12,5,6) members, regular
representatives are the SRG(26,10,3,4) members. Crossing between the two
families therefore multiplies the reach of GM switching jumps:

  26-graph -> descendants (drop one point)        -> 25-graphs
  25-graph -> regularizing switching sets of H+oo -> 26-graphs

The regularization search looks for U in V(25) with |U| = 10 inducing a
3-regular subgraph such that every outside vertex has exactly 6 neighbors
in U; switching H+oo by U gives a 10-regular member of the class.
"""
from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from wlbound.graphs import Graph
from wlbound.bench.iso import canonical_form

from srg_families import (
    from_masks,
    family_moves,
    seidel_switch,
    srg_params,
    to_masks,
)

P25 = (25, 12, 5, 6)
P26 = (26, 10, 3, 4)


def regularizing_sets(g25: Graph):
    """All U (|U|=10, 3-regular inside, 6 seen from outside) for H + oo."""
    n = 25
    adj = g25.adjacency
    results = []
    count = [0] * n  # |N(w) & U| so far
    chosen = [False] * n

    def rec(v: int, picked: int):
        if picked == 10:
            for w in range(n):
                if count[w] != (3 if chosen[w] else 6):
                    return
            results.append([i for i in range(n) if chosen[i]])
            return
        if v == n or picked + (n - v) < 10:
            return
        # prune: decided vertices must still be completable
        for w in range(v):
            quota = 3 if chosen[w] else 6
            room = sum(1 for x in adj[w] if x >= v)
            if count[w] > quota or count[w] + min(room, 10 - picked) < quota:
                return
        if count[v] <= 3:
            chosen[v] = True
            for w in adj[v]:
                count[w] += 1
            rec(v + 1, picked + 1)
            for w in adj[v]:
                count[w] -= 1
            chosen[v] = False
        if count[v] <= 6:
            rec(v + 1, picked)

    rec(0, 0)
    return results


def cross_moves_25_to_26(g25: Graph):
    ext = Graph(26, g25.edges)
    for u in regularizing_sets(g25):
        yield to_masks(seidel_switch(ext, u))


def descendants_26_to_25(masks26):
    from srg_families import seidel_descendants
    g = from_masks(masks26)
    # seidel_descendants expects the graph without the isolated point; here
    # the two-graph already has 26 points, so descend directly: switch the
    # neighborhood of p to isolate it, then delete p.
    n = 26
    ext_masks = list(masks26)
    for p in range(n):
        nb = [v for v in range(n) if (ext_masks[p] >> v) & 1]
        switched = seidel_switch(from_masks(ext_masks), nb)
        sm = to_masks(switched)
        keep = [v for v in range(n) if v != p]
        remap = {v: i for i, v in enumerate(keep)}
        out = [0] * (n - 1)
        for v in keep:
            acc = 0
            m = sm[v]
            for w in keep:
                if (m >> w) & 1:
                    acc |= 1 << remap[w]
            out[remap[v]] = acc
        yield tuple(out)


def joint_close(seeds25, seeds26, verbose=True):
    found25: dict[bytes, Graph] = {}
    found26: dict[bytes, Graph] = {}
    queue: list[tuple[int, tuple[int, ...]]] = []  # (order, masks)

    def register(masks) -> None:
        params = srg_params(masks)
        if params == P25:
            found, order = found25, 25
        elif params == P26:
            found, order = found26, 26
        else:
            return
        g = from_masks(masks)
        form = canonical_form(g)
        if form in found:
            return
        found[form] = g
        queue.append((order, masks))
        if verbose:
            print(f"  order {order}: #{len(found)}", flush=True)
        if len(found25) > 15 or len(found26) > 10:
            raise RuntimeError("family exceeded classified count")

    for s in seeds25:
        register(to_masks(s))
    for s in seeds26:
        register(to_masks(s))

    while queue and (len(found25) < 15 or len(found26) < 10):
        order, masks = queue.pop()
        params = P25 if order == 25 else P26
        for nm in family_moves(masks, params, (4, 6), use_descendants=(order == 25)):
            register(nm)
        if order == 26:
            for nm in descendants_26_to_25(masks):
                register(nm)
        else:
            for nm in cross_moves_25_to_26(from_masks(masks)):
                register(nm)

    return sorted(found25.items()), sorted(found26.items())
