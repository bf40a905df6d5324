"""Construct the shipped strongly-regular graph corpus.

Seeds come from classical algebraic constructions (Paley graphs, rook's and
Shrikhande graphs, the triangular graph T(8) with its Seidel switchings,
Latin-square graphs, Steiner triple system block graphs). The remaining
members of each parameter family are found by closing the seed set under
Godsil-McKay switching (and Seidel descendant moves for conference
parameters), deduplicating by canonical form. Completeness is certified
against the published family sizes: any set of pairwise non-isomorphic
strongly regular graphs that reaches the classified count is the full
family.

This script is offline tooling: its output (graph6 files + manifest counts)
ships with the package; the package itself never runs it.
"""
from __future__ import annotations

import sys
from itertools import combinations
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from wlbound.graphs import Graph
from wlbound.bench.iso import canonical_form


# ---------------------------------------------------------------------------
# adjacency-set helpers (graphs as tuple of int bitmasks)

def to_masks(g: Graph) -> tuple[int, ...]:
    masks = [0] * g.node_count
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return tuple(masks)


def from_masks(masks) -> Graph:
    n = len(masks)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if (masks[u] >> v) & 1
    ]
    return Graph(n, tuple(edges))


def srg_params(masks) -> tuple[int, int, int, int] | None:
    """(n, k, lambda, mu) if strongly regular with both pair kinds, else None."""
    n = len(masks)
    k = masks[0].bit_count()
    if any(m.bit_count() != k for m in masks):
        return None
    lam = mu = None
    for u in range(n):
        for v in range(u + 1, n):
            common = (masks[u] & masks[v]).bit_count()
            if (masks[u] >> v) & 1:
                if lam is None:
                    lam = common
                elif lam != common:
                    return None
            else:
                if mu is None:
                    mu = common
                elif mu != common:
                    return None
    if lam is None or mu is None:
        return None
    return (n, k, lam, mu)


# ---------------------------------------------------------------------------
# seed constructions

def rook_4x4() -> Graph:
    def idx(i, j):
        return 4 * i + j
    edges = set()
    for i in range(4):
        for j in range(4):
            for jj in range(j + 1, 4):
                edges.add((idx(i, j), idx(i, jj)))
            for ii in range(i + 1, 4):
                edges.add((idx(i, j), idx(ii, j)))
    return Graph(16, tuple(sorted(edges)))


def shrikhande() -> Graph:
    diffs = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}

    def idx(i, j):
        return 4 * i + j

    edges = set()
    for i in range(4):
        for j in range(4):
            for (di, dj) in diffs:
                a, b = idx(i, j), idx((i + di) % 4, (j + dj) % 4)
                if a < b:
                    edges.add((a, b))
                else:
                    edges.add((b, a))
    return Graph(16, tuple(sorted(edges)))


def paley_prime(p: int) -> Graph:
    squares = {(x * x) % p for x in range(1, p)}
    edges = [
        (u, v) for u in range(p) for v in range(u + 1, p) if (v - u) % p in squares
    ]
    return Graph(p, tuple(edges))


def paley_25() -> Graph:
    # GF(25) = GF(5)[x] / (x^2 + x + 2); elements encoded as a + 5*b for a+bx
    def mul(e1, e2):
        a1, b1 = e1 % 5, e1 // 5
        a2, b2 = e2 % 5, e2 // 5
        # (a1 + b1 x)(a2 + b2 x) = a1a2 + (a1b2 + a2b1) x + b1b2 x^2,
        # with x^2 = -x - 2
        c0 = (a1 * a2 - 2 * b1 * b2) % 5
        c1 = (a1 * b2 + a2 * b1 - b1 * b2) % 5
        return c0 + 5 * c1

    squares = {mul(e, e) for e in range(1, 25)}
    squares.discard(0)

    def sub(e1, e2):
        return (e1 % 5 - e2 % 5) % 5 + 5 * ((e1 // 5 - e2 // 5) % 5)

    edges = [
        (u, v) for u in range(25) for v in range(u + 1, 25) if sub(v, u) in squares
    ]
    return Graph(25, tuple(edges))


def triangular_8() -> Graph:
    verts = list(combinations(range(8), 2))
    pos = {p: i for i, p in enumerate(verts)}
    edges = []
    for a in range(len(verts)):
        for b in range(a + 1, len(verts)):
            if set(verts[a]) & set(verts[b]):
                edges.append((a, b))
    return Graph(28, tuple(edges)), pos


def seidel_switch(g: Graph, subset) -> Graph:
    inside = set(subset)
    masks = list(to_masks(g))
    n = g.node_count
    for u in inside:
        for v in range(n):
            if v != u and v not in inside:
                masks[u] ^= 1 << v
                masks[v] ^= 1 << u
    return from_masks(masks)


def chang_graphs() -> list[Graph]:
    """T(8) switched along a perfect matching, an 8-cycle, and C3 u C5."""
    t8, pos = triangular_8()
    matching = [(0, 1), (2, 3), (4, 5), (6, 7)]
    cyc8 = [(i, (i + 1) % 8) for i in range(8)]
    c3c5 = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (6, 7), (3, 7)]
    out = []
    for edge_set in (matching, cyc8, c3c5):
        subset = [pos[tuple(sorted(e))] for e in edge_set]
        out.append(seidel_switch(t8, subset))
    return out


def latin_square_graphs_order5() -> list[Graph]:
    """All non-isomorphic L3(5) graphs (one per Latin square main class).

    Enumerates reduced Latin squares of order 5 (first row and column in
    natural order; 56 squares) and canonically dedupes the cell graphs.
    """
    squares: list[list[list[int]]] = []
    rows: list[list[int]] = [list(range(5))]

    def fill(r: int, row: list[int]):
        c = len(row)
        if c == 5:
            rows.append(row[:])
            if r == 4:
                squares.append([q[:] for q in rows])
            else:
                fill(r + 1, [r + 1])
            rows.pop()
            return
        for s in range(5):
            if s in row:
                continue
            if any(rows[i][c] == s for i in range(r)):
                continue
            fill(r, row + [s])

    fill(1, [1])
    graphs = {}
    for sq in squares:
        edges = set()
        for i in range(5):
            for j in range(5):
                a = 5 * i + j
                for ii in range(5):
                    for jj in range(5):
                        b = 5 * ii + jj
                        if b <= a:
                            continue
                        same = (ii == i) + (jj == j) + (sq[ii][jj] == sq[i][j])
                        if same == 1:
                            edges.add((a, b))
        g = Graph(25, tuple(sorted(edges)))
        graphs[canonical_form(g)] = g
    return list(graphs.values())


# ---------------------------------------------------------------------------
# Steiner triple systems on 13 points -> SRG(26,10,3,4) seeds

def steiner_13_block_graph_complements() -> list[Graph]:
    base = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (0, 7, 8), (0, 9, 10), (0, 11, 12)]
    systems = []

    def pair_key(a, b):
        return (a, b) if a < b else (b, a)

    def search(triples, covered):
        if len(triples) == 26:
            systems.append(list(triples))
            return
        first = None
        for a in range(13):
            for b in range(a + 1, 13):
                if (a, b) not in covered:
                    first = (a, b)
                    break
            if first:
                break
        a, b = first
        for c in range(b + 1, 13):
            p1, p2 = pair_key(a, c), pair_key(b, c)
            if p1 in covered or p2 in covered:
                continue
            covered.update({(a, b), p1, p2})
            triples.append((a, b, c))
            search(triples, covered)
            triples.pop()
            covered.difference_update({(a, b), p1, p2})

    covered = set()
    for t in base:
        for i in range(3):
            for j in range(i + 1, 3):
                covered.add(pair_key(t[i], t[j]))
    search(list(base), covered)

    # cheap invariant: multiset of pair cycle-structures distinguishes systems
    def cycle_invariant(triples):
        third = {}
        for t in triples:
            for i in range(3):
                for j in range(i + 1, 3):
                    third[pair_key(t[i], t[j])] = sum(t) - t[i] - t[j]
        inv = {}
        for x in range(13):
            for y in range(x + 1, 13):
                # walk the x/y cycle structure over remaining points
                rest = [p for p in range(13) if p not in (x, y, third[(x, y)])]
                lengths = []
                unseen = set(rest)
                while unseen:
                    start = min(unseen)
                    cur, length = start, 0
                    while True:
                        unseen.discard(cur)
                        nxt = third[pair_key(x, cur)]
                        nxt = third[pair_key(y, nxt)]
                        length += 1
                        cur = nxt
                        if cur == start:
                            break
                    lengths.append(length)
                key = tuple(sorted(lengths))
                inv[key] = inv.get(key, 0) + 1
        return tuple(sorted(inv.items()))

    buckets: dict[tuple, list] = {}
    for s in systems:
        buckets.setdefault(cycle_invariant(s), []).append(s)

    def complement_block_graph(s):
        edges = []
        for i in range(26):
            for j in range(i + 1, 26):
                if set(s[i]) & set(s[j]):
                    edges.append((i, j))
        return Graph(26, tuple(edges)).complement()

    # one representative per invariant bucket; a second sample per bucket
    # guards against the invariant lumping distinct systems together
    graphs = {}
    for bucket in buckets.values():
        for s in (bucket[0], bucket[-1]):
            g = complement_block_graph(s)
            graphs[canonical_form(g)] = g
    return list(graphs.values())


# ---------------------------------------------------------------------------
# Godsil-McKay switching closure

def gm_switchings(masks, sizes=(4, 6, 8)):
    """Yield switched adjacency masks for every valid GM partition (D, rest)."""
    n = len(masks)
    all_mask = (1 << n) - 1
    for size in sizes:
        half = size // 2
        for D in combinations(range(n), size):
            dmask = 0
            for d in D:
                dmask |= 1 << d
            deg0 = (masks[D[0]] & dmask).bit_count()
            if any((masks[d] & dmask).bit_count() != deg0 for d in D[1:]):
                continue
            halves = []
            ok = True
            rest = all_mask & ~dmask
            r = rest
            while r:
                v = (r & -r).bit_length() - 1
                r &= r - 1
                c = (masks[v] & dmask).bit_count()
                if c == half:
                    halves.append(v)
                elif c != 0 and c != size:
                    ok = False
                    break
            if not ok or not halves:
                continue
            out = list(masks)
            for v in halves:
                old = out[v] & dmask
                new = dmask & ~old
                out[v] = (out[v] & ~dmask) | new
                flip = old ^ new
                f = flip
                while f:
                    d = (f & -f).bit_length() - 1
                    f &= f - 1
                    out[d] ^= 1 << v
            yield tuple(out)


def seidel_descendants(g: Graph):
    """Descendants of the two-graph of (g + isolated point) at each point."""
    n = g.node_count
    ext_masks = list(to_masks(g)) + [0]
    ext = from_masks(ext_masks)
    for p in range(n + 1):
        nb = [v for v in range(n + 1) if ext_masks[p] >> v & 1]
        switched = seidel_switch(ext, nb)
        sm = to_masks(switched)
        keep = [v for v in range(n + 1) if v != p]
        remap = {v: i for i, v in enumerate(keep)}
        masks2 = [0] * n
        for v in keep:
            m = sm[v]
            acc = 0
            for w in keep:
                if (m >> w) & 1:
                    acc |= 1 << remap[w]
            masks2[remap[v]] = acc
        yield tuple(masks2)


def complement_masks(masks) -> tuple[int, ...]:
    n = len(masks)
    all_mask = (1 << n) - 1
    return tuple((all_mask & ~m) & ~(1 << v) for v, m in enumerate(masks))


def family_moves(masks, params, gm_sizes=(4, 6), use_descendants=True):
    """All one-step neighbors of a graph inside its parameter family.

    GM switchings of the graph and of its complement (complemented back)
    both preserve the adjacency spectrum; descendant moves sweep the Seidel
    switching class; complementation applies when the parameter family is
    its own complement family.
    """
    n, k, lam, mu = params
    comp_params = (n, n - k - 1, n - 2 - 2 * k + mu, n - 2 * k + lam)
    for sm in gm_switchings(masks, gm_sizes):
        yield sm
    cm = complement_masks(masks)
    for sm in gm_switchings(cm, gm_sizes):
        yield complement_masks(sm)
    if comp_params == params:
        yield cm
    if use_descendants:
        for dm in seidel_descendants(from_masks(masks)):
            yield dm


def close_family(seeds, params, target, use_descendants=True,
                 gm_sizes=(4, 6), verbose=True, strict=True):
    """BFS closure of the seed set under all family moves."""
    found: dict[bytes, Graph] = {}
    frontier: list[tuple[int, ...]] = []
    for s in seeds:
        masks = to_masks(s)
        assert srg_params(masks) == params, (srg_params(masks), params)
        form = canonical_form(s)
        if form not in found:
            found[form] = s
            frontier.append(masks)
    while frontier and len(found) < target:
        masks = frontier.pop()
        for new_masks in family_moves(masks, params, gm_sizes, use_descendants):
            if srg_params(new_masks) != params:
                continue
            g = from_masks(new_masks)
            form = canonical_form(g)
            if form not in found:
                found[form] = g
                frontier.append(new_masks)
                if verbose:
                    print(f"  [{params}] found #{len(found)}", flush=True)
                if len(found) > target:
                    raise RuntimeError(
                        f"family {params} exceeded classified count {target}"
                    )
    if strict and len(found) != target:
        raise RuntimeError(
            f"family {params}: closure found {len(found)} of {target}"
        )
    return sorted(found.items())


# ---------------------------------------------------------------------------
# WQH (level-2) switching: rational orthogonal block Q on C1 u C2

def wqh_switchings(masks, t: int):
    """Yield switched graphs for candidate WQH pairs (C1, C2), |Ci| = t.

    Candidate filter: every vertex outside C1 u C2 is balanced
    (|N cap C1| = |N cap C2|) or fully polarized (all of C1 and none of C2,
    or vice versa). The switch is verified by conjugating with the rational
    orthogonal block Q = [[I - J/t, J/t], [J/t, I - J/t]]; only integral
    0/1 symmetric results are yielded, so no validity assumptions are made
    beyond the verification itself.
    """
    import numpy as np
    from itertools import combinations

    n = len(masks)
    A = np.zeros((n, n), dtype=np.int64)
    for u in range(n):
        m = masks[u]
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            A[u, v] = 1
    for c1 in combinations(range(n), t):
        m1 = 0
        for v in c1:
            m1 |= 1 << v
        for c2 in combinations([v for v in range(n) if not (m1 >> v) & 1], t):
            if c2 < c1:
                continue  # unordered pair of sets
            m2 = 0
            for v in c2:
                m2 |= 1 << v
            rest = [v for v in range(n) if not ((m1 | m2) >> v) & 1]
            ok = False  # at least one polarized vertex, else identity
            good = True
            for v in rest:
                s1 = (masks[v] & m1).bit_count()
                s2 = (masks[v] & m2).bit_count()
                if s1 == s2:
                    continue
                if (s1, s2) == (t, 0) or (s1, s2) == (0, t):
                    ok = True
                else:
                    good = False
                    break
            if not good or not ok:
                continue
            sel = list(c1) + list(c2)
            Q = np.eye(n)
            for i, u in enumerate(sel):
                for j, v in enumerate(sel):
                    blk = (i < t) == (j < t)
                    Q[u, v] = (1.0 if u == v else 0.0) + (-1.0 / t if blk else 1.0 / t)
            B = Q @ A @ Q
            R = np.rint(B)
            if not np.allclose(B, R, atol=1e-9):
                continue
            R = R.astype(np.int64)
            if not (R.T == R).all() or R.min() < 0 or R.max() > 1:
                continue
            if np.diagonal(R).any():
                continue
            out = []
            for u in range(n):
                acc = 0
                for v in range(n):
                    if R[u, v]:
                        acc |= 1 << v
                out.append(acc)
            yield tuple(out)
