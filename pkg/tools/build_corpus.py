"""Build the shipped benchmark corpus under data/corpus/.

Generated classes (all-nonisomorphic, eulerian, highly-irregular, and the
filtered small classes) are produced by the package's own generators and
checkers. The strongly regular cells come from the closure searches in
srg_families/srg_joint/srg29_z5_mitm; the distance-regular cells are named
constructions filtered through the intersection-array checker (strongly
regular graphs are kept in their own class). Run from the repo root:

    python tools/build_corpus.py [--skip-slow]
"""
from __future__ import annotations

import sys
import time
from itertools import combinations
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))
sys.path.insert(0, str(ROOT / "tools"))

from wlbound.bench.classes import (check_class, intersection_array,
                                   is_strongly_regular)
from wlbound.bench.corpus import save_corpus_cell
from wlbound.bench.generate import (all_graphs_by_order, eulerian_graphs,
                                    is_connected)
from wlbound.bench.hi import highly_irregular_graphs
from wlbound.bench.iso import canonical_form
from wlbound.graph6 import read_graph6_file
from wlbound.graphs import Graph

CORPUS = ROOT / "data" / "corpus"


def log(msg):
    print(f"[corpus] {msg}", flush=True)


# ---------------------------------------------------------------------------
# distance-regular constructions (diameter >= 3; SRGs live in their own class)

def cycle(n: int) -> Graph:
    return Graph.build(n, [(i, (i + 1) % n) for i in range(n)])


def hypercube(d: int) -> Graph:
    n = 1 << d
    edges = [(u, u ^ (1 << b)) for u in range(n) for b in range(d)
             if u < u ^ (1 << b)]
    return Graph.build(n, edges)


def crown(n: int) -> Graph:
    """K_{n,n} minus a perfect matching (bipartite double of K_n)."""
    edges = [(i, n + j) for i in range(n) for j in range(n) if i != j]
    return Graph.build(2 * n, edges)


def johnson(n: int, k: int) -> Graph:
    verts = list(combinations(range(n), k))
    pos = {v: i for i, v in enumerate(verts)}
    edges = []
    for a in range(len(verts)):
        for b in range(a + 1, len(verts)):
            if len(set(verts[a]) & set(verts[b])) == k - 1:
                edges.append((a, b))
    return Graph.build(len(verts), edges)


def kneser(n: int, k: int) -> Graph:
    verts = list(combinations(range(n), k))
    edges = []
    for a in range(len(verts)):
        for b in range(a + 1, len(verts)):
            if not set(verts[a]) & set(verts[b]):
                edges.append((a, b))
    return Graph.build(len(verts), edges)


def hamming(d: int, q: int) -> Graph:
    n = q ** d
    edges = []
    for u in range(n):
        digits = [(u // q ** i) % q for i in range(d)]
        for i in range(d):
            for c in range(digits[i] + 1, q):
                v = u + (c - digits[i]) * q ** i
                edges.append((u, v))
    return Graph.build(n, edges)


def generalized_petersen(n: int, k: int) -> Graph:
    outer = [(i, (i + 1) % n) for i in range(n)]
    inner = [(n + i, n + (i + k) % n) for i in range(n)]
    spokes = [(i, n + i) for i in range(n)]
    return Graph.build(2 * n, outer + inner + spokes)


def heawood() -> Graph:
    # incidence graph of the Fano plane
    lines = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6),
             (2, 3, 6), (2, 4, 5)]
    edges = [(p, 7 + li) for li, line in enumerate(lines) for p in line]
    return Graph.build(14, edges)


def pappus() -> Graph:
    # incidence graph of AG(2,3) dual configuration (9_3 Pappus config)
    points = [(x, y) for x in range(3) for y in range(3)]
    pos = {p: i for i, p in enumerate(points)}
    lines = []
    for a in range(3):
        for b in range(3):
            lines.append([(x, (a * x + b) % 3) for x in range(3)])
    edges = []
    for li, line in enumerate(lines):
        for p in line:
            edges.append((pos[p], 9 + li))
    return Graph.build(18, edges)


def dodecahedron() -> Graph:
    return Graph.build(20, [
        (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
        (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
        (5, 10), (6, 11), (7, 12), (8, 13), (9, 14),
        (10, 6), (11, 7), (12, 8), (13, 9), (14, 5),
        (10, 15), (11, 16), (12, 17), (13, 18), (14, 19),
        (15, 16), (16, 17), (17, 18), (18, 19), (19, 15),
    ])


def icosahedron() -> Graph:
    return Graph.build(12, [
        (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
        (1, 2), (2, 3), (3, 4), (4, 5), (5, 1),
        (1, 6), (1, 7), (2, 7), (2, 8), (3, 8), (3, 9), (4, 9), (4, 10),
        (5, 10), (5, 6), (6, 7), (7, 8), (8, 9), (9, 10), (10, 6),
        (6, 11), (7, 11), (8, 11), (9, 11), (10, 11),
    ])


def tutte_coxeter() -> Graph:
    """Levi graph of GQ(2,2): points = pairs of a 6-set, lines = syntheme
    partitions into three pairs."""
    points = list(combinations(range(6), 2))
    ppos = {p: i for i, p in enumerate(points)}
    lines = []
    for part in _pair_partitions(list(range(6))):
        lines.append([tuple(sorted(p)) for p in part])
    edges = []
    for li, line in enumerate(lines):
        for p in line:
            edges.append((ppos[p], 15 + li))
    return Graph.build(30, edges)


def _pair_partitions(items):
    if not items:
        yield []
        return
    first = items[0]
    for i in range(1, len(items)):
        pair = (first, items[i])
        rest = [x for x in items[1:] if x != items[i]]
        for sub in _pair_partitions(rest):
            yield [pair] + sub


def distance_regular_candidates():
    for n in range(6, 41):
        yield cycle(n)
    yield hypercube(3)
    yield hypercube(4)
    yield hypercube(5)
    for n in range(4, 21):
        yield crown(n)
    yield heawood()
    yield pappus()
    yield dodecahedron()
    yield icosahedron()
    yield tutte_coxeter()
    yield generalized_petersen(10, 2)  # Desargues graph is GP(10,3); both tested
    yield generalized_petersen(10, 3)
    yield generalized_petersen(12, 5)
    yield johnson(6, 3)
    yield kneser(7, 3)
    yield hamming(3, 3)


def build_distance_regular():
    # canonical forms explode on these huge automorphism groups; the
    # intersection array plus the refinement certificate separates every
    # candidate in this curated list
    from wlbound.refine import converged_certificate
    cells: dict[int, dict[tuple, Graph]] = {}
    for g in distance_regular_candidates():
        if g.node_count > 40 or not is_connected(g):
            continue
        ia = intersection_array(g)
        if ia is None or ia.diameter < 3:
            continue  # diameter <= 2 distance-regular graphs are the SRGs
        key = (ia.b, ia.c, converged_certificate(g))
        cells.setdefault(g.node_count, {})[key] = g
    for order in sorted(cells):
        graphs = [g for _, g in sorted(cells[order].items())]
        save_corpus_cell(CORPUS, "distance_regular", order, graphs)
        log(f"distance_regular/{order}: {len(graphs)}")


def build_generated(skip_slow=False):
    t0 = time.time()
    levels = all_graphs_by_order(8)
    for n in range(3, 9):
        save_corpus_cell(CORPUS, "all_nonisomorphic", n, levels[n])
    log(f"all_nonisomorphic 3..8 ({time.time() - t0:.0f}s)")

    for n in range(3, 10):
        save_corpus_cell(CORPUS, "eulerian", n, eulerian_graphs(n))
    log("eulerian 3..9")

    for n in range(8, 14):
        graphs = highly_irregular_graphs(n)
        save_corpus_cell(CORPUS, "highly_irregular", n, graphs)
        log(f"highly_irregular/{n}: {len(graphs)}")

    filtered = {
        "planar_connected": range(3, 9),
        "chordal": range(3, 9),
        "perfect": range(3, 9),
        "self_complementary": range(4, 9),
        "edge_4_critical": range(4, 9),
    }
    if skip_slow:
        return
    for class_name, orders in filtered.items():
        for n in orders:
            graphs = [g for g in levels[n] if check_class(g, class_name)]
            if graphs:
                save_corpus_cell(CORPUS, class_name, n, graphs)
        log(f"{class_name} done")


def build_srg():
    from srg_families import (rook_4x4, shrikhande, triangular_8,
                              chang_graphs, to_masks, srg_params)
    r, s = rook_4x4(), shrikhande()
    save_corpus_cell(CORPUS, "strongly_regular", 16,
                     [g for _, g in sorted(
                         {canonical_form(g): g for g in (r, s)}.items())])
    t8, _ = triangular_8()
    family28 = {canonical_form(g): g for g in [t8] + chang_graphs()}
    assert len(family28) == 4
    for g in family28.values():
        assert srg_params(to_masks(g)) == (28, 12, 6, 4)
    save_corpus_cell(CORPUS, "strongly_regular", 28,
                     [g for _, g in sorted(family28.items())])
    log("strongly_regular 16 + 28")
    # orders 25/26 are produced by srg_joint (see srg_joint.joint_close);
    # order 29 by the Z5 two-graph search plus switching amplification.


if __name__ == "__main__":
    skip_slow = "--skip-slow" in sys.argv
    CORPUS.mkdir(parents=True, exist_ok=True)
    build_generated(skip_slow=skip_slow)
    build_srg()
    build_distance_regular()
    log("done")
