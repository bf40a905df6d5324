"""Exhaustive search for SRG(29,14,6,7) with a prescribed order-7 rotation.

Vertex set: one fixed point f plus four Z7-orbits O1..O4. Invariant
adjacency is determined by connection sets: D_i = -D_i inside orbit i,
C_ij in Z7 between orbits (C_ji = -C_ij), and the set A of orbits fully
adjacent to f. Degree and fixed-point common-neighbor conditions force the
size profile (|A| = 2, |D1| = |D2|, |C12| = 6 - |D1|, |C13|+|C14| = 7,
opposite blocks complementary-sized...), and the remaining lambda/mu
conditions are cross-correlation equalities over Z7 checked with 7-bit
popcount tables. Each solution is a conference graph on 29 vertices; the
catalog is deduplicated downstream by canonical form.
"""
from __future__ import annotations

import sys
from itertools import combinations
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from wlbound.graphs import Graph

FULL = 127  # Z7 as bits 0..6


def rot(s: int, d: int) -> int:
    d %= 7
    return ((s << d) | (s >> (7 - d))) & FULL


def neg(s: int) -> int:
    out = s & 1
    for d in range(1, 7):
        if (s >> d) & 1:
            out |= 1 << (7 - d)
    return out


def corr(x: int, y: int, d: int) -> int:
    """|x cap (d + y)|."""
    return (x & rot(y, d)).bit_count()


SYM_SETS = []  # D candidates: unions of {1,6},{2,5},{3,4}
for mask in range(8):
    s = 0
    for bit, (a, b) in enumerate(((1, 6), (2, 5), (3, 4))):
        if (mask >> bit) & 1:
            s |= (1 << a) | (1 << b)
    SYM_SETS.append(s)

SUBSETS_BY_SIZE: dict[int, list[int]] = {}
for s in range(128):
    SUBSETS_BY_SIZE.setdefault(s.bit_count(), []).append(s)


def _pair_ok(Ci, Cj, fixed_term, target_set, self_pair):
    """Check common-count conditions for one orbit pair.

    Ci, Cj: lists over m = 1..4 of C_im, C_jm (direction i->m, j->m).
    For every shift d (excluding d=0 when self_pair): count must equal
    6 if d in target_set else 7.
    """
    for d in range(7):
        if self_pair and d == 0:
            continue
        total = fixed_term
        for m in range(4):
            total += corr(Ci[m], Cj[m], d)
        want = 6 if (target_set >> d) & 1 else 7
        if total != want:
            return False
    return True


def search_z7() -> list[Graph]:
    """All conference-29 graphs invariant under the heptad rotation."""
    solutions = []
    # A = {1,2}: orbits 1,2 adjacent to the fixed vertex
    for d1_pairs in range(4):  # |D1|/2
        d1 = d1_pairs * 2
        c12 = 6 - d1
        for D1 in (s for s in SYM_SETS if s.bit_count() == d1):
            for D2 in (s for s in SYM_SETS if s.bit_count() == d1):
                for C12 in SUBSETS_BY_SIZE[c12]:
                    # orbit-1 and orbit-2 rows, joint over c13 split
                    yield_from_rows(D1, D2, C12, solutions)
    return solutions


def yield_from_rows(D1, D2, C12, solutions):
    C21 = neg(C12)
    for c13 in range(8):
        c14 = 7 - c13
        c23, c24 = 7 - c13, 7 - c14
        for C13 in SUBSETS_BY_SIZE[c13]:
            for C14 in SUBSETS_BY_SIZE[c14]:
                # orbit-1 self condition: fixed contributes 1 (1 in A, 1 in A)
                row1 = (D1, C12, C13, C14)
                if not _pair_ok(row1, row1, 1, D1, True):
                    continue
                for C23 in SUBSETS_BY_SIZE[c23]:
                    for C24 in SUBSETS_BY_SIZE[c24]:
                        row2 = (C21, D2, C23, C24)
                        if not _pair_ok(row2, row2, 1, D2, True):
                            continue
                        # pair (1,2): fixed term [1 in A][2 in A] = 1
                        if not _pair_ok(row1, row2, 1, C12, False):
                            continue
                        _complete(row1, row2, solutions)


def _complete(row1, row2, solutions):
    D1, C12, C13, C14 = row1
    C21, D2, C23, C24 = row2
    for d3 in (0, 2, 4, 6):
        c34 = 7 - d3
        for D3 in (s for s in SYM_SETS if s.bit_count() == d3):
            for D4 in (s for s in SYM_SETS if s.bit_count() == d3):
                for C34 in SUBSETS_BY_SIZE[c34]:
                    row3 = (neg(C13), neg(C23), D3, C34)
                    row4 = (neg(C14), neg(C24), neg(C34), D4)
                    if not _pair_ok(row3, row3, 0, D3, True):
                        continue
                    if not _pair_ok(row4, row4, 0, D4, True):
                        continue
                    if not _pair_ok(row1, row3, 0, C13, False):
                        continue
                    if not _pair_ok(row1, row4, 0, C14, False):
                        continue
                    if not _pair_ok(row2, row3, 0, C23, False):
                        continue
                    if not _pair_ok(row2, row4, 0, C24, False):
                        continue
                    if not _pair_ok(row3, row4, 0, C34, False):
                        continue
                    solutions.append(_ratify(row1, row2, row3, row4))


def _ratify(row1, row2, row3, row4) -> Graph:
    """Materialize the invariant graph: vertex 0 fixed, orbits 1+7(i-1)+a."""
    rows = (row1, row2, row3, row4)
    edges = set()
    for i in range(4):
        for j in range(4):
            Cij = rows[i][j]
            for a in range(7):
                for d in range(7):
                    if (Cij >> d) & 1:
                        u = 1 + 7 * i + a
                        v = 1 + 7 * j + (a + d) % 7
                        if u != v:
                            edges.add((min(u, v), max(u, v)))
    for m in (0, 1):  # A = {1,2} -> orbit indices 0,1
        for a in range(7):
            edges.add((0, 1 + 7 * m + a))
    return Graph(29, tuple(sorted(edges)))


if __name__ == "__main__":
    sols = search_z7()
    print(f"Z7-invariant solutions (labeled): {len(sols)}")
