"""Meet-in-the-middle version of the Z5-orbit conference matrix search.

Same mathematics as srg29_z5 (six Z5 orbits, circulant Seidel blocks,
correlation identities from S^2 = 29I), but each row's undecided blocks are
split into two halves joined by exact partial-sum hashing, which removes
the deep backtracking over 32^k block combinations.
"""
from __future__ import annotations

import sys
import time
from itertools import product
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from srg29_z5 import (ALL, CORR, DIAGS, REPS, VECS, add5, corr, rev_bits,
                      solution_to_seidel, descendant_adjacency)

T = 6


def search(verbose=True) -> list[list[list[int]]]:
    t_start = time.time()
    AUTO = {c: CORR[(c, c)] for c in ALL}

    solutions = []
    blocks = [[None] * T for _ in range(T)]

    def block_corr(a, m, i):
        """corr(B[a][m], B[i][m]) over stored codes (negatives = diags)."""
        x, y = blocks[a][m], blocks[i][m]
        if x < 0:
            base = DIAGS[-1 - x]
            return corr(base, DIAGS[-1 - y] if y < 0 else VECS[y])
        if y < 0:
            return corr(VECS[x], DIAGS[-1 - y])
        return CORR[(x, y)]

    def full_check(i, targets) -> bool:
        for a in range(i + 1):
            s = (0, 0, 0, 0, 0)
            for m in range(T):
                s = add5(s, block_corr(a, m, i))
            if s != targets[a]:
                return False
        return True

    def complete_row(i: int):
        targets = [(0, 0, 0, 0, 0)] * i + [(29, 0, 0, 0, 0)]
        later = list(range(i + 1, T))

        if not later:
            for di in range(4):
                blocks[i][i] = -1 - di
                if full_check(i, targets):
                    solutions.append(
                        [[blocks[x][y] for y in range(T)] for x in range(T)])
                    if verbose:
                        print(f"  solution #{len(solutions)} "
                              f"({time.time() - t_start:.0f}s)", flush=True)
            blocks[i][i] = None
            return

        half = (len(later) + 1) // 2
        left, right = later[:half], later[half:]
        conds = list(range(i + 1))
        options = REPS if i == 0 else ALL

        def half_sums(combo, positions):
            sums = []
            for a in conds:
                s = (0, 0, 0, 0, 0)
                for j, c in zip(positions, combo):
                    if a == i:
                        s = add5(s, AUTO[c])
                    else:
                        s = add5(s, CORR[(blocks[a][j], c)])
                sums.append(s)
            return sums

        for di in range(4):
            blocks[i][i] = -1 - di
            base = []
            for a in conds:
                s = (0, 0, 0, 0, 0)
                for m in range(i + 1):
                    s = add5(s, block_corr(a, m, i))
                base.append(s)

            table: dict[tuple, list[tuple]] = {}
            for combo in product(options, repeat=len(left)):
                key = tuple(s for s in map(tuple, half_sums(combo, left)))
                table.setdefault(key, []).append(combo)

            for combo in product(options, repeat=len(right)):
                sums = half_sums(combo, right)
                key = tuple(
                    tuple(targets[a][d] - base[a][d] - sums[a][d]
                          for d in range(5))
                    for a in conds
                )
                for lcombo in table.get(key, ()):
                    for j, c in zip(left, lcombo):
                        blocks[i][j] = c
                        blocks[j][i] = rev_bits(c)
                    for j, c in zip(right, combo):
                        blocks[i][j] = c
                        blocks[j][i] = rev_bits(c)
                    assert full_check(i, targets)
                    complete_row(i + 1)
                    for j in later:
                        blocks[i][j] = None
                        blocks[j][i] = None
            blocks[i][i] = None

    complete_row(0)
    return solutions


if __name__ == "__main__":
    sols = search()
    print(f"solutions: {len(sols)}")
