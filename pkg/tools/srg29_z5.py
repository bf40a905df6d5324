"""Search for conference matrices of order 30 with a free Z5 action.

Seidel matrix S on 30 points, six orbits of five, every block a circulant
over Z5 (entries +-1; diagonal blocks symmetric, zero diagonal).
S^2 = 29 I reduces to circular correlation identities per orbit pair:

    sum_m corr(B[i][m], B[j][m]) = 29*e0 if i == j else 0,

with corr(x, y)[d] = sum_e x[e] y[e-d]. Rows are filled orbit by orbit,
block by block, accumulating every affected correlation sum with prefix
bounds (each undecided block moves a coordinate by at most 5), so the tree
stays narrow. First-row blocks are normalized up to orbit rotation.

Descendants of each solution are SRG(29,14,6,7) candidates.
"""
from __future__ import annotations

import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

T = 6  # orbits of size 5


def vec(bits: int) -> tuple[int, ...]:
    return tuple(1 if (bits >> i) & 1 else -1 for i in range(5))


def rev_bits(bits: int) -> int:
    out = bits & 1
    for d in range(1, 5):
        if (bits >> d) & 1:
            out |= 1 << (5 - d)
    return out


def corr(x: tuple, y: tuple) -> tuple[int, ...]:
    return tuple(
        sum(x[e] * y[(e - d) % 5] for e in range(5)) for d in range(5)
    )


ALL = list(range(32))
VECS = {b: vec(b) for b in ALL}
# diagonal blocks: first row (0, s1, s2, s2, s1) encoded separately
DIAGS = []
for s1 in (1, -1):
    for s2 in (1, -1):
        DIAGS.append((0, s1, s2, s2, s1))

CORR = {}
for x in ALL:
    for y in ALL:
        CORR[(x, y)] = corr(VECS[x], VECS[y])
CORR_D = {}
for i, d in enumerate(DIAGS):
    for y in ALL:
        CORR_D[(i, y)] = corr(d, VECS[y])
    for j, d2 in enumerate(DIAGS):
        CORR_D[(i, -1 - j)] = corr(d, d2)


def shift_class_reps() -> list[int]:
    seen = set()
    reps = []
    for b in ALL:
        key = min(
            tuple(VECS[b][(e - k) % 5] for e in range(5)) for k in range(5)
        )
        if key not in seen:
            seen.add(key)
            reps.append(b)
    return reps


REPS = shift_class_reps()


def add5(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3], a[4] + b[4])


def search(verbose: bool = False) -> list[list[list[int]]]:
    """Returns solutions as block tables: row i -> list of 6 block codes.

    Off-diagonal blocks are 0..31 bit codes (direction i -> j for i < j
    stored at [i][j], the reverse at [j][i]); diagonal entries are diag
    indices 0..3 stored negated as -1-idx.
    """
    blocks = [[None] * T for _ in range(T)]
    solutions: list[list[list[int]]] = []

    def block_corr(i: int, m: int, j: int):
        """corr(B[i][m], B[j][m]) from stored codes."""
        a, b = blocks[i][m], blocks[j][m]
        if a < 0:
            return CORR_D[(-1 - a, b)]
        if b < 0:
            return corr(VECS[a], DIAGS[-1 - b])
        return CORR[(a, b)]

    def fill_row(i: int):
        if i == T:
            solutions.append([[blocks[a][b] for b in range(T)] for a in range(T)])
            if verbose:
                print(f"  solution #{len(solutions)}", flush=True)
            return

        # conditions affected while filling row i: (a, i) for a <= i;
        # partial sums over the already-decided blocks m <= i
        later = list(range(i + 1, T))
        targets = [(0, 0, 0, 0, 0)] * i + [(29, 0, 0, 0, 0)]

        def place(idx: int, sums):
            remaining = len(later) - idx
            for a in range(i + 1):
                t = targets[a]
                s = sums[a]
                for d in range(5):
                    gap = s[d] - t[d]
                    if abs(gap) > 5 * remaining:
                        return
                    # every remaining block moves the sum by an odd amount
                    # (diagonal blocks contribute even; only off-diagonals
                    # remain at this point)
                    if (gap + remaining) % 2:
                        return
            if idx == len(later):
                fill_row(i + 1)
                return
            j = later[idx]
            options = REPS if i == 0 else ALL
            for code in options:
                blocks[i][j] = code
                blocks[j][i] = rev_bits(code)
                new_sums = []
                for a in range(i + 1):
                    # contribution corr(B[a][j], B[i][j])
                    if a == i:
                        contrib = CORR[(code, code)]
                    else:
                        contrib = CORR[(blocks[a][j], code)]
                    new_sums.append(add5(sums[a], contrib))
                place(idx + 1, new_sums)
            blocks[i][j] = None
            blocks[j][i] = None

        for di in range(4):
            blocks[i][i] = -1 - di
            base = []
            for a in range(i + 1):
                s = (0, 0, 0, 0, 0)
                for m in range(i + 1):
                    s = add5(s, block_corr(a, m, i))
                base.append(s)
            place(0, base)
        blocks[i][i] = None

    fill_row(0)
    return solutions


def solution_to_seidel(sol) -> np.ndarray:
    S = np.zeros((5 * T, 5 * T), dtype=np.int64)
    for i in range(T):
        for j in range(T):
            code = sol[i][j]
            row = DIAGS[-1 - code] if code < 0 else VECS[code]
            for a in range(5):
                for b in range(5):
                    S[5 * i + a, 5 * j + b] = row[(b - a) % 5]
    return S


def descendant_adjacency(S: np.ndarray, p: int) -> np.ndarray:
    n = S.shape[0]
    sign = S[p].copy()
    sign[p] = 1
    Dg = np.diag(sign)
    Tm = Dg @ S @ Dg
    keep = [v for v in range(n) if v != p]
    core = Tm[np.ix_(keep, keep)]
    A = (core == -1).astype(np.int64)
    np.fill_diagonal(A, 0)
    return A


if __name__ == "__main__":
    sols = search(verbose=True)
    print(f"Z5-invariant Seidel matrices: {len(sols)}")
