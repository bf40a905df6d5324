"""Positional encodings: random-walk return probabilities and Laplacian
eigenvector coordinates.

The eigensolver is cyclic Jacobi rotation on the dense symmetric normalized
Laplacian: slower than LAPACK but with a fixed operation order, so encoding
tokens are reproducible bit-for-bit across BLAS builds.
"""
from __future__ import annotations

import numpy as np

from ..errors import DimExceedsOrder
from ..graphs import Graph
from .centrality import components

_JACOBI_TOL = 1e-10
_EIGENVALUE_GROUP_TOL = 1e-8


def adjacency_matrix(g: Graph) -> np.ndarray:
    A = np.zeros((g.node_count, g.node_count), dtype=np.float64)
    for u, v in g.edges:
        A[u, v] = A[v, u] = 1.0
    return A


def rwse_values(g: Graph, steps: int) -> list[list[float]]:
    """Per vertex, the random-walk return probabilities at 1..steps hops.

    P = D^-1 A with all-zero rows for isolated vertices; no self-loops means
    the step-1 diagonal is always zero.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    n = g.node_count
    A = adjacency_matrix(g)
    deg = A.sum(axis=1)
    P = np.divide(A, deg[:, None], out=np.zeros_like(A), where=deg[:, None] > 0)
    out = [[] for _ in range(n)]
    M = np.eye(n)
    for _ in range(steps):
        M = M @ P
        d = np.diagonal(M)
        for v in range(n):
            out[v].append(float(d[v]))
    return out


def jacobi_eigh(M: np.ndarray, tol: float = _JACOBI_TOL,
                max_sweeps: int = 200) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.

    Returns (eigenvalues ascending, eigenvector columns aligned with them).
    """
    n = M.shape[0]
    A = M.astype(np.float64).copy()
    V = np.eye(n)
    if n == 1:
        return A.diagonal().copy(), V
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(np.tril(A, -1) ** 2))
        if off <= tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= tol / (n * n):
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + np.sqrt(1.0 + theta * theta))
                if theta < 0:
                    t = -t
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                rp, rq = A[p, :].copy(), A[q, :].copy()
                A[p, :] = c * rp - s * rq
                A[q, :] = s * rp + c * rq
                cp, cq = A[:, p].copy(), A[:, q].copy()
                A[:, p] = c * cp - s * cq
                A[:, q] = s * cp + c * cq
                vp, vq = V[:, p].copy(), V[:, q].copy()
                V[:, p] = c * vp - s * vq
                V[:, q] = s * vp + c * vq
    vals = A.diagonal().copy()
    order = np.argsort(vals, kind="stable")
    return vals[order], V[:, order]


def normalized_laplacian(g: Graph) -> np.ndarray:
    """L = I - D^-1/2 A D^-1/2 with zero rows for isolated vertices."""
    n = g.node_count
    A = adjacency_matrix(g)
    deg = A.sum(axis=1)
    inv_sqrt = np.divide(1.0, np.sqrt(deg), out=np.zeros(n), where=deg > 0)
    L = -A * inv_sqrt[:, None] * inv_sqrt[None, :]
    for v in range(n):
        if deg[v] > 0:
            L[v, v] = 1.0
    return L


def lappe_values(g: Graph, dims: int) -> list[list[float]]:
    """Per vertex, coordinates from the dims lowest non-kernel eigenvectors.

    The kernel (one constant eigenvector per connected component) is skipped
    by count. Simple eigenvalues contribute |phi(v)| (absolute value kills
    the sign ambiguity); within an eigenvalue multiplicity group individual
    eigenvectors are not canonical, so every consumed dimension of the group
    contributes the vertex's eigenspace projection norm instead, which is
    basis-free and therefore isomorphism-equivariant. Missing dimensions
    (tiny graphs) pad with zeros.
    """
    n = g.node_count
    if dims < 1:
        raise ValueError("dims must be >= 1")
    if dims > n:
        raise DimExceedsOrder(f"dims {dims} > node count {n}")
    kernel = len(components(g))
    vals, vecs = jacobi_eigh(normalized_laplacian(g))
    take = min(dims, n - kernel)
    # group eigenvalue indices (over the full spectrum) by multiplicity
    groups: list[list[int]] = []
    for i in range(kernel, kernel + take):
        if groups and vals[i] - vals[groups[-1][0]] <= _EIGENVALUE_GROUP_TOL:
            groups[-1].append(i)
        else:
            groups.append([i])
    if groups:
        # extend the last group to its full eigenspace so the projection
        # norm does not depend on where `dims` cuts
        last = groups[-1][-1]
        while last + 1 < n and vals[last + 1] - vals[groups[-1][0]] <= \
                _EIGENVALUE_GROUP_TOL:
            last += 1
            groups[-1].append(last)
    out = []
    for v in range(n):
        coords: list[float] = []
        for grp in groups:
            if len(grp) == 1:
                value = abs(float(vecs[v, grp[0]]))
                width = 1
            else:
                value = float(np.sqrt(np.sum(vecs[v, grp] ** 2)))
                width = min(len(grp), take - len(coords))
            coords.extend([value] * width)
        coords.extend([0.0] * (dims - len(coords)))
        out.append(coords)
    return out
