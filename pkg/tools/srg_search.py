"""Stochastic search for strongly regular graphs of given parameters.

Simulated annealing over k-regular graphs with double-edge-swap moves;
energy is the total deviation of common-neighbor counts from (lambda, mu).
Every zero-energy hit is amplified deterministically: Seidel descendant
moves sweep the hit's two-graph switching class, Godsil-McKay switchings
jump between classes. The search stops when the published family size is
reached; exceeding it would mean a checker bug and raises.
"""
from __future__ import annotations

import random
import sys
import time
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from wlbound.graphs import Graph
from wlbound.bench.iso import canonical_form

from srg_families import (
    from_masks,
    gm_switchings,
    seidel_descendants,
    srg_params,
    to_masks,
)


def _energy(A: np.ndarray, k: int, lam: int, mu: int) -> int:
    # off-diagonal target is mu + (lam - mu) * A; the diagonal of A @ A is
    # the constant degree k and is subtracted in closed form
    n = A.shape[0]
    M = A @ A
    X = np.abs(M - mu - (lam - mu) * A)
    return (int(X.sum()) - n * abs(k - mu)) // 2


def _random_regular(n: int, k: int, rng: random.Random) -> np.ndarray:
    """Random k-regular graph: circulant start, randomized by edge swaps.

    Stub matching stalls for dense degrees (k ~ n/2), so mix a circulant
    with ~10m successful double-edge swaps instead.
    """
    if k % 2 == 1 and n % 2 == 1:
        raise ValueError("no k-regular graph with odd n and odd k")
    A = np.zeros((n, n), dtype=np.int16)
    for v in range(n):
        for d in range(1, k // 2 + 1):
            w = (v + d) % n
            A[v, w] = A[w, v] = 1
    if k % 2 == 1:
        half = n // 2
        for v in range(half):
            A[v, v + half] = A[v + half, v] = 1
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if A[u, v]]
    target = 10 * len(edges)
    done = 0
    while done < target:
        i, j = rng.randrange(len(edges)), rng.randrange(len(edges))
        if i == j:
            continue
        a, b = edges[i]
        c, d = edges[j]
        if rng.random() < 0.5:
            c, d = d, c
        if len({a, b, c, d}) < 4 or A[a, c] or A[b, d]:
            continue
        A[a, b] = A[b, a] = 0
        A[c, d] = A[d, c] = 0
        A[a, c] = A[c, a] = 1
        A[b, d] = A[d, b] = 1
        edges[i] = (min(a, c), max(a, c))
        edges[j] = (min(b, d), max(b, d))
        done += 1
    return A


def _anneal(n: int, k: int, lam: int, mu: int, rng: random.Random,
            max_steps: int = 150_000, temp0: float = 1.2,
            temp_floor: float = 0.12) -> np.ndarray | None:
    A = _random_regular(n, k, rng)
    e = _energy(A, k, lam, mu)
    temp = temp0
    cooling = 10 ** (-3.0 / max_steps)  # three decades over the run
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if A[u, v]]
    for step in range(max_steps):
        if e == 0:
            return A
        temp = max(temp * cooling, temp_floor)
        i, j = rng.randrange(len(edges)), rng.randrange(len(edges))
        if i == j:
            continue
        a, b = edges[i]
        c, d = edges[j]
        if rng.random() < 0.5:
            c, d = d, c
        if len({a, b, c, d}) < 4 or A[a, c] or A[b, d]:
            continue
        A[a, b] = A[b, a] = 0
        A[c, d] = A[d, c] = 0
        A[a, c] = A[c, a] = 1
        A[b, d] = A[d, b] = 1
        e2 = _energy(A, k, lam, mu)
        if e2 <= e or rng.random() < pow(2.718281828, (e - e2) / temp):
            e = e2
            edges[i] = (min(a, c), max(a, c))
            edges[j] = (min(b, d), max(b, d))
        else:
            A[a, c] = A[c, a] = 0
            A[b, d] = A[d, b] = 0
            A[a, b] = A[b, a] = 1
            A[c, d] = A[d, c] = 1
    return None


def _masks_from_matrix(A: np.ndarray):
    n = A.shape[0]
    return tuple(
        sum(1 << v for v in range(n) if A[u, v]) for u in range(n)
    )


def search_family(params: tuple[int, int, int, int], target: int,
                  seeds=(), gm_sizes=(4, 6), seed_rng: int = 20240501,
                  time_limit: float | None = None, verbose: bool = True):
    """Collect `target` pairwise non-isomorphic SRGs with the parameters."""
    n, k, lam, mu = params
    rng = random.Random(seed_rng)
    found: dict[bytes, Graph] = {}
    pending: list[tuple[int, ...]] = []

    def register(masks) -> bool:
        if srg_params(masks) != params:
            return False
        g = from_masks(masks)
        form = canonical_form(g)
        if form in found:
            return False
        found[form] = g
        pending.append(masks)
        if verbose:
            print(f"  [{params}] #{len(found)}/{target}", flush=True)
        if len(found) > target:
            raise RuntimeError(f"family {params} exceeded classified count")
        return True

    for s in seeds:
        register(to_masks(s))

    start = time.time()
    while len(found) < target:
        # deterministic amplification first
        while pending and len(found) < target:
            masks = pending.pop()
            for dm in seidel_descendants(from_masks(masks)):
                register(dm)
            for sm in gm_switchings(masks, gm_sizes):
                register(sm)
        if len(found) >= target:
            break
        if time_limit is not None and time.time() - start > time_limit:
            raise RuntimeError(
                f"family {params}: time limit with {len(found)}/{target}"
            )
        A = _anneal(n, k, lam, mu, rng)
        if A is not None:
            register(_masks_from_matrix(A))
    return sorted(found.items())
