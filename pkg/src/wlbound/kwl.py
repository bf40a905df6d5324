"""Higher-order Weisfeiler-Lehman tests over k-tuples of vertices.

Oblivious k-WL initializes each tuple with its ordered atomic type (the
k x k same/adjacent/non-adjacent matrix with edge tokens, plus the node
attribute tuple in order) and updates with index-wise neighborhood
multisets. The folklore variant aggregates, per substituted vertex w, the
ordered k-sequence of single-position substitution colors, which is
strictly stronger for the same k.

Tuple colors are content-addressed digests like the 1-WL colors: per round,
tuples are grouped by numpy row-uniqueness on rank keys, and one digest is
computed per class from the class members' previous digests in byte-sorted
order. Work arrays scale as n^(k+1).
"""
from __future__ import annotations

import numpy as np

from .errors import TupleBudgetExceeded
from .graphs import Graph
from .refine import ColoringTrace, DIGEST_SIZE, digest

DEFAULT_TUPLE_BUDGET = 16_000_000


def _unique_rows(key: np.ndarray):
    """(class ids per row, representative row indices, class count)."""
    kb = np.ascontiguousarray(key)
    void = kb.view([("", kb.dtype)] * kb.shape[1]).ravel()
    _, index, inverse = np.unique(void, return_index=True, return_inverse=True)
    return inverse.astype(np.int64), index, len(index)


def _digest_rows(tag: bytes, prev: np.ndarray, blocks: list[np.ndarray],
                 rank_digests: np.ndarray) -> list[bytes]:
    """One digest per row: tag || prev digest || per-block member digests."""
    parts = [rank_digests[prev]]
    for b in blocks:
        parts.append(rank_digests[b].reshape(b.shape[0], -1))
    mat = np.concatenate(parts, axis=1)
    return [digest(tag, row.tobytes()) for row in mat]


def _byte_ranks(digests: list[bytes]) -> tuple[np.ndarray, np.ndarray]:
    """Map class id -> byte-sort rank, and rank -> 16-byte digest row."""
    order = sorted(range(len(digests)), key=digests.__getitem__)
    rank_of = np.empty(len(digests), dtype=np.int64)
    for r, cls in enumerate(order):
        rank_of[cls] = r
    rank_digests = np.frombuffer(
        b"".join(digests[cls] for cls in order), dtype=np.uint8
    ).reshape(len(digests), DIGEST_SIZE)
    return rank_of, rank_digests


def _atomic_types(g: Graph, k: int):
    """Round-0 class ids and digests over the tuple grid."""
    n = g.node_count
    attr_keys = sorted({g.node_attr(v) for v in range(n)})
    attr_of = {a: i for i, a in enumerate(attr_keys)}
    attr_digests = [digest(b"na", *a) for a in attr_keys]
    attr_ids = np.array([attr_of[g.node_attr(v)] for v in range(n)], dtype=np.int32)

    etok_keys = sorted(set(g.edge_attrs)) if g.edge_attrs is not None else [()]
    etok_of = {a: i for i, a in enumerate(etok_keys)}
    etok_digests = [digest(b"ea", *a) for a in etok_keys]
    pair = np.ones((n, n), dtype=np.int32)  # 1 = non-adjacent
    np.fill_diagonal(pair, 0)               # 0 = same vertex
    for i, (u, v) in enumerate(g.edges):
        t = 2 + (etok_of[g.edge_attrs[i]] if g.edge_attrs is not None else 0)
        pair[u, v] = pair[v, u] = t

    idx = np.indices((n,) * k).reshape(k, -1).astype(np.int32)
    cols = [pair[idx[i], idx[j]] for i in range(k) for j in range(k)]
    cols += [attr_ids[idx[i]] for i in range(k)]
    key = np.stack(cols, axis=1)
    inverse, index, count = _unique_rows(key)
    digests = []
    for rep in index:
        row = key[rep]
        parts: list[bytes] = [b"%d" % k]
        for c in row[: k * k]:
            if c == 0:
                parts.append(b"\x00")
            elif c == 1:
                parts.append(b"\x01")
            else:
                parts.append(b"\x02" + etok_digests[c - 2])
        for a in row[k * k:]:
            parts.append(attr_digests[a])
        digests.append(digest(b"k0", *parts))
    return inverse, digests


def kwl_refine(g: Graph, k: int, folklore: bool = False,
               rounds: int | None = None,
               tuple_budget: int = DEFAULT_TUPLE_BUDGET) -> ColoringTrace:
    """Run oblivious (or folklore) k-WL to convergence or a round cap."""
    if k < 1:
        raise ValueError("k must be >= 1")
    n = g.node_count
    if n == 0:
        return ColoringTrace("FKWL(%d)" % k if folklore else "KWL(%d)" % k, ((),), 0)
    if n ** k > tuple_budget:
        raise TupleBudgetExceeded(k, n, tuple_budget)
    shape = (n,) * k
    total = n ** k
    cap = rounds if rounds is not None else total - 1

    ids, digests = _atomic_types(g, k)
    per_round = [_materialize(ids, digests)]
    classes = len(digests)
    converged_at = None
    tag = b"fkwl" if folklore else b"kwl"

    for r in range(1, cap + 1):
        rank_of, rank_digests = _byte_ranks(digests)
        R = rank_of[ids].reshape(shape).astype(np.int64)
        if folklore:
            subs = []
            for j in range(k):
                Rm = np.moveaxis(R, j, -1)
                Fj = np.broadcast_to(np.expand_dims(Rm, axis=j), shape + (n,))
                subs.append(Fj.reshape(total, n))
            seq = np.stack(subs, axis=2).reshape(total * n, k)
            seq_inv, seq_index, _ = _unique_rows(seq)
            seq_digests = _digest_rows(
                b"fseq", seq[seq_index, 0], [seq[seq_index, 1:]], rank_digests
            )
            s_rank, s_rankd = _byte_ranks(seq_digests)
            W = np.sort(s_rank[seq_inv].reshape(total, n), axis=1)
            key = np.concatenate([R.reshape(total, 1), W], axis=1)
            inverse, index, count = _unique_rows(key)
            # first column ranks tuple digests, the rest rank seq digests
            digests = [
                digest(tag, rank_digests[key[rep, 0]].tobytes(),
                       s_rankd[key[rep, 1:]].tobytes())
                for rep in index
            ]
        else:
            # each tuple's j-block is the sorted line through it along axis j
            blocks = []
            for j in range(k):
                Rm = np.moveaxis(R, j, -1)
                Sm = np.sort(Rm, axis=-1)
                Fj = np.broadcast_to(np.expand_dims(Sm, axis=j), shape + (n,))
                blocks.append(Fj.reshape(total, n))
            key = np.concatenate([R.reshape(total, 1)] + blocks, axis=1)
            inverse, index, count = _unique_rows(key)
            digests = [
                digest(tag, rank_digests[key[rep, 0]].tobytes(),
                       *(rank_digests[key[rep, 1 + j * n: 1 + (j + 1) * n]]
                         .tobytes() for j in range(k)))
                for rep in index
            ]
        ids = inverse
        per_round.append(_materialize(ids, digests))
        if count == classes:
            converged_at = r
            break
        classes = count

    variant = f"FKWL({k})" if folklore else f"KWL({k})"
    return ColoringTrace(variant, tuple(per_round), converged_at)


def _materialize(ids: np.ndarray, digests: list[bytes]) -> tuple[bytes, ...]:
    return tuple(digests[c] for c in ids)
