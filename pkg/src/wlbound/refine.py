"""Color refinement: 1-WL and the edge-feature-aware variant 1-WLE.

Colors are content-addressed 128-bit digests of canonical refinement keys,
so equal keys map to equal colors across graphs, runs and worker counts —
no shared color table is needed. Multisets are canonicalized by sorting the
element digests as byte strings and concatenating them.
"""
from __future__ import annotations

import struct
from dataclasses import dataclass
from hashlib import blake2b

from .errors import InitLengthMismatch, LayerNegative
from .graphs import Graph

DIGEST_SIZE = 16


def digest(*parts: bytes) -> bytes:
    """128-bit digest of length-prefixed parts (prefixing kills ambiguity)."""
    h = blake2b(digest_size=DIGEST_SIZE)
    for p in parts:
        h.update(struct.pack("<I", len(p)))
        h.update(p)
    return h.digest()


UNIFORM_TOKEN = digest(b"uniform")


def partition_ids(colors) -> tuple[int, ...]:
    """Colors normalized to first-occurrence class indices (partition shape)."""
    seen: dict = {}
    out = []
    for c in colors:
        if c not in seen:
            seen[c] = len(seen)
        out.append(seen[c])
    return tuple(out)


@dataclass(frozen=True)
class ColoringTrace:
    """Per-round color vectors, round 0 first.

    converged_at is the smallest round whose induced partition equals the
    previous round's partition; None if the round cap was hit first.
    """

    variant: str
    per_round: tuple[tuple[bytes, ...], ...]
    converged_at: int | None

    @property
    def rounds(self) -> int:
        return len(self.per_round) - 1

    def colors_at(self, round: int) -> tuple[bytes, ...]:
        """Colors at a round; rounds past convergence use the converged round."""
        if round < 0:
            raise LayerNegative(f"round {round}")
        stop = self.converged_at if self.converged_at is not None else self.rounds
        return self.per_round[min(round, stop)]

    def partitions(self) -> list[tuple[int, ...]]:
        return [partition_ids(cs) for cs in self.per_round]


def initial_colors(g: Graph, init=None) -> list[bytes]:
    """Round-0 colors: digest of node attribute tuple plus optional init token."""
    if init is not None and len(init) != g.node_count:
        raise InitLengthMismatch(
            f"init length {len(init)} != node_count {g.node_count}"
        )
    colors = []
    for v in range(g.node_count):
        extra = init[v] if init is not None else b""
        colors.append(digest(b"n0", *g.node_attr(v), extra))
    return colors


def refine(g: Graph, use_edge_attrs: bool = False, init=None,
           rounds: int | None = None) -> ColoringTrace:
    """Run 1-WL (or 1-WLE when use_edge_attrs) to convergence or a round cap.

    1-WL round i hashes (previous color, sorted multiset of neighbor previous
    colors); 1-WLE pairs each neighbor color with the incident edge token.
    With no edge attributes present, 1-WLE degenerates to 1-WL by construction
    (every edge carries the same uniform token).
    """
    n = g.node_count
    cap = rounds if rounds is not None else max(n - 1, 0)
    adj = g.adjacency
    edge_tok: list[list[bytes]] | None = None
    if use_edge_attrs:
        # Per-node list of incident-edge token digests aligned with adjacency.
        edge_tok = []
        for v in range(n):
            row = []
            for w in adj[v]:
                attr = g.edge_attr(v, w)
                row.append(digest(b"et", *attr) if attr else UNIFORM_TOKEN)
            edge_tok.append(row)

    colors = initial_colors(g, init)
    per_round = [tuple(colors)]
    part = partition_ids(colors)
    converged_at = None
    for r in range(1, cap + 1):
        nxt = []
        for v in range(n):
            if edge_tok is not None:
                units = sorted(
                    edge_tok[v][i] + colors[w] for i, w in enumerate(adj[v])
                )
                nxt.append(digest(b"we", colors[v], *units))
            else:
                nxt.append(digest(b"wl", colors[v], *sorted(colors[w] for w in adj[v])))
        colors = nxt
        per_round.append(tuple(colors))
        new_part = partition_ids(colors)
        if new_part == part:
            converged_at = r
            break
        part = new_part
    variant = "WLE1" if use_edge_attrs else "WL1"
    return ColoringTrace(variant, tuple(per_round), converged_at)


def certificate(trace: ColoringTrace, round: int | None = None) -> bytes:
    """Digest of the lexicographically sorted color vector at a round.

    round=None means the converged (or last computed) round. Equal
    certificates mean the test cannot distinguish the graphs.
    """
    if round is None:
        round = trace.converged_at if trace.converged_at is not None else trace.rounds
    return digest(b"cert", *sorted(trace.colors_at(round)))


def converged_certificate(g: Graph, use_edge_attrs: bool = False, init=None) -> bytes:
    return certificate(refine(g, use_edge_attrs=use_edge_attrs, init=init))
