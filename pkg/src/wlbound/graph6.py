"""Bit-exact graph6 encoder/decoder.

Record layout: size prefix N(n), then the upper-triangle adjacency bits in
column-major order (for j = 1..n-1 the bits x[0,j] .. x[j-1,j]), packed 6
bits per byte big-endian within the byte, zero-padded, each byte offset by
63 so the record stays printable (bytes 63..126).
"""
from __future__ import annotations

from pathlib import Path

from .errors import InvalidGraph6
from .graphs import Graph

_HEADER = b">>graph6<<"


def _decode_size(data: bytes, line: int) -> tuple[int, int]:
    """Return (n, bytes consumed) for the N(n) size prefix."""
    if not data:
        raise InvalidGraph6("empty record", line)
    b0 = data[0]
    if b0 != 126:
        return b0 - 63, 1
    if len(data) < 2 or data[1] != 126:
        if len(data) < 4:
            raise InvalidGraph6("truncated long-size prefix", line)
        vals = [data[i] - 63 for i in range(1, 4)]
        if any(v < 0 or v > 63 for v in vals):
            raise InvalidGraph6("bad byte in size prefix", line)
        return (vals[0] << 12) | (vals[1] << 6) | vals[2], 4
    if len(data) < 8:
        raise InvalidGraph6("truncated very-long-size prefix", line)
    vals = [data[i] - 63 for i in range(2, 8)]
    if any(v < 0 or v > 63 for v in vals):
        raise InvalidGraph6("bad byte in size prefix", line)
    n = 0
    for v in vals:
        n = (n << 6) | v
    return n, 8


def decode_record(record: bytes, line: int = 0) -> Graph:
    """Decode one graph6 record (no trailing newline) into a Graph."""
    if record.startswith(_HEADER):
        record = record[len(_HEADER):]
    for b in record:
        if b < 63 or b > 126:
            raise InvalidGraph6(f"byte {b} outside printable graph6 range", line)
    n, used = _decode_size(record, line)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = record[used:]
    if len(body) < nbytes:
        raise InvalidGraph6("truncated adjacency bit stream", line)
    if len(body) > nbytes:
        raise InvalidGraph6("record longer than its declared size", line)
    edges = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[bit // 6] - 63
            if (byte >> (5 - bit % 6)) & 1:
                edges.append((i, j))
            bit += 1
    # padding bits must be zero for a canonical record
    while bit < nbytes * 6:
        byte = body[bit // 6] - 63
        if (byte >> (5 - bit % 6)) & 1:
            raise InvalidGraph6("nonzero padding bit", line)
        bit += 1
    return Graph(n, tuple(sorted(edges)))


def encode_record(g: Graph) -> bytes:
    """Encode a Graph as one graph6 record (no newline)."""
    n = g.node_count
    if n <= 62:
        prefix = bytes([n + 63])
    elif n <= 258047:
        prefix = bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    else:
        prefix = bytes([126, 126] + [((n >> s) & 63) + 63 for s in range(30, -1, -6)])
    present = g.edge_index
    out = bytearray(prefix)
    acc = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (1 if (i, j) in present else 0)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc, nbits = 0, 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def load_graph6(data: bytes) -> list[Graph]:
    """Decode every non-empty line of a graph6 byte stream."""
    graphs = []
    for lineno, raw in enumerate(data.splitlines(), start=1):
        record = raw.strip()
        if record:
            graphs.append(decode_record(record, lineno))
    return graphs


def read_graph6_file(path: str | Path) -> list[Graph]:
    return load_graph6(Path(path).read_bytes())


def write_graph6_file(path: str | Path, graphs) -> None:
    Path(path).write_bytes(b"".join(encode_record(g) + b"\n" for g in graphs))
