"""Bit-exact graph6 encoding and decoding (one graph per line).

The body packs the upper triangle of the adjacency matrix column by column
(x(0,1), x(0,2), x(1,2), x(0,3), ...) into 6-bit groups, each printed as the
ASCII character value+63.  Orders up to 62 use a single size byte; 63 and 64
use the '~' long form.  A leading ">>graph6<<" header is tolerated on decode
and never emitted.
"""

from __future__ import annotations

from .graph import MAX_VERTICES, Graph

_HEADER = b">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def to_graph6(g: Graph) -> bytes:
    if g.n <= 62:
        out = [g.n + 63]
    else:
        out = [126, 63 + (g.n >> 12), 63 + (g.n >> 6 & 63), 63 + (g.n & 63)]
    acc = 0
    nbits = 0
    for v in range(1, g.n):
        col = g.adj[v]
        for u in range(v):
            acc = acc << 1 | (col >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def from_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.rstrip(b"\r\n")
    base = 0
    if data.startswith(_HEADER):
        base = len(_HEADER)
        data = data[base:]
    if not data:
        raise Graph6Error("empty graph6 string", base)
    pos = 0
    c = data[0]
    if c == 126:
        # long form: '~' then three sextets (orders above 64 rejected later)
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("graph6 orders above 258047 not supported", base + 1)
        if len(data) < 4:
            raise Graph6Error("truncated long-form size", base + len(data))
        n = 0
        for i in (1, 2, 3):
            if not 63 <= data[i] <= 126:
                raise Graph6Error(f"invalid size byte {data[i]!r}", base + i)
            n = n << 6 | (data[i] - 63)
        pos = 4
    else:
        if not 63 <= c <= 125:
            raise Graph6Error(f"invalid size byte {c!r}", base)
        n = c - 63
        pos = 1
    if n < 1 or n > MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} outside 1..{MAX_VERTICES}", base)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos != nbytes:
        raise Graph6Error(
            f"body has {len(data) - pos} bytes, expected {nbytes}", base + pos
        )
    adj = [0] * n
    bit = 0
    u, v = 0, 1
    for i in range(nbytes):
        b = data[pos + i]
        if not 63 <= b <= 126:
            raise Graph6Error(f"invalid body byte {b!r}", base + pos + i)
        group = b - 63
        for k in range(5, -1, -1):
            if bit >= nbits:
                if group >> k & 1:
                    raise Graph6Error("nonzero padding bits", base + pos + i)
                continue
            if group >> k & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            bit += 1
            u += 1
            if u == v:
                u, v = 0, v + 1
    return Graph._raw(n, tuple(adj))


def write_graph6(graphs, path) -> int:
    """Write one graph6 line per graph; returns the number written."""
    count = 0
    with open(path, "wb") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + b"\n")
            count += 1
    return count


def read_graph6(path):
    """Yield graphs from a graph6 file, skipping blank lines."""
    with open(path, "rb") as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield from_graph6(line)
