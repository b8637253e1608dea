"""graph6 encoding and decoding.

The format packs the upper triangle of the adjacency matrix column by
column, x(0,1), x(0,2), x(1,2), x(0,3), ..., six bits per printable byte
offset by 63.  Decoding errors carry the byte offset of the offending
character so malformed corpus lines are easy to locate.
"""

from __future__ import annotations

from .graph import Graph

_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input; `offset` is the byte position in the line."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (optional >>graph6<< header allowed)."""
    s = text.strip()
    base = 0
    if s.startswith(_HEADER):
        base = len(_HEADER)
        s = s[base:]
    if not s:
        raise Graph6Error("empty graph6 string", base)
    if s[0] == ":":
        raise Graph6Error("sparse6 input is not supported", base)
    if s[0] == "&":
        raise Graph6Error("digraph6 input is not supported", base)

    data = []
    for i, ch in enumerate(s):
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise Graph6Error(f"byte {ch!r} outside graph6 range", base + i)
        data.append(v)

    # vertex count: one byte up to 62, '~' prefix for 63..258047
    if data[0] < 63:
        n = data[0]
        pos = 1
    else:
        if len(data) < 4:
            raise Graph6Error("truncated vertex count", base + len(s))
        if data[1] == 63:
            raise Graph6Error("graphs beyond 258047 vertices unsupported", base + 1)
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise Graph6Error(
            f"truncated bit vector: need {nbytes} bytes, have {len(data) - pos}",
            base + len(s),
        )
    if len(data) - pos > nbytes:
        raise Graph6Error("trailing bytes after bit vector", base + pos + nbytes)

    rows = [0] * n
    idx = 0
    i, j = 0, 1
    for b in range(pos, pos + nbytes):
        chunk = data[b]
        for shift in range(5, -1, -1):
            if idx >= nbits:
                if (chunk >> shift) & 1:
                    raise Graph6Error("nonzero padding bits", base + b)
                continue
            if (chunk >> shift) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph.from_rows(rows)


def to_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 line (no header, no newline)."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + chr((n >> 12) + 63) + chr(((n >> 6) & 63) + 63) + chr((n & 63) + 63)
    else:
        raise ValueError("graphs beyond 258047 vertices unsupported")

    bits = []
    for j in range(1, n):
        col = g.row(j)
        for i in range(j):
            bits.append((col >> i) & 1)
    chars = []
    for b in range(0, len(bits), 6):
        chunk = 0
        for shift, bit in enumerate(bits[b : b + 6]):
            chunk |= bit << (5 - shift)
        chars.append(chr(chunk + 63))
    return head + "".join(chars)
