"""graph6 codec and DOT export."""

from __future__ import annotations

from .errors import LinforestError
from .graph import Graph, from_edges

_HEADER = ">>graph6<<"


def _encode_order(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise LinforestError(f"order {n} too large for graph6")


def to_graph6(g: Graph) -> bytes:
    """Encode ``g`` as graph6 bytes (no header, no trailing newline)."""
    out = bytearray(_encode_order(g.n))
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def from_graph6(data: bytes | str) -> Graph:
    """Decode one graph6 record; an optional ``>>graph6<<`` header is ignored."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(_HEADER.encode()):
        data = data[len(_HEADER):]
    if not data:
        raise LinforestError("empty graph6 record")
    if any(b < 63 or b > 126 for b in data):
        raise LinforestError("graph6 byte out of range 63..126")
    if data[0] == 126:
        if len(data) < 4 or data[1] == 126:
            raise LinforestError("unsupported graph6 order header")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise LinforestError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return from_edges(n, edges)


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
