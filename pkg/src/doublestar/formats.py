"""graph6, edge-list and DOT serialisation.

graph6 follows the standard encoding: a size header (one byte ``n + 63``
for ``n < 63``, otherwise ``~`` and three 6-bit big-endian bytes), then the
upper triangle in column order ``x(0,1), x(0,2), x(1,2), x(0,3), ...``
packed six bits per byte, zero padded, each byte offset by 63.
"""

from __future__ import annotations

import re

from .graph import Graph, GraphBuilder

GRAPH6_MAX_N = 258047
_HEADER = b">>graph6<<"


class GraphParseError(ValueError):
    """Malformed graph input. ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte offset {offset})")
        self.offset = offset


Graph6Error = GraphParseError


def _size_header(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])


def to_graph6(g: Graph) -> bytes:
    n = g.n
    if n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 emit supports n <= {GRAPH6_MAX_N}, got {n}")
    out = bytearray(_size_header(n))
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, n):
        col = adj[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
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
    base = 0
    if data.startswith(_HEADER):
        base = len(_HEADER)
        data = data[base:]
    if data.endswith(b"\r\n"):
        data = data[:-2]
    elif data.endswith(b"\n"):
        data = data[:-1]
    if not data:
        raise GraphParseError("empty graph6 string", base)
    for i, ch in enumerate(data):
        if not 63 <= ch <= 126:
            raise GraphParseError(f"byte {ch!r} outside the graph6 range 63..126", base + i)
    if data[0] != 126:
        n = data[0] - 63
        pos = 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphParseError("truncated 8-byte graph6 size header", base + len(data))
        n = 0
        for ch in data[2:8]:
            n = (n << 6) | (ch - 63)
        pos = 8
    else:
        if len(data) < 4:
            raise GraphParseError("truncated 4-byte graph6 size header", base + len(data))
        n = 0
        for ch in data[1:4]:
            n = (n << 6) | (ch - 63)
        pos = 4
        if n < 63:
            raise GraphParseError(f"non-minimal size header for n = {n}", base)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        at = base + pos + min(len(body), need)
        raise GraphParseError(
            f"expected {need} adjacency bytes for n = {n}, found {len(body)}", at
        )
    pad = need * 6 - nbits
    if pad and ((body[-1] - 63) & ((1 << pad) - 1)):
        raise GraphParseError("nonzero padding bits", base + pos + need - 1)
    adj = [0] * n
    k = 0
    i, j = 0, 1
    while k < nbits:
        ch = body[k // 6] - 63
        if (ch >> (5 - k % 6)) & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        k += 1
        i += 1
        if i == j:
            i = 0
            j += 1
    return Graph(n, adj)


def to_edge_list(g: Graph) -> bytes:
    lines = [f"# n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return ("\n".join(lines) + "\n").encode("ascii")


_N_HEADER = re.compile(rb"#\s*n\s*[=:]?\s*(\d+)\s*$")


def from_edge_list(data: bytes | str) -> Graph:
    """Parse ``u v`` lines. A ``# n N`` comment fixes the vertex count
    (isolated trailing vertices survive a round trip); without it the count
    is one more than the largest id."""
    if isinstance(data, str):
        data = data.encode("ascii")
    n = None
    pairs: list[tuple[int, int, int]] = []
    offset = 0
    for raw in data.split(b"\n"):
        line = raw.strip()
        if line.startswith(b"#"):
            m = _N_HEADER.match(line)
            if m:
                n = int(m.group(1))
        elif line:
            parts = line.split()
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise GraphParseError(f"expected 'u v', got {line.decode(errors='replace')!r}", offset)
            pairs.append((int(parts[0]), int(parts[1]), offset))
        offset += len(raw) + 1
    if n is None:
        n = 1 + max((max(u, v) for u, v, _ in pairs), default=-1)
    b = GraphBuilder(n)
    for u, v, at in pairs:
        try:
            b.add_edge(u, v)
        except (IndexError, ValueError) as exc:
            raise GraphParseError(str(exc), at) from None
    return b.build()


def to_dot(g: Graph) -> bytes:
    lines = ["graph {"]
    degs = g.degrees()
    lines.extend(f"  {v};" for v in range(g.n) if degs[v] == 0)
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("ascii")


WRITERS = {"g6": to_graph6, "edges": to_edge_list, "dot": to_dot}
READERS = {"g6": from_graph6, "edges": from_edge_list}


def write_graph(g: Graph, fmt: str) -> bytes:
    try:
        writer = WRITERS[fmt]
    except KeyError:
        raise ValueError(f"unknown output format {fmt!r}") from None
    data = writer(g)
    return data + b"\n" if fmt == "g6" else data


def read_graph(data: bytes, fmt: str) -> Graph:
    try:
        reader = READERS[fmt]
    except KeyError:
        raise ValueError(f"unknown input format {fmt!r}") from None
    if fmt == "g6":
        data = data.strip(b" \t\r\n")
    return reader(data)
