"""graph6 and edge-list readers/writers.

Only the single-byte header form is supported (n <= 62).
"""

from __future__ import annotations

from pathlib import Path

from .graph import Graph, build_graph

MAX_N = 62
_HEADER = b">>graph6<<"


class ParseError(ValueError):
    """Malformed input. ``offset`` is the byte offset of the offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def to_graph6(g: Graph) -> str:
    n = g.n
    if n > MAX_N:
        raise ValueError(f"graph6 writer supports n <= {MAX_N}, got {n}")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(n + 63)]
    for s in range(0, len(bits), 6):
        v = 0
        for bit in bits[s : s + 6]:
            v = (v << 1) | bit
        out.append(chr(v + 63))
    return "".join(out)


def parse_graph6(text: bytes | str, base_offset: int = 0) -> Graph:
    """Decode one graph6 record. Surrounding whitespace and the optional header are ignored."""
    data = text.encode("ascii", "replace") if isinstance(text, str) else bytes(text)
    lead = len(data) - len(data.lstrip())
    data = data.strip()
    pos = base_offset + lead
    if data.startswith(_HEADER):
        data = data[len(_HEADER) :]
        pos += len(_HEADER)
    if not data:
        raise ParseError("empty graph6 record", pos)
    for idx, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise ParseError(f"byte {byte!r} outside 63..126", pos + idx)
    n = data[0] - 63
    if n > MAX_N:
        raise ParseError(f"multi-byte graph6 header (n > {MAX_N}) is unsupported", pos)
    if n == 0:
        raise ParseError("graph6 record encodes the empty graph", pos)
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    payload = data[1:]
    if len(payload) < need:
        raise ParseError(f"truncated payload: need {need} bytes, got {len(payload)}", pos + len(data))
    if len(payload) > need:
        raise ParseError(f"trailing bytes after a {need}-byte payload", pos + 1 + need)
    edges = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            v = payload[bit // 6] - 63
            if (v >> (5 - bit % 6)) & 1:
                edges.append((i, j))
            bit += 1
    if need and (payload[-1] - 63) & ((1 << (need * 6 - nbits)) - 1):
        raise ParseError("nonzero padding bits", pos + need)
    return build_graph(n, edges)


def read_graph6(data: bytes) -> list[Graph]:
    """One graph per non-blank line; error offsets are relative to the whole input."""
    graphs = []
    offset = 0
    for line in data.splitlines(keepends=True):
        if line.strip():
            graphs.append(parse_graph6(line, base_offset=offset))
        offset += len(line)
    return graphs


def write_graph6(graphs, path: str | Path) -> None:
    Path(path).write_text("".join(to_graph6(g) + "\n" for g in graphs), encoding="ascii")


def parse_edge_list(data: bytes | str) -> Graph:
    """Parse ``n <count>`` followed by whitespace-separated ``u v`` pairs.

    Lines starting with ``#`` are comments.
    """
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    n = None
    edges = []
    offset = 0
    for line in text.splitlines(keepends=True):
        body = line.split("#", 1)[0]
        tokens = body.split()
        start = offset + (len(body) - len(body.lstrip()))
        offset += len(line.encode("utf-8"))
        if not tokens:
            continue
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n" or not tokens[1].isdigit():
                raise ParseError("edge list must start with 'n <count>'", start)
            n = int(tokens[1])
            continue
        if len(tokens) != 2 or not all(t.lstrip("-").isdigit() for t in tokens):
            raise ParseError(f"expected 'u v', got {body.strip()!r}", start)
        u, v = int(tokens[0]), int(tokens[1])
        if u == v:
            raise ParseError(f"loop edge ({u}, {v})", start)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}", start)
        edges.append((u, v))
    if n is None:
        raise ParseError("missing 'n <count>' line", 0)
    if n < 1:
        raise ParseError("vertex count must be positive", 0)
    return build_graph(n, edges)
