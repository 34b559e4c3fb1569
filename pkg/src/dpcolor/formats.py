"""Text encodings for graphs: graph6 and a plain edge list."""

from __future__ import annotations

from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"


class ParseError(ValueError):
    """Malformed input. ``line`` and ``column`` are 1-based when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"n={n} too large for graph6")


def to_graph6(g: Graph, header: bool = False) -> str:
    bits = [int(g.has_edge(i, j)) for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[k : k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return (GRAPH6_HEADER if header else "") + _encode_n(g.n) + body


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 character {ch!r}", line=1, column=pos + 1)
    if not s:
        raise ParseError("empty graph6 string", line=1)
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] < 63:
        n, start = vals[0], 1
    elif len(vals) >= 4 and vals[1] < 63:
        n, start = (vals[1] << 12) | (vals[2] << 6) | vals[3], 4
    elif len(vals) >= 8 and vals[1] == 63:
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        start = 8
    else:
        raise ParseError("truncated graph6 size field", line=1)
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    body = vals[start:]
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}", line=1)
    bits = []
    for v in body:
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ParseError("nonzero graph6 padding bits", line=1, column=len(s))
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def to_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    """Parse ``n <count>`` followed by one ``u v`` pair per line.

    Blank lines and lines starting with ``#`` are skipped.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
                raise ParseError(f"expected header 'n <count>', got {line!r}", line=lineno)
            n = int(parts[1])
            continue
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", line=lineno) from None
        for col, w in ((1, u), (2, v)):
            if not 0 <= w < n:
                raise ParseError(f"vertex {w} out of range 0..{n - 1}", line=lineno, column=col)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line=lineno)
        edges.append((u, v))
    if n is None:
        raise ParseError("missing header 'n <count>'")
    return Graph.from_edges(n, edges)


def parse_graph(text: str, fmt: str | None = None) -> Graph:
    """Parse ``text`` as ``'graph6'`` or ``'edges'``; sniff the format when ``fmt`` is None."""
    if fmt is None:
        first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
        fmt = "edges" if first.startswith(("n ", "#")) or first == "n" else "graph6"
    if fmt == "graph6":
        return from_graph6(text)
    if fmt == "edges":
        return from_edge_list(text)
    raise ValueError(f"unknown graph format {fmt!r}")
