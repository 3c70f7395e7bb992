"""Bit-exact graph6 encoding and decoding, plus the text I/O used by the
verification harness (edge-list fixtures and a JSONL line sink).

graph6 layout: printable bytes 63..126, one graph per line.  The order n is
one byte n+63 for n <= 62, or byte 126 followed by three 6-bit digits of n
for 63 <= n <= 258047.  The upper-triangle bits x(0,1), x(0,2), x(1,2),
x(0,3), ... (column-major) follow, packed big-endian six per byte with value
offset 63 and zero padding to a multiple of six.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import IO, Iterable, Iterator

from .errors import CapacityError, Graph6ParseError, InputError
from .graph import Graph

HEADER = ">>graph6<<"

_MAX_ORDER = 258047


def pair_index_order(n: int) -> list[tuple[int, int]]:
    """Vertex pairs (i, j), i < j, in graph6 column-major bit order."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def _reverse_bits(value: int, width: int) -> int:
    if width == 0:
        return 0
    return int(format(value, f"0{width}b")[::-1], 2)


def encode_graph6(G: Graph) -> str:
    """Canonical graph6 line for G (no header)."""
    n = G.n
    if n > _MAX_ORDER:
        raise CapacityError(f"graph6 supports at most {_MAX_ORDER} vertices, got {n}")
    if n <= 62:
        prefix = chr(63 + n)
    else:
        prefix = "~" + "".join(chr(63 + ((n >> k) & 63)) for k in (12, 6, 0))

    # column j of the upper triangle is exactly the low j bits of adjacency
    # mask j, reversed so that pair (0, j) comes first
    bits = 0
    for j in range(1, n):
        bits = (bits << j) | _reverse_bits(G.adjacency_mask(j) & ((1 << j) - 1), j)
    total = n * (n - 1) // 2
    pad = (-total) % 6
    bits <<= pad
    nbytes = (total + pad) // 6
    chars = [chr(63 + ((bits >> (6 * (nbytes - 1 - b))) & 63)) for b in range(nbytes)]
    return prefix + "".join(chars)


def decode_graph6(line: str) -> Graph:
    """Graph encoded by one graph6 line (header not accepted here)."""
    if not line:
        raise Graph6ParseError("empty graph6 line", offset=0)
    for off, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise Graph6ParseError(
                f"byte {ord(ch)} outside graph6 range 63..126", offset=off
            )
    c0 = ord(line[0]) - 63
    if c0 <= 62:
        n, idx = c0, 1
    else:
        if len(line) < 4:
            raise Graph6ParseError("truncated extended order field", offset=len(line))
        if ord(line[1]) - 63 == 63:
            raise Graph6ParseError(
                "orders >= 258048 are not supported by this decoder", offset=1
            )
        n = 0
        for off in (1, 2, 3):
            n = (n << 6) | (ord(line[off]) - 63)
        idx = 4
        if n <= 62:
            raise Graph6ParseError("non-canonical extended order field", offset=1)

    total = n * (n - 1) // 2
    nbytes = (total + 5) // 6
    if len(line) - idx != nbytes:
        raise Graph6ParseError(
            f"expected {nbytes} adjacency bytes for n={n}, got {len(line) - idx}",
            offset=idx,
        )
    bits = 0
    for ch in line[idx:]:
        bits = (bits << 6) | (ord(ch) - 63)
    width = 6 * nbytes

    adj = [0] * n
    base = 0
    for j in range(1, n):
        chunk = (bits >> (width - base - j)) & ((1 << j) - 1)
        low = _reverse_bits(chunk, j)
        adj[j] |= low
        base += j
    for j in range(1, n):
        m = adj[j]
        while m:
            b = m & -m
            adj[b.bit_length() - 1] |= 1 << j
            m ^= b
    return Graph(n, tuple(adj))


@dataclass(frozen=True)
class ParseFailure:
    """A malformed line in a graph6 stream; processing continues past it."""

    line_number: int
    offset: int | None
    message: str


def read_stream(lines: Iterable[str]) -> Iterator[Graph | ParseFailure]:
    """Decode a graph6 stream: graphs in order, ParseFailure for bad lines.

    An optional '>>graph6<<' header and blank lines are skipped.
    """
    for number, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            continue
        if text.startswith(HEADER):
            text = text[len(HEADER):].strip()
            if not text:
                continue
        try:
            yield decode_graph6(text)
        except (Graph6ParseError, CapacityError) as exc:
            yield ParseFailure(number, getattr(exc, "offset", None), str(exc))


def read_edge_list(lines: Iterable[str]) -> Graph:
    """Parse the plain edge-list fixture format.

    First non-blank line is "n <edge count>"; each following non-blank line is
    one "u v" pair, 0-based.  Whitespace-tolerant.
    """
    rows = [row.strip() for row in lines]
    rows = [row for row in rows if row]
    if not rows:
        raise InputError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise InputError(f"header must be 'n <edge count>', got {rows[0]!r}")
    try:
        n, count = int(head[0]), int(head[1])
    except ValueError as exc:
        raise InputError(f"non-integer header {rows[0]!r}") from exc
    if count != len(rows) - 1:
        raise InputError(f"header announces {count} edges, found {len(rows) - 1}")
    edges = []
    for row in rows[1:]:
        cols = row.split()
        if len(cols) != 2:
            raise InputError(f"edge line must be 'u v', got {row!r}")
        try:
            edges.append((int(cols[0]), int(cols[1])))
        except ValueError as exc:
            raise InputError(f"non-integer edge line {row!r}") from exc
    from .graph import build_graph

    return build_graph(n, edges)


def write_jsonl(sink: IO[str], records: Iterable[dict]) -> int:
    """Write one JSON object per line; returns the number of lines written."""
    count = 0
    for record in records:
        sink.write(json.dumps(record) + "\n")
        count += 1
    return count
