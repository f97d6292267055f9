"""graph6 encoding (one graph per line, printable ASCII).

Layout: a size header followed by the upper triangle of the adjacency
matrix read column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed
six bits per byte, most significant bit first, each byte offset by 63.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .graph import MAX_VERTICES, CapacityError, Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    pass


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.rows[j]
        bits.extend(row >> i & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        body.append(chr(value + 63))
    return _encode_size(g.n) + "".join(body)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise Graph6Error(f"character outside the graph6 range in {s!r}")
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            # 6-byte (n >= 258048) headers cannot fit the vertex cap anyway
            raise Graph6Error(f"malformed size header in {s!r}")
        n = data[1] << 12 | data[2] << 6 | data[3]
        payload = data[4:]
    else:
        n = data[0]
        payload = data[1:]
    if n > MAX_VERTICES:
        raise CapacityError(f"graph6 string encodes {n} vertices, cap is {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(payload) < need:
        raise Graph6Error(f"truncated payload: expected {need} bytes, got {len(payload)}")
    if len(payload) > need:
        raise Graph6Error(f"{len(payload) - need} trailing bytes after payload")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if payload[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if need and payload[-1] & ((1 << (need * 6 - nbits)) - 1):
        raise Graph6Error("non-zero padding bits")
    return Graph._trusted(n, rows)


def read_graph6_file(path: str | Path) -> Iterator[Graph]:
    with open(path, encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield from_graph6(line)


def write_graph6_file(path: str | Path, graphs: Iterable[Graph]) -> int:
    count = 0
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")
            count += 1
    return count
