"""Immutable simple graphs on {0..n-1} with bit-set adjacency rows.

Serialization helpers cover graph6 (bit-exact), a DOT subset and a small
JSON schema ``{"n": int, "edges": [[u, v], ...]}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import BadVertex, EmptySelection, FormatError, InvalidOrder, SelfLoop

MAX_ORDER = 64
GRAPH6_HEADER = b">>graph6<<"


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph; ``rows[v]`` is the neighbour bit set of ``v``."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise InvalidOrder(f"vertex count {self.n} outside 1..{MAX_ORDER}")
        if len(self.rows) != self.n:
            raise InvalidOrder("row count does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise BadVertex(f"row {v} references a vertex >= n")
            if row >> v & 1:
                raise SelfLoop(f"loop at vertex {v}")
            w = row
            while w:
                low = w & -w
                u = low.bit_length() - 1
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
                w ^= low

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"

    def has_edge(self, u: int, v: int) -> bool:
        _check_vertex(self, u)
        _check_vertex(self, v)
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        _check_vertex(self, v)
        return bits(self.rows[v])

    def degree(self, v: int) -> int:
        _check_vertex(self, v)
        return self.rows[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in ascending lexicographic order."""
        for u, row in enumerate(self.rows):
            for v in bits(row >> (u + 1)):
                yield u, u + 1 + v

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def is_complete(self) -> bool:
        full = self.full_mask
        return all(row | (1 << v) == full for v, row in enumerate(self.rows))


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise BadVertex(f"vertex {v} not in 0..{g.n - 1}")


def empty(n: int) -> Graph:
    if not 1 <= n <= MAX_ORDER:
        raise InvalidOrder(f"vertex count {n} outside 1..{MAX_ORDER}")
    return Graph(n, (0,) * n)


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 1 <= n <= MAX_ORDER:
        raise InvalidOrder(f"vertex count {n} outside 1..{MAX_ORDER}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise BadVertex(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def _set_edge(g: Graph, u: int, v: int, present: bool) -> Graph:
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise SelfLoop(f"loop at vertex {u}")
    rows = list(g.rows)
    if present:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    else:
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def with_edge(g: Graph, u: int, v: int) -> Graph:
    return _set_edge(g, u, v, True)


def without_edge(g: Graph, u: int, v: int) -> Graph:
    return _set_edge(g, u, v, False)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """Subgraph on ``keep``; kept vertices are relabelled 0.. in ascending order."""
    kept = sorted(set(keep))
    if not kept:
        raise EmptySelection("induced subgraph needs at least one vertex")
    for v in kept:
        _check_vertex(g, v)
    index = {v: i for i, v in enumerate(kept)}
    rows = []
    for v in kept:
        row = 0
        for u in bits(g.rows[v]):
            if u in index:
                row |= 1 << index[u]
        rows.append(row)
    return Graph(len(kept), tuple(rows))


# graph6 ---------------------------------------------------------------------


def _graph6_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])


def encode_graph6(g: Graph) -> bytes:
    """graph6 encoding (no header, no trailing newline)."""
    out = bytearray(_graph6_size(g.n))
    chunk = 0
    filled = 0
    for j in range(1, g.n):
        col = g.rows[j]
        for i in range(j):
            chunk = (chunk << 1) | (col >> i & 1)
            filled += 1
            if filled == 6:
                out.append(chunk + 63)
                chunk = 0
                filled = 0
    if filled:
        out.append((chunk << (6 - filled)) + 63)
    return bytes(out)


def decode_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    s = data.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise FormatError("empty graph6 string")
    if any(c < 63 or c > 126 for c in s):
        raise FormatError("graph6 bytes must lie in 63..126")
    if s[0] == 126:
        if len(s) < 4 or s[1] == 126:
            raise FormatError("unsupported graph6 size field")
        n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63)
        body = s[4:]
    else:
        n = s[0] - 63
        body = s[1:]
    if not 1 <= n <= MAX_ORDER:
        raise FormatError(f"graph6 order {n} outside 1..{MAX_ORDER}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise FormatError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    value = 0
    for c in body:
        value = (value << 6) | (c - 63)
    pad = len(body) * 6 - nbits
    if value & ((1 << pad) - 1):
        raise FormatError("nonzero graph6 padding bits")
    value >>= pad
    rows = [0] * n
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return Graph(n, tuple(rows))


# DOT / JSON -----------------------------------------------------------------


def to_dot(g: Graph, one_based: bool = True) -> str:
    off = 1 if one_based else 0
    lines = ["graph G {"]
    lines.extend(f"  {v + off};" for v in range(g.n) if not g.rows[v])
    lines.extend(f"  {u + off} -- {v + off};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges()]}, separators=(",", ":"))


def from_json(text: str) -> Graph:
    try:
        doc = json.loads(text)
        n = doc["n"]
        edges = [(int(u), int(v)) for u, v in doc["edges"]]
    except (ValueError, KeyError, TypeError) as exc:
        raise FormatError(f"bad graph JSON: {exc}") from exc
    if not isinstance(n, int):
        raise FormatError("'n' must be an integer")
    try:
        return from_edges(n, edges)
    except (InvalidOrder, BadVertex, SelfLoop) as exc:
        raise FormatError(str(exc)) from exc
