"""Graph families and the structural operators used to assemble witnesses.

Placement conventions are part of the contract: unions and joins keep the
first operand on ``0..n1-1`` and shift the second by ``n1``; duplicated
vertices are appended at the end.
"""

from __future__ import annotations

from .errors import InvalidOrder
from .graph import MAX_ORDER, Graph, _check_vertex, empty, from_edges


def _need(value: int, minimum: int, what: str) -> None:
    if value < minimum:
        raise InvalidOrder(f"{what} needs at least {minimum}, got {value}")
    if value > MAX_ORDER:
        raise InvalidOrder(f"{what} exceeds {MAX_ORDER} vertices")


def path(m: int) -> Graph:
    _need(m, 1, "path")
    return from_edges(m, ((i, i + 1) for i in range(m - 1)))


def cycle(m: int) -> Graph:
    _need(m, 3, "cycle")
    return from_edges(m, ((i, (i + 1) % m) for i in range(m)))


def complete(m: int) -> Graph:
    _need(m, 1, "complete graph")
    full = (1 << m) - 1
    return Graph(m, tuple(full & ~(1 << v) for v in range(m)))


def complete_bipartite(a: int, b: int) -> Graph:
    """Parts ``{0..a-1}`` and ``{a..a+b-1}``."""
    _need(a, 1, "bipartite part")
    _need(b, 1, "bipartite part")
    _need(a + b, 2, "complete bipartite graph")  # also enforces the 64 ceiling
    left = (1 << a) - 1
    right = ((1 << b) - 1) << a
    return Graph(a + b, (right,) * a + (left,) * b)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    if g1.n + g2.n > MAX_ORDER:
        raise InvalidOrder(f"union would have {g1.n + g2.n} > {MAX_ORDER} vertices")
    return Graph(g1.n + g2.n, g1.rows + tuple(row << g1.n for row in g2.rows))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    if g1.n + g2.n > MAX_ORDER:
        raise InvalidOrder(f"join would have {g1.n + g2.n} > {MAX_ORDER} vertices")
    first = (1 << g1.n) - 1
    second = ((1 << g2.n) - 1) << g1.n
    rows = tuple(row | second for row in g1.rows)
    rows += tuple((row << g1.n) | first for row in g2.rows)
    return Graph(g1.n + g2.n, rows)


def duplicate_vertex(g: Graph, v: int, times: int = 1) -> Graph:
    """Append ``times`` copies of ``v``, each adjacent to exactly the original N(v).

    Copies are adjacent neither to ``v`` nor to each other.
    """
    _check_vertex(g, v)
    if times < 0:
        raise InvalidOrder("duplication count must be non-negative")
    n = g.n + times
    if n > MAX_ORDER:
        raise InvalidOrder(f"duplication would give {n} > {MAX_ORDER} vertices")
    nbhd = g.rows[v]
    copies = ((1 << times) - 1) << g.n
    rows = [row | copies if nbhd >> u & 1 else row for u, row in enumerate(g.rows)]
    rows.extend([nbhd] * times)
    return Graph(n, tuple(rows))


__all__ = [
    "complete",
    "complete_bipartite",
    "cycle",
    "disjoint_union",
    "duplicate_vertex",
    "empty",
    "join",
    "path",
]
