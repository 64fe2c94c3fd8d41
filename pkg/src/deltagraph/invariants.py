"""Connectivity, distances, free vertices and vertex connectivity.

All functions are pure; they never mutate the graph they are given.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

from .errors import AdjacentPair, Degenerate, NotConnected, SamePair
from .graph import Graph, _check_vertex, bits


class DeltaTriple(NamedTuple):
    """(free vertices, diameter, vertex connectivity)."""

    f: int
    d: int
    k: int

    @property
    def phi(self) -> int:
        return self.f + self.d + self.k

    def __str__(self) -> str:
        return f"({self.f},{self.d},{self.k})"


@dataclass(frozen=True)
class AnalysisReport:
    delta: DeltaTriple
    phi: int
    free_set: tuple[int, ...]
    connected: bool
    complete: bool


def _reach(g: Graph, start: int, blocked: int = 0) -> int:
    """Bit set of vertices reachable from ``start`` avoiding ``blocked``."""
    seen = 1 << start
    frontier = seen
    rows = g.rows
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= rows[v]
        frontier = nxt & ~seen & ~blocked
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    return _reach(g, 0) == g.full_mask


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise NotConnected("graph is disconnected")


def bfs_layers(g: Graph, source: int) -> list[int]:
    """Distance bit sets: ``layers[i]`` holds the vertices at distance ``i``."""
    layers = [1 << source]
    seen = layers[0]
    while True:
        nxt = 0
        for v in bits(layers[-1]):
            nxt |= g.rows[v]
        nxt &= ~seen
        if not nxt:
            return layers
        seen |= nxt
        layers.append(nxt)


def distance(g: Graph, u: int, v: int) -> int | None:
    """Hop distance, or ``None`` when ``v`` is unreachable from ``u``."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    for dist, layer in enumerate(bfs_layers(g, u)):
        if layer >> v & 1:
            return dist
    return None


def eccentricity(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    layers = bfs_layers(g, v)
    if sum(layer.bit_count() for layer in layers) != g.n:
        raise NotConnected("graph is disconnected")
    return len(layers) - 1


def diameter(g: Graph) -> int:
    if g.n == 1:
        raise Degenerate("diameter of a single vertex is undefined")
    _require_connected(g)
    return max(len(bfs_layers(g, v)) - 1 for v in range(g.n))


def is_free_vertex(g: Graph, v: int) -> bool:
    """True iff the neighbourhood of ``v`` is a clique (bit-set subset test)."""
    _check_vertex(g, v)
    nbhd = g.rows[v]
    for u in bits(nbhd):
        if (g.rows[u] | (1 << u)) & nbhd != nbhd:
            return False
    return True


def is_free_vertex_pairwise(g: Graph, v: int) -> bool:
    """Same predicate as :func:`is_free_vertex`, checked pair by pair."""
    nbrs = g.neighbors(v)
    for i, a in enumerate(nbrs):
        for b in nbrs[i + 1:]:
            if not g.has_edge(a, b):
                return False
    return True


def free_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if is_free_vertex(g, v)]


def free_count(g: Graph) -> int:
    return len(free_vertices(g))


# Menger / max-flow ----------------------------------------------------------


def _max_disjoint_paths(g: Graph, u: int, v: int, limit: int | None = None) -> int:
    """Unit-capacity max flow from ``u`` to ``v`` on the vertex-split digraph.

    Vertex ``w`` becomes ``w_in = 2w`` and ``w_out = 2w + 1`` joined by a
    capacity-1 arc; each edge ``{x, y}`` gives arcs ``x_out -> y_in`` and
    ``y_out -> x_in``. Stops early once ``limit`` paths have been found.
    """
    cap: dict[tuple[int, int], int] = {}
    adj: list[list[int]] = [[] for _ in range(2 * g.n)]

    def arc(a: int, b: int) -> None:
        if (a, b) not in cap:
            cap[(a, b)] = 0
            cap.setdefault((b, a), 0)
            adj[a].append(b)
            adj[b].append(a)
        cap[(a, b)] += 1

    for w in range(g.n):
        if w != u and w != v:
            arc(2 * w, 2 * w + 1)
    for x, y in g.edges():
        arc(2 * x + 1, 2 * y)
        arc(2 * y + 1, 2 * x)

    source, sink = 2 * u + 1, 2 * v
    flow = 0
    while limit is None or flow < limit:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in adj[a]:
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    return flow


def local_connectivity(g: Graph, u: int, v: int) -> int:
    """Maximum number of internally vertex-disjoint ``u``-``v`` paths."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise SamePair("local connectivity needs two distinct vertices")
    if g.rows[u] >> v & 1:
        raise AdjacentPair(f"vertices {u} and {v} are adjacent")
    return _max_disjoint_paths(g, u, v)


def vertex_connectivity(g: Graph) -> int:
    """kappa(g): ``n - 1`` for complete graphs, else the minimum local connectivity
    over all non-adjacent pairs."""
    if g.n == 1:
        raise Degenerate("vertex connectivity of a single vertex is undefined")
    _require_connected(g)
    if g.is_complete():
        return g.n - 1
    # min degree is an upper bound, so flows can stop once they reach it
    best = min(row.bit_count() for row in g.rows)
    for u in range(g.n):
        non_nbrs = g.full_mask & ~g.rows[u] & ~((1 << (u + 1)) - 1)
        for v in bits(non_nbrs):
            best = min(best, _max_disjoint_paths(g, u, v, limit=best))
            if best == 1:
                return 1
    return best


def analyze(g: Graph) -> AnalysisReport:
    if g.n == 1:
        raise Degenerate("analysis needs at least two vertices")
    _require_connected(g)
    free = tuple(free_vertices(g))
    delta = DeltaTriple(len(free), diameter(g), vertex_connectivity(g))
    return AnalysisReport(
        delta=delta,
        phi=delta.phi,
        free_set=free,
        connected=True,
        complete=g.is_complete(),
    )
