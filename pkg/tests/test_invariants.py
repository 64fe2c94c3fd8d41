import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deltagraph.constructions import (
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    join,
    path,
)
from deltagraph.enumeration import brute_force_kappa
from deltagraph.errors import AdjacentPair, Degenerate, NotConnected, SamePair
from deltagraph.graph import Graph
from deltagraph.invariants import (
    DeltaTriple,
    analyze,
    diameter,
    distance,
    free_count,
    is_connected,
    is_free_vertex,
    is_free_vertex_pairwise,
    local_connectivity,
    vertex_connectivity,
)

from .strategies import connected_graphs, connected_noncomplete, graphs


def _simple_paths(g: Graph, u: int, v: int) -> list[frozenset[int]]:
    """Internal-vertex sets of all simple u-v paths."""
    out = []

    def walk(x, visited):
        for y in g.neighbors(x):
            if y == v:
                out.append(frozenset(visited - {u}))
            elif y not in visited:
                walk(y, visited | {y})

    walk(u, {u})
    return out


def disjoint_path_packing(g: Graph, u: int, v: int) -> int:
    """Largest family of pairwise internally disjoint u-v paths, by search."""
    paths = sorted(set(_simple_paths(g, u, v)), key=len)
    best = 0

    def grow(start, used, count):
        nonlocal best
        best = max(best, count)
        for i in range(start, len(paths)):
            if not paths[i] & used:
                grow(i + 1, used | paths[i], count + 1)

    grow(0, frozenset(), 0)
    return best


def test_is_connected():
    assert is_connected(cycle(6))
    assert not is_connected(empty(2))
    assert not is_connected(disjoint_union(complete(3), complete(3)))


def test_distance():
    assert distance(path(5), 0, 4) == 4
    assert distance(complete(4), 1, 3) == 1
    assert distance(complete(4), 2, 2) == 0
    assert distance(disjoint_union(complete(1), complete(1)), 0, 1) is None


def test_diameter():
    assert diameter(cycle(8)) == 4
    assert diameter(complete_bipartite(3, 5)) == 2
    assert diameter(path(8)) == 7
    with pytest.raises(NotConnected):
        diameter(empty(3))
    with pytest.raises(Degenerate):
        diameter(complete(1))


def test_free_vertices():
    p4 = path(4)
    assert is_free_vertex(p4, 0) and is_free_vertex(p4, 3)
    assert not any(is_free_vertex(cycle(5), v) for v in range(5))
    assert all(is_free_vertex(complete(6), v) for v in range(6))
    assert free_count(complete_bipartite(1, 3)) == 3
    for m in range(4, 10):
        assert free_count(cycle(m)) == 0
    assert free_count(complete_bipartite(2, 6)) == 0


def test_local_connectivity():
    assert local_connectivity(cycle(6), 0, 3) == 2
    k24 = complete_bipartite(2, 4)
    assert disjoint_path_packing(k24, 0, 1) == 4
    assert local_connectivity(k24, 0, 1) == 4
    star = complete_bipartite(1, 4)
    assert local_connectivity(star, 1, 2) == 1
    with pytest.raises(AdjacentPair):
        local_connectivity(cycle(6), 0, 1)
    with pytest.raises(SamePair):
        local_connectivity(cycle(6), 2, 2)


def test_vertex_connectivity():
    assert vertex_connectivity(cycle(9)) == 2
    assert vertex_connectivity(complete_bipartite(4, 4)) == 4
    assert vertex_connectivity(complete(5)) == 4
    apex = join(complete(1), disjoint_union(cycle(4), cycle(4)))
    assert vertex_connectivity(apex) == 1
    with pytest.raises(NotConnected):
        vertex_connectivity(empty(3))


def test_analyze_examples():
    r = analyze(path(8))
    assert r.delta == DeltaTriple(2, 7, 1) and r.phi == 10
    assert r.free_set == (0, 7)
    r = analyze(cycle(8))
    assert r.delta == (0, 4, 2) and r.phi == 6
    r = analyze(complete_bipartite(2, 6))
    assert r.delta == (0, 2, 2) and r.phi == 4
    r = analyze(complete(4))
    assert r.complete and r.delta == (4, 1, 3) and r.free_set == (0, 1, 2, 3)
    with pytest.raises(NotConnected):
        analyze(empty(2))


@given(connected_graphs(2, 9))
def test_kappa_at_most_min_degree(g):
    assert vertex_connectivity(g) <= min(g.degree(v) for v in range(g.n))


@given(connected_noncomplete(3, 10))
def test_upper_bound_on_phi(g):
    r = analyze(g)
    assert 3 <= r.phi <= g.n + 2


@given(connected_graphs(2, 10))
def test_diameter_one_iff_complete(g):
    assert (diameter(g) == 1) == g.is_complete()


@given(graphs(1, 10))
def test_free_vertex_implementations_agree(g):
    for v in range(g.n):
        assert is_free_vertex(g, v) == is_free_vertex_pairwise(g, v)
        if g.degree(v) <= 1:
            assert is_free_vertex(g, v)


@settings(max_examples=300)
@given(connected_graphs(2, 8))
def test_kappa_matches_brute_force(g):
    assert vertex_connectivity(g) == brute_force_kappa(g)


@settings(max_examples=60)
@given(connected_noncomplete(3, 7), st.data())
def test_local_connectivity_matches_path_packing(g, data):
    pairs = [(u, v) for u, v in itertools.combinations(range(g.n), 2) if not g.has_edge(u, v)]
    u, v = data.draw(st.sampled_from(pairs))
    assert local_connectivity(g, u, v) == disjoint_path_packing(g, u, v)


@given(connected_noncomplete(3, 10))
def test_report_consistency(g):
    r = analyze(g)
    assert r.phi == sum(r.delta)
    assert len(r.free_set) == r.delta.f
    assert r.delta.d >= 2 and not r.complete
