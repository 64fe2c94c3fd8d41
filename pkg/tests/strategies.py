from __future__ import annotations

import itertools

from hypothesis import strategies as st

from deltagraph.graph import Graph, from_edges
from deltagraph.invariants import is_connected


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 10) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edges(n, [p for p, keep in zip(pairs, mask) if keep])


def connected_graphs(min_n: int = 2, max_n: int = 9):
    return graphs(min_n, max_n).filter(is_connected)


def connected_noncomplete(min_n: int = 3, max_n: int = 9):
    return connected_graphs(min_n, max_n).filter(lambda g: not g.is_complete())
