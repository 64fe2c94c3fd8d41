"""Exhaustive and sampled enumeration of small connected graphs.

This is the brute-force oracle used to check the feasibility logic: it
never calls the max-flow code.  Labelled scans cover every edge subset for
n <= 7; the canonical scan keeps one representative per isomorphism class
for n <= 8, chosen as the lexicographically smallest adjacency code among
labellings with non-decreasing degrees.
"""

from __future__ import annotations

import csv
import enum
import io
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator

import numpy as np

from . import _kernels as K
from .errors import UniverseTooLarge
from .graph import Graph, decode_graph6, encode_graph6
from .invariants import DeltaTriple, analyze, is_connected

# upper bound on isomorphism classes of graphs on <= 8 vertices (12346 at n = 8)
_CANONICAL_BUFFER = 16384


class Universe(str, enum.Enum):
    LABELED_ALL = "LABELED_ALL"
    CANONICAL_ALL = "CANONICAL_ALL"
    SAMPLED = "SAMPLED"

    def __str__(self) -> str:
        return self.value


MODE_LIMITS = {Universe.LABELED_ALL: 7, Universe.CANONICAL_ALL: 8}


@dataclass(frozen=True)
class CensusEntry:
    count: int
    sample: str  # graph6


@dataclass
class CensusTable:
    n: int
    universe: Universe
    entries: dict[DeltaTriple, CensusEntry] = field(default_factory=dict)
    seed: int | None = None
    draws: int | None = None

    @property
    def universe_label(self) -> str:
        if self.universe is Universe.SAMPLED:
            return f"SAMPLED(seed={self.seed};draws={self.draws})"
        return self.universe.value

    @property
    def total(self) -> int:
        return sum(e.count for e in self.entries.values())

    def keys(self) -> set[DeltaTriple]:
        return set(self.entries)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "f", "d", "k", "count", "sample_graph6", "universe"])
        for t in sorted(self.entries):
            e = self.entries[t]
            writer.writerow([self.n, t.f, t.d, t.k, e.count, e.sample, self.universe_label])
        return buf.getvalue()


def code_to_graph(n: int, code: int) -> Graph:
    """Graph whose edges are the set bits of ``code`` in graph6 pair order."""
    rows = [0] * n
    b = 0
    for j in range(1, n):
        for i in range(j):
            if code >> b & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            b += 1
    return Graph(n, tuple(rows))


def _check_mode(n: int, mode: Universe) -> None:
    limit = MODE_LIMITS.get(mode)
    if limit is not None and n > limit:
        raise UniverseTooLarge(f"{mode} is limited to n <= {limit}, got n={n}")
    if n < 1:
        raise UniverseTooLarge(f"n must be >= 1, got {n}")


def _ranges(n: int, jobs: int) -> list[tuple[int, int, int]]:
    total = 1 << (n * (n - 1) // 2)
    jobs = max(1, min(jobs, total))
    step = -(-total // jobs)
    return [(n, lo, min(lo + step, total)) for lo in range(0, total, step)]


def _fan_out(fn: Callable, parts: list, jobs: int) -> list:
    if jobs <= 1 or len(parts) == 1:
        return [fn(p) for p in parts]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, parts))


def _canonical_part(part: tuple[int, int, int]) -> np.ndarray:
    n, lo, hi = part
    pi, pj = K.pair_tables(n)
    out = np.zeros(_CANONICAL_BUFFER, dtype=np.int64)
    m = K.scan_canonical(n, lo, hi, pi, pj, out, True)
    return out[:m].copy()


def _labeled_part(part: tuple[int, int, int]) -> np.ndarray:
    n, lo, hi = part
    pi, pj = K.pair_tables(n)
    out = np.zeros(hi - lo, dtype=np.int64)
    m = K.collect_labeled(n, lo, hi, pi, pj, out)
    return out[:m].copy()


def _tally_part(part: tuple[int, int, int]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    n, lo, hi = part
    pi, pj = K.pair_tables(n)
    counts = np.zeros((n + 1,) * 3, dtype=np.int64)
    samples = np.full((n + 1,) * 3, -1, dtype=np.int64)
    violations = np.zeros(1024, dtype=np.int64)
    _, nviol = K.scan_labeled(n, lo, hi, pi, pj, counts, samples, violations)
    return counts, samples, violations[: min(nviol, len(violations))].copy()


_canonical_cache: dict[int, tuple[int, ...]] = {}


def canonical_codes(n: int, jobs: int = 1) -> tuple[int, ...]:
    """Codes of one representative per class of connected non-complete graphs,
    ascending.  Cached per n; ``jobs`` only affects how the scan is split."""
    _check_mode(n, Universe.CANONICAL_ALL)
    if n < 2:
        return ()
    if n not in _canonical_cache:
        parts = _fan_out(_canonical_part, _ranges(n, jobs), jobs)
        _canonical_cache[n] = tuple(int(c) for part in parts for c in part)
    return _canonical_cache[n]


def sample_connected_graphs(n: int, draws: int, seed: int) -> Iterator[Graph]:
    """``draws`` graphs uniform over connected labelled graphs on n vertices.

    Rejection sampling from G(n, 1/2), which is uniform over all labelled
    graphs.  Complete graphs are kept.
    """
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, 1)
    produced = 0
    while produced < draws:
        mask = rng.integers(0, 2, size=iu.shape[0]).astype(bool)
        rows = [0] * n
        for i, j in zip(iu[mask].tolist(), ju[mask].tolist()):
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        g = Graph(n, tuple(rows))
        if is_connected(g):
            produced += 1
            yield g


def for_each_connected_graph(
    n: int,
    mode: Universe,
    visitor: Callable[[Graph], None],
    *,
    seed: int | None = None,
    draws: int | None = None,
    jobs: int = 1,
) -> int:
    """Call ``visitor`` once per connected non-complete graph of the universe.

    Returns the number of graphs visited.
    """
    mode = Universe(mode)
    _check_mode(n, mode)
    if mode is Universe.SAMPLED:
        if seed is None or draws is None:
            raise ValueError("SAMPLED universe needs an explicit seed and draw count")
        visited = 0
        for g in sample_connected_graphs(n, draws, seed):
            if not g.is_complete():
                visitor(g)
                visited += 1
        return visited
    if n < 2:
        return 0
    if mode is Universe.CANONICAL_ALL:
        codes: list[int] | tuple[int, ...] = canonical_codes(n, jobs)
    else:
        codes = [int(c) for part in _fan_out(_labeled_part, _ranges(n, jobs), jobs) for c in part]
    for code in codes:
        visitor(code_to_graph(n, code))
    return len(codes)


def _table_from_arrays(
    n: int, universe: Universe, counts: np.ndarray, samples: np.ndarray
) -> CensusTable:
    table = CensusTable(n, universe)
    for f, d, k in np.argwhere(counts > 0).tolist():
        sample = encode_graph6(code_to_graph(n, int(samples[f, d, k]))).decode("ascii")
        table.entries[DeltaTriple(f, d, k)] = CensusEntry(int(counts[f, d, k]), sample)
    return table


@lru_cache(maxsize=32)
def _exhaustive_census(n: int, mode: Universe) -> CensusTable:
    return _scan_census(n, mode, 1)


def _scan_census(n: int, mode: Universe, jobs: int) -> CensusTable:
    size = (n + 1,) * 3
    counts = np.zeros(size, dtype=np.int64)
    samples = np.full(size, -1, dtype=np.int64)
    if n < 2:
        return CensusTable(n, mode)
    pi, pj = K.pair_tables(n)
    if mode is Universe.CANONICAL_ALL:
        codes = np.array(canonical_codes(n, jobs), dtype=np.int64)
        K.tally_codes(n, codes, pi, pj, counts, samples)
    else:
        for c, s, _ in _fan_out(_tally_part, _ranges(n, jobs), jobs):
            counts += c
            seen = s >= 0
            take = seen & ((samples < 0) | (s < samples))
            samples[take] = s[take]
    return _table_from_arrays(n, mode, counts, samples)


def census(
    n: int,
    mode: Universe,
    *,
    seed: int | None = None,
    draws: int | None = None,
    jobs: int = 1,
) -> CensusTable:
    """Table of (f, d, k) -> (count, smallest-code sample) over the universe.

    The result does not depend on ``jobs``.
    """
    mode = Universe(mode)
    _check_mode(n, mode)
    if mode is not Universe.SAMPLED:
        if jobs > 1:
            table = _scan_census(n, mode, jobs)
        else:
            table = _exhaustive_census(n, mode)
        return CensusTable(n, mode, dict(table.entries))
    if seed is None or draws is None:
        raise ValueError("SAMPLED universe needs an explicit seed and draw count")
    table = CensusTable(n, mode, seed=seed, draws=draws)
    counts: dict[DeltaTriple, int] = {}
    first: dict[DeltaTriple, str] = {}
    for g in sample_connected_graphs(n, draws, seed):
        if g.is_complete():
            continue
        t = analyze(g).delta
        counts[t] = counts.get(t, 0) + 1
        first.setdefault(t, encode_graph6(g).decode("ascii"))
    for t in counts:
        table.entries[t] = CensusEntry(counts[t], first[t])
    return table


def brute_force_kappa(g: Graph) -> int:
    """Vertex connectivity by trying every vertex subset in increasing size."""
    if g.n > 10:
        raise UniverseTooLarge(f"brute-force connectivity is limited to n <= 10, got {g.n}")
    full = g.full_mask
    for size in range(1, g.n - 1):
        for removed in itertools.combinations(range(g.n), size):
            blocked = sum(1 << v for v in removed)
            rest = full & ~blocked
            start = (rest & -rest).bit_length() - 1
            seen = 1 << start
            frontier = seen
            while frontier:
                nxt = 0
                w = frontier
                while w:
                    low = w & -w
                    nxt |= g.rows[low.bit_length() - 1]
                    w ^= low
                frontier = nxt & rest & ~seen
                seen |= frontier
            if seen != rest:
                return size
    return g.n - 1


def verify_inequality_exhaustive(n: int, jobs: int = 1) -> list[str]:
    """graph6 strings of labelled connected non-complete graphs on n vertices
    with f + d + k > n + 2.  Empty means the bound holds everywhere."""
    _check_mode(n, Universe.LABELED_ALL)
    if n < 2:
        return []
    out: list[str] = []
    for _, _, viol in _fan_out(_tally_part, _ranges(n, jobs), jobs):
        out.extend(encode_graph6(code_to_graph(n, int(c))).decode("ascii") for c in viol)
    return out


def search_triple(
    n: int, t: DeltaTriple, mode: Universe = Universe.CANONICAL_ALL, **kwargs
) -> Graph | None:
    """First graph in the universe realizing ``t`` (smallest code), or None."""
    entry = census(n, mode, **kwargs).entries.get(DeltaTriple(*t))
    return None if entry is None else decode_graph6(entry.sample)
