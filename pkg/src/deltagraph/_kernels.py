"""Compiled scanning kernels for the exhaustive enumeration oracle.

A labelled graph on n <= 8 vertices is identified with an integer code whose
bit ``b`` is the pair ``(PI[b], PJ[b])`` in graph6 order
``(0,1), (0,2), (1,2), (0,3), ...``.  Everything here is deliberately written
from scratch (BFS on bit sets, separator search by subset enumeration) so it
stays independent of the max-flow implementation in ``invariants``.
"""

from __future__ import annotations

import numpy as np
from numba import njit


def pair_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    pi, pj = [], []
    for j in range(1, n):
        for i in range(j):
            pi.append(i)
            pj.append(j)
    return np.array(pi, dtype=np.int64), np.array(pj, dtype=np.int64)


@njit(cache=True)
def decode(code, n, pi, pj, rows):
    for v in range(n):
        rows[v] = 0
    for b in range(pi.shape[0]):
        if (code >> b) & 1:
            rows[pi[b]] |= 1 << pj[b]
            rows[pj[b]] |= 1 << pi[b]


@njit(cache=True)
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def connected_without(rows, n, removed):
    """Is the graph minus the vertex set ``removed`` connected (and nonempty)?"""
    full = ((1 << n) - 1) & ~removed
    if full == 0:
        return False
    start = 0
    while (full >> start) & 1 == 0:
        start += 1
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in range(n):
            if (frontier >> v) & 1:
                nxt |= rows[v]
        frontier = nxt & full & ~seen
        seen |= frontier
    return seen == full


@njit(cache=True)
def is_complete(rows, n):
    full = (1 << n) - 1
    for v in range(n):
        if (rows[v] | (1 << v)) != full:
            return False
    return True


@njit(cache=True)
def free_count(rows, n):
    f = 0
    for v in range(n):
        nb = rows[v]
        ok = True
        for u in range(n):
            if (nb >> u) & 1 and ((rows[u] | (1 << u)) & nb) != nb:
                ok = False
                break
        if ok:
            f += 1
    return f


@njit(cache=True)
def diameter(rows, n):
    best = 0
    for s in range(n):
        seen = 1 << s
        frontier = seen
        depth = 0
        while True:
            nxt = 0
            for v in range(n):
                if (frontier >> v) & 1:
                    nxt |= rows[v]
            nxt &= ~seen
            if nxt == 0:
                break
            seen |= nxt
            frontier = nxt
            depth += 1
        if depth > best:
            best = depth
    return best


@njit(cache=True)
def kappa(rows, n):
    """Smallest separator size by trying vertex subsets in increasing size.

    Assumes a connected graph; returns n - 1 for complete graphs.
    """
    if is_complete(rows, n):
        return n - 1
    mindeg = n
    for v in range(n):
        d = popcount(rows[v])
        if d < mindeg:
            mindeg = d
    # N(v) of a minimum-degree vertex separates a non-complete graph
    for s in range(1, mindeg):
        t = (1 << s) - 1
        limit = 1 << n
        while t < limit:
            if not connected_without(rows, n, t):
                return s
            low = t & -t
            r = t + low
            t = (((r ^ t) >> 2) // low) | r
    return mindeg


@njit(cache=True)
def delta(rows, n):
    return free_count(rows, n), diameter(rows, n), kappa(rows, n)


@njit(cache=True)
def scan_labeled(n, lo, hi, pi, pj, counts, samples, violations):
    """Tally (f, d, k) over every connected non-complete code in [lo, hi).

    ``samples`` keeps the smallest code per triple (-1 when unseen).  Codes
    with f + d + k > n + 2 are written to ``violations``.  Returns
    (graphs tallied, violations found).
    """
    rows = np.zeros(n, dtype=np.int64)
    seen = 0
    nviol = 0
    for code in range(lo, hi):
        decode(code, n, pi, pj, rows)
        if not connected_without(rows, n, 0) or is_complete(rows, n):
            continue
        f, d, k = delta(rows, n)
        seen += 1
        counts[f, d, k] += 1
        if samples[f, d, k] < 0:
            samples[f, d, k] = code
        if f + d + k > n + 2:
            if nviol < violations.shape[0]:
                violations[nviol] = code
            nviol += 1
    return seen, nviol


@njit(cache=True)
def collect_labeled(n, lo, hi, pi, pj, out):
    rows = np.zeros(n, dtype=np.int64)
    m = 0
    for code in range(lo, hi):
        decode(code, n, pi, pj, rows)
        if connected_without(rows, n, 0) and not is_complete(rows, n):
            out[m] = code
            m += 1
    return m


@njit(cache=True)
def _next_perm(p, lo, hi):
    i = hi - 2
    while i >= lo and p[i] >= p[i + 1]:
        i -= 1
    if i < lo:
        a, b = lo, hi - 1
        while a < b:
            p[a], p[b] = p[b], p[a]
            a += 1
            b -= 1
        return False
    j = hi - 1
    while p[j] <= p[i]:
        j -= 1
    p[i], p[j] = p[j], p[i]
    a, b = i + 1, hi - 1
    while a < b:
        p[a], p[b] = p[b], p[a]
        a += 1
        b -= 1
    return True


@njit(cache=True)
def is_canonical(rows, n, pi, pj, starts, ends, nblocks, perm):
    """True iff no permutation within equal-degree blocks yields a
    lexicographically smaller code (bit string in pair order)."""
    for v in range(n):
        perm[v] = v
    m = pi.shape[0]
    while True:
        b = nblocks - 1
        while b >= 0 and not _next_perm(perm, starts[b], ends[b]):
            b -= 1
        if b < 0:
            return True
        for e in range(m):
            i = pi[e]
            j = pj[e]
            new = (rows[perm[i]] >> perm[j]) & 1
            old = (rows[i] >> j) & 1
            if new != old:
                if new < old:
                    return False
                break


@njit(cache=True)
def scan_canonical(n, lo, hi, pi, pj, out, connected_only):
    """Write to ``out`` every code in [lo, hi) that is the canonical
    representative of its isomorphism class; returns the number written."""
    rows = np.zeros(n, dtype=np.int64)
    deg = np.zeros(n, dtype=np.int64)
    starts = np.zeros(n, dtype=np.int64)
    ends = np.zeros(n, dtype=np.int64)
    perm = np.zeros(n, dtype=np.int64)
    m = 0
    for code in range(lo, hi):
        decode(code, n, pi, pj, rows)
        ok = True
        for v in range(n):
            deg[v] = popcount(rows[v])
            if v and deg[v] < deg[v - 1]:
                ok = False
                break
        if not ok:
            continue
        nb = 0
        s = 0
        for v in range(1, n + 1):
            if v == n or deg[v] != deg[s]:
                starts[nb] = s
                ends[nb] = v
                nb += 1
                s = v
        if not is_canonical(rows, n, pi, pj, starts, ends, nb, perm):
            continue
        if connected_only and (not connected_without(rows, n, 0) or is_complete(rows, n)):
            continue
        out[m] = code
        m += 1
    return m


@njit(cache=True)
def tally_codes(n, codes, pi, pj, counts, samples):
    rows = np.zeros(n, dtype=np.int64)
    for idx in range(codes.shape[0]):
        code = codes[idx]
        decode(code, n, pi, pj, rows)
        f, d, k = delta(rows, n)
        counts[f, d, k] += 1
        if samples[f, d, k] < 0 or code < samples[f, d, k]:
            samples[f, d, k] = code
