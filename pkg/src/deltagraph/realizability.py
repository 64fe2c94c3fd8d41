"""Decide which (n, f, d, k) are realizable and build verified witnesses.

A witness is a connected non-complete graph G on n vertices with
f(G) = f free vertices, diameter d and vertex connectivity k.  Every
witness is produced by replaying a :class:`WitnessRecipe`, a straight-line
program over the constructors in :mod:`deltagraph.constructions`, and is
re-analysed before it is returned.

Recipe vertex labels are 1-based; graphs themselves stay 0-based.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Sequence

from . import constructions as C
from .errors import ConstructionMismatch, NotRealizable, OutOfTheoremRange
from .graph import Graph, bits, empty, with_edge, without_edge
from .invariants import DeltaTriple, analyze

MIN_THEOREM_ORDER = 8


@dataclass(frozen=True, order=True)
class Query:
    n: int
    f: int
    d: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError(f"n must be >= 3, got {self.n}")
        if self.f < 0:
            raise ValueError(f"f must be >= 0, got {self.f}")
        if self.d < 1:
            raise ValueError(f"d must be >= 1, got {self.d}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")

    @property
    def triple(self) -> DeltaTriple:
        return DeltaTriple(self.f, self.d, self.k)

    @property
    def phi(self) -> int:
        return self.f + self.d + self.k


class Clause(str, enum.Enum):
    INEQ_FAIL = "INEQ_FAIL"
    PHI3_SMALL_N = "PHI3_SMALL_N"
    K1_F0 = "K1_F0"
    K1_F1 = "K1_F1"
    K1_F2PLUS = "K1_F2PLUS"
    D2_F0 = "D2_F0"
    D2_F1 = "D2_F1"
    D2_F2PLUS = "D2_F2PLUS"
    MAIN_BOUND = "MAIN_BOUND"
    COMPLETE_EXCLUDED = "COMPLETE_EXCLUDED"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class FeasibilityVerdict:
    feasible: bool
    clause: Clause
    bound_detail: dict[str, int] = field(default_factory=dict)

    def __str__(self) -> str:
        word = "FEASIBLE" if self.feasible else "INFEASIBLE"
        return f"{word} {self.clause}"


def inequality_bound_holds(q: Query) -> bool:
    """f + d + k <= n + 2, the universal upper bound on phi."""
    return q.f + q.d + q.k <= q.n + 2


def _main_bound(q: Query) -> int:
    return q.k * (q.d - 1) + max(2, q.f)


def _verdict(q: Query) -> FeasibilityVerdict:
    n, f, d, k = q.n, q.f, q.d, q.k
    if d == 1:
        return FeasibilityVerdict(False, Clause.COMPLETE_EXCLUDED)
    if k == 1:
        if f == 0 and d == 2 and n < 9:
            return FeasibilityVerdict(False, Clause.PHI3_SMALL_N, {"min_n": 9})
        if f == 0:
            return FeasibilityVerdict(2 <= d <= n - 3, Clause.K1_F0, {"max_d": n - 3})
        if f == 1:
            return FeasibilityVerdict(2 <= d <= n - 2, Clause.K1_F1, {"max_d": n - 2})
        return FeasibilityVerdict(f + d <= n + 1, Clause.K1_F2PLUS, {"max_f_plus_d": n + 1})
    if d == 2:
        if f == 0:
            return FeasibilityVerdict(k <= n - 2, Clause.D2_F0, {"max_k": n - 2})
        if f == 1:
            return FeasibilityVerdict(k <= n - 3, Clause.D2_F1, {"max_k": n - 3})
        return FeasibilityVerdict(f + k <= n, Clause.D2_F2PLUS, {"max_f_plus_k": n})
    need = _main_bound(q)
    if not inequality_bound_holds(q):
        return FeasibilityVerdict(False, Clause.INEQ_FAIL, {"phi": q.phi, "max_phi": n + 2})
    return FeasibilityVerdict(n >= need, Clause.MAIN_BOUND, {"required_n": need})


def feasible(q: Query) -> FeasibilityVerdict:
    """Whether some connected non-complete graph realizes ``q``, and why.

    Only answered for ``n >= 8``; smaller orders belong to the enumeration
    census (:func:`deltagraph.enumeration.census`).
    """
    if q.n < MIN_THEOREM_ORDER:
        raise OutOfTheoremRange(
            f"n={q.n} is below {MIN_THEOREM_ORDER}; use the exhaustive census for small n"
        )
    return _verdict(q)


def feasible_triples(n: int) -> list[DeltaTriple]:
    """All (f, d, k) declared feasible at order ``n``, ascending."""
    out = []
    for f in range(n + 1):
        for d in range(1, n + 1):
            for k in range(1, n + 1):
                if feasible(Query(n, f, d, k)).feasible:
                    out.append(DeltaTriple(f, d, k))
    return out


# Recipes --------------------------------------------------------------------


@dataclass(frozen=True)
class Step:
    """One constructor call. ``inputs`` index earlier steps; ``params`` are
    sizes or 1-based vertex labels."""

    op: str
    inputs: tuple[int, ...] = ()
    params: tuple[int, ...] = ()

    def render(self, index: int) -> str:
        args = [f"#{i}" for i in self.inputs] + [str(p) for p in self.params]
        return f"#{index} = {self.op}({', '.join(args)})"


@dataclass(frozen=True)
class WitnessRecipe:
    steps: tuple[Step, ...]
    family_tag: str
    implementation_chosen: bool = False

    def render(self) -> str:
        head = f"family: {self.family_tag}"
        if self.implementation_chosen:
            head += " (member chosen by this implementation)"
        return "\n".join([head] + [s.render(i) for i, s in enumerate(self.steps)]) + "\n"

    def to_json(self) -> str:
        return json.dumps(
            {
                "family_tag": self.family_tag,
                "implementation_chosen": self.implementation_chosen,
                "steps": [
                    {"op": s.op, "inputs": list(s.inputs), "params": list(s.params)}
                    for s in self.steps
                ],
            },
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "WitnessRecipe":
        doc = json.loads(text)
        steps = tuple(
            Step(s["op"], tuple(s["inputs"]), tuple(s["params"])) for s in doc["steps"]
        )
        return cls(steps, doc["family_tag"], doc.get("implementation_chosen", False))


_SIZED: dict[str, Callable[..., Graph]] = {
    "empty": empty,
    "path": C.path,
    "cycle": C.cycle,
    "complete": C.complete,
    "complete_bipartite": C.complete_bipartite,
}


def _apply(step: Step, values: Sequence[Graph]) -> Graph:
    op = step.op
    if op in _SIZED:
        return _SIZED[op](*step.params)
    args = [values[i] for i in step.inputs]
    if op == "disjoint_union":
        return C.disjoint_union(*args)
    if op == "join":
        return C.join(*args)
    if op == "duplicate_vertex":
        v, times = step.params
        return C.duplicate_vertex(args[0], v - 1, times)
    if op == "with_edge":
        u, v = step.params
        return with_edge(args[0], u - 1, v - 1)
    if op == "without_edge":
        u, v = step.params
        return without_edge(args[0], u - 1, v - 1)
    raise ValueError(f"unknown recipe op {op!r}")


def replay(recipe: WitnessRecipe) -> Graph:
    values: list[Graph] = []
    for step in recipe.steps:
        values.append(_apply(step, values))
    return values[-1]


class _Tracer:
    """Records constructor calls while evaluating them."""

    def __init__(self) -> None:
        self.steps: list[Step] = []
        self.values: list[Graph] = []

    def _push(self, op: str, inputs: tuple[int, ...] = (), params: tuple[int, ...] = ()) -> int:
        step = Step(op, inputs, params)
        self.values.append(_apply(step, self.values))
        self.steps.append(step)
        return len(self.steps) - 1

    def empty(self, m: int) -> int:
        return self._push("empty", params=(m,))

    def path(self, m: int) -> int:
        return self._push("path", params=(m,))

    def cycle(self, m: int) -> int:
        return self._push("cycle", params=(m,))

    def complete(self, m: int) -> int:
        return self._push("complete", params=(m,))

    def bipartite(self, a: int, b: int) -> int:
        return self._push("complete_bipartite", params=(a, b))

    def union(self, a: int, b: int) -> int:
        return self._push("disjoint_union", (a, b))

    def join(self, a: int, b: int) -> int:
        return self._push("join", (a, b))

    def dup(self, g: int, v: int, times: int) -> int:
        if times == 0:
            return g
        return self._push("duplicate_vertex", (g,), (v, times))

    def add(self, g: int, *pairs: tuple[int, int]) -> int:
        for u, v in pairs:
            g = self._push("with_edge", (g,), (u, v))
        return g

    def remove(self, g: int, *pairs: tuple[int, int]) -> int:
        seen: set[tuple[int, int]] = set()
        for u, v in pairs:
            key = (min(u, v), max(u, v))
            if key not in seen:
                seen.add(key)
                g = self._push("without_edge", (g,), key)
        return g

    def clique_neighbourhood(self, g: int, v: int) -> int:
        """Make N(v) (as of now) a clique; ``v`` is 1-based."""
        nbrs = [u + 1 for u in bits(self.values[g].rows[v - 1])]
        missing = [
            (a, b) for a, b in combinations(nbrs, 2) if not self.values[g].rows[a - 1] >> (b - 1) & 1
        ]
        return self.add(g, *missing)

    def finish(self, tag: str, chosen: bool = False) -> WitnessRecipe:
        return WitnessRecipe(tuple(self.steps), tag, chosen)


# Witness families -----------------------------------------------------------
# Each builder receives a tracer and the query and returns the family tag.
# Labels follow the 1-based conventions of the original constructions.


def _kappa1(t: _Tracer, n: int, f: int, d: int) -> tuple[str, bool]:
    if f == 0 and d == 2:
        inner = t.union(t.cycle(4), t.cycle(n - 5))
        t.join(t.complete(1), inner)
        return "apex-over-two-cycles", True
    if f == 0 and d == 3:
        # apex n over C_{n-4} + P_3 on n-3..n-1, minus {n-2, n}
        h = t.join(t.union(t.cycle(n - 4), t.path(3)), t.complete(1))
        t.remove(h, (n - 2, n))
        return "apex-over-cycle-and-path-minus-edge", False
    if f == 0:
        g = t.dup(t.path(d + 1), 2, 1)
        t.dup(g, d, n - d - 2)
        return "path-dup-second-and-penultimate", False
    if f == 1 and d == 2:
        t.join(t.complete(1), t.union(t.cycle(n - 2), t.complete(1)))
        return "apex-over-cycle-and-point", False
    if f == 1 and d == n - 3:
        # 5-cycle 1..5 with a pendant path 6..n hanging off vertex 3
        g = t.union(t.cycle(5), t.path(n - 5))
        t.add(g, (3, 6))
        return "five-cycle-with-pendant-path", False
    if f == 1:
        t.dup(t.path(d + 1), 2, n - d - 1)
        tag = "four-cycle-with-pendant-path" if d == n - 2 else "path-dup-second"
        return tag, False
    if f == 2 and d == 2:
        t.join(t.complete(1), t.union(t.cycle(n - 3), t.complete(2)))
        return "apex-over-cycle-and-edge", False
    if d == 2:
        # star centred at 1 with a path on 2..n-f+2
        g = t.join(t.complete(1), t.empty(n - 1))
        t.add(g, *[(j, j + 1) for j in range(2, n - f + 2)])
        return "star-plus-path", False
    if f + d == n + 1:
        t.dup(t.path(d + 1), d + 1, f - 2)
        return "path-dup-end", False
    if f + d == n:
        g = t.dup(t.path(d + 1), 2, 1)
        g = t.add(g, (2, d + 2))
        t.dup(g, d + 1, f - 2)
        tag = "diamond-with-pendant-path" if f == 2 else "chorded-path-dup-end"
        return tag, False
    if f + d == n - 1:
        g = t.dup(t.path(d + 1), d + 1, f - 1)
        t.dup(g, 2, 1)
        return "path-dup-end-and-second", False
    # f + d <= n - 2: triangle d, d+1, d+2 at the far end
    g = t.union(t.path(d + 1), t.empty(1))
    g = t.add(g, (d, d + 2), (d + 1, d + 2))
    g = t.dup(g, d + 2, f - 1)
    t.dup(g, 2, n - d - f - 1)
    return "path-with-end-triangle", False


def _diam2(t: _Tracer, n: int, f: int, k: int) -> str:
    if f == 0:
        if k == 2:
            t.bipartite(2, n - 2)
            return "k2-bipartite"
        if k <= n - 5:
            h = t.join(t.complete(k), t.union(t.path(n - k - 2), t.path(2)))
            t.remove(h, (1, k + 2), (2, n - 3), (1, n - 1), (2, n))
            return "clique-join-two-paths-minus-edges"
        if k == n - 4:
            h = t.join(t.complete(k), t.union(t.path(2), t.path(2)))
            t.remove(h, (1, n - 3), (2, n - 2), (1, n - 1), (2, n))
            return "clique-join-two-edges-minus-edges"
        if k == n - 3:
            h = t.join(t.complete(k), t.path(3))
            t.remove(h, (1, n - 2), (2, n - 1), (3, n))
            return "clique-join-p3-minus-matching"
        h = t.join(t.complete(k), t.path(2))
        t.remove(h, (1, n - 1), (2, n))
        return "clique-join-edge-minus-matching"
    if f == 1:
        if k == 2:
            g = t.union(t.bipartite(2, n - 4), t.empty(2))
            t.add(g, (1, n - 1), (1, n), (2, n), (n - 1, n))
            return "k2-bipartite-plus-triangle"
        if k <= n - 4:
            h = t.join(t.complete(k), t.union(t.path(n - k - 1), t.complete(1)))
            t.remove(h, (1, k + 2), (2, n - 2))
            return "clique-join-path-and-point-minus-edges"
        h = t.join(t.complete(k), t.union(t.path(2), t.complete(1)))
        t.remove(h, (1, n - 2), (2, n - 1))
        return "clique-join-edge-and-point-minus-edges"
    if f == 2:
        if k <= n - 4:
            h = t.join(t.complete(k), t.union(t.path(n - k - 2), t.path(2)))
            t.remove(h, (1, n - 1), (2, n))
            return "clique-join-two-paths-minus-two"
        if k == n - 3:
            h = t.join(t.complete(k), t.path(3))
            t.remove(h, (n - 1, n - 2), (1, n))
            return "clique-join-p3-minus-two"
        t.join(t.complete(k), t.union(t.complete(1), t.complete(1)))
        return "clique-join-two-points"
    # cycle on 1..n-k, clique on the rest, cycle edges {j, j+1} j < f removed
    h = t.join(t.cycle(n - k), t.complete(k))
    t.remove(h, *[(j, j + 1) for j in range(1, f)])
    return "clique-join-cycle-minus-arc"


def _parallel_paths(t: _Tracer, n: int, f: int, d: int, k: int) -> str:
    base = k * (d - 1)
    hub_a, hub_b, gadget = base + 1, base + 2, base + 3
    inner = d - 3  # internal vertices per path

    def path_vertices(i: int) -> list[int]:
        start = 2 * k + (i - 1) * inner
        return [i] + list(range(start + 1, start + inner + 1)) + [i + k]

    g = t.empty(base + (3 if f >= 3 else 2))
    edges = []
    for i in range(1, k + 1):
        pv = path_vertices(i)
        edges.extend(zip(pv, pv[1:]))
        edges.append((i, hub_a))
        edges.append((i + k, hub_b))
    if f >= 3:
        s, u = path_vertices(k)[:2]
        edges.extend([(s, gadget), (u, gadget)])
    g = t.add(g, *edges)

    if f == 0:
        t.dup(g, 1, n - base - 2)
        return "parallel-paths-between-hubs"
    if f == 1:
        g = t.dup(g, 1, n - base - 2)
        t.add(g, *combinations(range(k + 1, 2 * k + 1), 2))
        return "parallel-paths-one-hub-clique"
    if f == 2:
        g = t.dup(g, 1, n - base - 2)
        g = t.clique_neighbourhood(g, hub_a)
        t.clique_neighbourhood(g, hub_b)
        return "parallel-paths-both-hubs-clique"
    g = t.dup(g, gadget, f - 3)
    g = t.dup(g, 1, n - base - f)
    g = t.clique_neighbourhood(g, hub_a)
    t.clique_neighbourhood(g, hub_b)
    return "parallel-paths-with-triangle-gadget"


def _layered(t: _Tracer, n: int, f: int, d: int, k: int) -> str:
    """Layers L_0..L_d with consecutive layers completely joined.

    Inner layers have k vertices (L_1 may be larger), so removing any inner
    layer is a minimum separator.  Free vertices are controlled by which
    layers are cliques: a vertex of L_0 is free iff L_0 and L_1 are cliques.
    """
    base = k * (d - 1)
    sizes = [1] + [k] * (d - 1) + [1]
    cliques = [False] * (d + 1)
    if f == 0:
        sizes[0] = n - base - 1
        tag = "layered-path-blowup"
    elif f == 1:
        sizes[d] = n - base - 1
        cliques[0] = cliques[1] = True
        tag = "layered-path-blowup-one-clique-end"
    else:
        sizes[0] = f - 1
        sizes[1] = k + n - base - f
        cliques[0] = cliques[1] = cliques[d - 1] = True
        tag = "layered-path-blowup-clique-ends"

    layers = []
    start = 1
    for size in sizes:
        layers.append(list(range(start, start + size)))
        start += size
    edges = []
    for i, layer in enumerate(layers):
        if cliques[i]:
            edges.extend(combinations(layer, 2))
        if i < d:
            edges.extend((u, v) for u in layer for v in layers[i + 1])
    t.add(t.empty(n), *edges)
    return tag


def _build(q: Query) -> tuple[Graph, WitnessRecipe]:
    t = _Tracer()
    chosen = False
    if q.k == 1:
        tag, chosen = _kappa1(t, q.n, q.f, q.d)
    elif q.d == 2:
        tag = _diam2(t, q.n, q.f, q.k)
    elif q.k == 2:
        tag = _parallel_paths(t, q.n, q.f, q.d, q.k)
    else:
        # two-hub parallel paths have degree-2 path vertices, capping kappa at 2
        tag = _layered(t, q.n, q.f, q.d, q.k)
    recipe = t.finish(tag, chosen)
    return replay(recipe), recipe


def construct_witness(q: Query) -> tuple[Graph, WitnessRecipe]:
    """Build a graph realizing ``q`` and check it before returning.

    Queries with ``k >= 2`` and ``d >= 3`` are also accepted below n = 8,
    since the parallel-paths bound carries no lower limit on n.
    """
    if q.n < MIN_THEOREM_ORDER and q.k >= 2 and q.d >= 3:
        verdict = _verdict(q)
    else:
        verdict = feasible(q)
    if not verdict.feasible:
        raise NotRealizable(f"{q} is not realizable ({verdict.clause})")
    g, recipe = _build(q)
    report = analyze(g)
    if g.n != q.n or report.complete or report.delta != q.triple:
        raise ConstructionMismatch(
            f"{recipe.family_tag} built n={g.n} delta={report.delta} for {q}"
        )
    return g, recipe


def witnesses_for_phi(n: int, i: int) -> list[tuple[Query, Graph, WitnessRecipe]]:
    """Every feasible triple with f + d + k = i at order n, each with a witness."""
    if n < MIN_THEOREM_ORDER:
        raise OutOfTheoremRange(f"n={n} is below {MIN_THEOREM_ORDER}")
    if not 3 <= i <= n + 2:
        raise NotRealizable(f"phi={i} outside 3..{n + 2}")
    out = []
    for t in feasible_triples(n):
        if t.phi == i:
            q = Query(n, *t)
            g, recipe = construct_witness(q)
            out.append((q, g, recipe))
    return out
