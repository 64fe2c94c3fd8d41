import pytest
from hypothesis import given
from hypothesis import strategies as st

from deltagraph.enumeration import Universe, census
from deltagraph.errors import ConstructionMismatch, NotRealizable, OutOfTheoremRange
from deltagraph.graph import encode_graph6
from deltagraph.invariants import DeltaTriple, analyze
from deltagraph.realizability import (
    Clause,
    Query,
    WitnessRecipe,
    construct_witness,
    feasible,
    feasible_triples,
    inequality_bound_holds,
    replay,
    witnesses_for_phi,
)


def test_query_validation():
    with pytest.raises(ValueError):
        Query(2, 0, 2, 1)
    with pytest.raises(ValueError):
        Query(8, -1, 2, 1)
    with pytest.raises(ValueError):
        Query(8, 0, 0, 1)
    with pytest.raises(ValueError):
        Query(8, 0, 2, 0)
    q = Query(10, 1, 3, 2)
    assert q.triple == DeltaTriple(1, 3, 2) and q.phi == 6


def test_feasible_refuses_small_orders():
    with pytest.raises(OutOfTheoremRange):
        feasible(Query(7, 0, 2, 1))


@pytest.mark.parametrize(
    "query,ok,clause",
    [
        (Query(8, 0, 2, 1), False, Clause.PHI3_SMALL_N),
        (Query(9, 0, 2, 1), True, Clause.K1_F0),
        (Query(12, 3, 4, 3), True, Clause.MAIN_BOUND),
        (Query(11, 3, 4, 3), False, Clause.MAIN_BOUND),
        (Query(8, 0, 6, 1), False, Clause.K1_F0),
        (Query(8, 1, 6, 1), True, Clause.K1_F1),
        (Query(8, 2, 7, 1), True, Clause.K1_F2PLUS),
        (Query(8, 4, 2, 5), False, Clause.D2_F2PLUS),
        (Query(8, 0, 2, 6), True, Clause.D2_F0),
        (Query(8, 1, 2, 6), False, Clause.D2_F1),
        (Query(8, 5, 5, 2), False, Clause.INEQ_FAIL),
        (Query(8, 3, 1, 7), False, Clause.COMPLETE_EXCLUDED),
    ],
)
def test_verdicts(query, ok, clause):
    v = feasible(query)
    assert v.feasible is ok
    assert v.clause is clause
    assert str(v) == f"{'FEASIBLE' if ok else 'INFEASIBLE'} {clause.value}"


def test_main_bound_detail():
    assert feasible(Query(12, 3, 4, 3)).bound_detail == {"required_n": 12}


@pytest.mark.parametrize("n", range(8, 17))
def test_phi3_threshold(n):
    assert feasible(Query(n, 0, 2, 1)).feasible == (n >= 9)


@pytest.mark.parametrize("n", range(8, 15))
def test_feasible_triples_respect_bound(n):
    for t in feasible_triples(n):
        assert inequality_bound_holds(Query(n, *t))
        assert t.d >= 2 and t.phi >= 3


def test_feasible_set_matches_census_at_8():
    assert set(feasible_triples(8)) == census(8, Universe.CANONICAL_ALL).keys()


@pytest.mark.parametrize("i", range(3, 11))
def test_witnesses_for_phi_at_8(i):
    expected = {t for t in census(8, Universe.CANONICAL_ALL).keys() if t.phi == i}
    got = witnesses_for_phi(8, i)
    assert {q.triple for q, _, _ in got} == expected
    for q, g, _ in got:
        assert analyze(g).delta == q.triple


def test_witnesses_for_phi_range():
    assert witnesses_for_phi(8, 3) == []
    with pytest.raises(OutOfTheoremRange):
        witnesses_for_phi(7, 4)
    with pytest.raises(NotRealizable):
        witnesses_for_phi(8, 11)


def test_not_realizable():
    with pytest.raises(NotRealizable):
        construct_witness(Query(8, 0, 2, 1))
    with pytest.raises(OutOfTheoremRange):
        construct_witness(Query(6, 0, 2, 1))


def test_small_order_main_regime():
    g, _ = construct_witness(Query(6, 0, 3, 2))
    assert analyze(g).delta == (0, 3, 2)
    assert all(g.degree(v) == 2 for v in range(6))


def test_phi3_witness():
    g, recipe = construct_witness(Query(9, 0, 2, 1))
    assert recipe.implementation_chosen
    assert recipe.family_tag == "apex-over-two-cycles"
    assert g.degree(0) == 8


@pytest.mark.parametrize(
    "query,tag",
    [
        (Query(10, 1, 7, 1), "five-cycle-with-pendant-path"),
        (Query(10, 1, 8, 1), "four-cycle-with-pendant-path"),
        (Query(10, 2, 8, 1), "diamond-with-pendant-path"),
    ],
)
def test_long_path_families(query, tag):
    g, recipe = construct_witness(query)
    assert recipe.family_tag == tag
    assert analyze(g).delta == query.triple
    assert g.edge_count == query.n + (1 if query.f == 2 else 0)


def test_all_witnesses_up_to_12():
    count = 0
    for n in range(8, 13):
        for t in feasible_triples(n):
            g, _ = construct_witness(Query(n, *t))
            assert g.n == n and analyze(g).delta == t
            count += 1
    assert count > 0


def test_mismatch_is_an_assertion_error():
    assert issubclass(ConstructionMismatch, AssertionError)


@given(st.integers(8, 14).flatmap(lambda n: st.sampled_from([(n, t) for t in feasible_triples(n)])))
def test_recipe_replay_and_json(case):
    n, t = case
    g, recipe = construct_witness(Query(n, *t))
    assert replay(recipe) == g
    again = WitnessRecipe.from_json(recipe.to_json())
    assert again == recipe
    assert encode_graph6(replay(again)) == encode_graph6(g)
    assert construct_witness(Query(n, *t))[1] == recipe


def test_recipe_render():
    _, recipe = construct_witness(Query(8, 1, 6, 1))
    lines = recipe.render().splitlines()
    assert lines[0] == "family: four-cycle-with-pendant-path"
    assert lines[1].startswith("#0 = path(")
    assert all(line.startswith(f"#{i} = ") for i, line in enumerate(lines[1:]))
