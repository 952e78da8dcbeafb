import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from properorient.generators import GenParams, gen_random_2connected, gen_tightness
from properorient.graph import Graph, is_proper, max_indegree
from properorient.oracle import BudgetExceeded, bound_chain, clique_number, decide_pon, exact_pon
from properorient.orienter import orient_block


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def enumerate_pon(g):
    """Plain enumeration of every orientation."""
    best = None
    for bits in itertools.product((0, 1), repeat=g.m):
        d = [0] * g.n
        for (u, v), b in zip(g.edges, bits):
            d[v if b else u] += 1
        if all(d[u] != d[v] for u, v in g.edges):
            k = max(d, default=0)
            best = k if best is None else min(best, k)
    return best


@pytest.mark.parametrize(
    "g,pon",
    [
        (cycle(5), 2),
        (Graph.from_edges(2, [(0, 1)]), 1),
        (cycle(4), 2),
        (Graph.from_edges(3, []), 0),
        (cycle(3), 2),
    ],
    ids=["C5", "K2", "C4", "empty", "C3"],
)
def test_small_values(g, pon):
    r = exact_pon(g)
    assert r.pon == pon
    assert is_proper(r.witness) and max_indegree(r.witness) == pon


def test_c5_decisions():
    assert decide_pon(cycle(5), 1)[0] is False
    ok, w = decide_pon(cycle(5), 2)
    assert ok and is_proper(w)


def test_tightness_example():
    g = gen_tightness()
    r = exact_pon(g)
    assert r.pon == 3
    assert decide_pon(g, 2)[0] is False


def test_bound_chain():
    assert bound_chain(cycle(5)) == (1, 2)
    k4 = Graph.from_edges(4, list(itertools.combinations(range(4), 2)))
    assert clique_number(k4) == 4
    assert bound_chain(k4) == (3, 3)


def test_budget():
    with pytest.raises(BudgetExceeded):
        exact_pon(cycle(30))
    assert exact_pon(cycle(30), budget=30).pon == 2


@st.composite
def small_graphs(draw):
    n = draw(st.integers(1, 7))
    pairs = list(itertools.combinations(range(n), 2))
    es = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=12)) if pairs else []
    return Graph.from_edges(n, es)


@settings(max_examples=200, deadline=None)
@given(small_graphs())
def test_exact_matches_enumeration(g):
    r = exact_pon(g)
    assert r.pon == enumerate_pon(g)
    lo, hi = bound_chain(g)
    assert lo <= r.pon <= hi
    assert decide_pon(g, r.pon)[0]
    assert not decide_pon(g, r.pon - 1)[0]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(4, 12))
def test_orienter_never_beats_the_optimum(seed, n):
    g = gen_random_2connected(GenParams(seed=seed, n_target=n, fan_bias=0.5))
    r = exact_pon(g)
    assert r.pon <= 3
    assert max_indegree(orient_block(g)) >= r.pon


def test_witness_is_deterministic():
    g = gen_tightness()
    assert exact_pon(g).witness.head == exact_pon(g).witness.head
