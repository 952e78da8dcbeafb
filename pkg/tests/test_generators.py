import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from properorient.embed import classify, embed_block
from properorient.generators import (
    GenParams,
    gen_composite,
    gen_fan,
    gen_quad_chain,
    gen_random_2connected,
    gen_tightness,
)
from properorient.graph import format_graph


def test_tightness_shape():
    g = gen_tightness()
    assert (g.n, g.m) == (20, 25)
    c = classify(g)
    assert c.is_2connected and c.is_triangle_free and c.is_outerplanar
    assert sorted(g.degree(v) for v in range(5)) == [4] * 5


@pytest.mark.parametrize("k", range(5))
def test_fan_sizes(k):
    inst = gen_fan(k)
    assert inst.graph.n == 4 + 2 * k + 3
    assert inst.graph.m == 4 + 3 * k + 4
    assert classify(inst.graph).is_2connected


def test_nested_fan_and_chain():
    assert gen_fan(1, nested=2).graph.n == 4 + 2 + 3 + 4 + 3
    assert gen_quad_chain(3).graph.m == 4 + 9
    with pytest.raises(ValueError):
        gen_fan(-1)


def test_same_seed_same_bytes():
    p = GenParams(seed=7, n_target=60, fan_bias=0.5)
    assert format_graph(gen_random_2connected(p)) == format_graph(gen_random_2connected(p))
    q = GenParams(seed=7, n_target=40, n_blocks=5)
    assert format_graph(gen_composite(q, "treefree")) == format_graph(gen_composite(q, "treefree"))


def test_bad_params():
    with pytest.raises(ValueError):
        gen_random_2connected(GenParams(n_target=3))
    with pytest.raises(ValueError):
        gen_composite(GenParams(), "forest")


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**9), st.integers(4, 200), st.sampled_from([0.0, 0.5, 1.0]))
def test_random_2connected_in_class(seed, n, bias):
    g = gen_random_2connected(GenParams(seed=seed, n_target=n, fan_bias=bias))
    c = classify(g)
    assert c.is_2connected and c.is_outerplanar and c.is_triangle_free
    assert g.n <= n


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**9), st.integers(1, 10), st.sampled_from(["bridgeless", "treefree"]))
def test_composites_in_class(seed, blocks, mode):
    g = gen_composite(GenParams(seed=seed, n_target=15, n_blocks=blocks, bridge_prob=0.6), mode)
    c = classify(g)
    assert c.is_connected and c.is_outerplanar and c.is_triangle_free and c.is_tree_free
    if mode == "bridgeless":
        assert c.is_bridgeless


def test_fan_bias_plants_quads():
    g = gen_random_2connected(GenParams(seed=1, n_target=300, fan_bias=1.0))
    sizes = [len(f) for f in embed_block(g).inner_faces]
    assert sizes.count(4) > len(sizes) // 3
