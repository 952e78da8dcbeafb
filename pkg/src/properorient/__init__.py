"""Proper orientations of triangle-free outerplanar graphs."""
from .embed import classify, decompose_blocks, embed_block
from .generators import GenParams, gen_composite, gen_fan, gen_random_2connected, gen_tightness
from .graph import Graph, Orientation, is_proper, max_indegree, parse_graph
from .oracle import bound_chain, decide_pon, exact_pon
from .orienter import orient_block, orient_bridgeless, orient_graph, orient_treefree

__all__ = [
    "Graph", "Orientation", "is_proper", "max_indegree", "parse_graph",
    "classify", "decompose_blocks", "embed_block",
    "GenParams", "gen_composite", "gen_fan", "gen_random_2connected", "gen_tightness",
    "bound_chain", "decide_pon", "exact_pon",
    "orient_block", "orient_bridgeless", "orient_graph", "orient_treefree",
]
