"""Cover ideals of graphs: ordered matchings, Betti numbers and Stanley depth."""

import json as _json

from ._coverdepth import (
    ArithmeticError,
    DomainError,
    Graph,
    InputError,
    MonomialIdeal,
    ParseError,
    ResourceError,
    __version__,
    alexander_dual,
    colon,
    complete_bipartite_graph,
    complete_graph,
    cover_ideal,
    cycle_graph,
    edge_ideal,
    enumerate_graphs,
    hochster_reg_edge_ideal,
    intersect,
    is_bipartite,
    matching_number,
    max_ordered_matching,
    min_maximal_matching,
    minimal_vertex_covers,
    ordered_matching_number,
    parse_graph,
    path_graph,
    power,
    suite_ids,
    symbolic_power_cover,
)
from . import _coverdepth


def betti_table(ideal, field="rational", max_box=20000):
    """Multigraded Betti numbers of `ideal` with pd, reg and depth."""
    if field not in ("rational", "prime"):
        raise ValueError("field must be 'rational' or 'prime'")
    return _json.loads(_coverdepth._betti_json(ideal, field == "prime", max_box))


def sdepth(ideal, module="ideal", budget=5_000_000):
    """Exact Stanley depth (or certified bounds) with a witness partition."""
    return _json.loads(_coverdepth._sdepth_json(ideal, module, budget))


def decompose(graph, k=1, module="ideal"):
    """Constructed Stanley decomposition of J(G)^k or S/J(G)^k, verified."""
    return _json.loads(_coverdepth._decompose_json(graph, k, module))


def verify_decomposition(decomposition):
    """Exact check of a decomposition given as a dict in the JSON layout."""
    return _json.loads(_coverdepth._verify_decomposition_json(_json.dumps(decomposition)))


def invariants(graph):
    return _json.loads(_coverdepth._invariants_json(graph))


def run_suite(suite, n_max=4, k_max=3, budget=5_000_000, seed=0, bipartite_only=False):
    return _json.loads(_coverdepth._run_suite_json(suite, n_max, k_max, budget, seed, bipartite_only))
