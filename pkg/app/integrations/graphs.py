import random
from typing import Iterable

import networkx as nx

from app.models.partition import Partition
from app.models.tempgraph import AggregatedGraph, Pair, make_pair
from app.utils.logger import log_event

# attempts allowed for each single swap before the shuffle gives up
SWAP_TRIES = 100


def to_networkx(graph: AggregatedGraph, weighted: bool = False) -> nx.Graph:
    """networkx view of ``graph`` with nodes and edges inserted in sorted order.

    Seeded networkx algorithms iterate in insertion order, so a fixed order
    keeps their output reproducible.
    """
    G = nx.Graph()
    G.add_nodes_from(sorted(graph.nodes))
    if weighted:
        G.add_weighted_edges_from(
            (u, v, weight) for (u, v), weight in graph.edge_weight.items()
        )
    else:
        G.add_edges_from(graph.edge_weight)
    return G


def communities_to_partition(communities: Iterable[Iterable[int]]) -> Partition:
    return Partition.from_communities(communities)


def rewire_edges(edges: Iterable[Pair], seed: int) -> frozenset[Pair]:
    """Degree-preserving shuffle of one edge set by double edge swaps.

    Performs one swap per edge. Edge sets too small to swap (fewer than two
    edges or four nodes) come back unchanged; when no further valid swap can be
    found the swaps made so far are kept.
    """
    edge_list = sorted(edges)
    if len(edge_list) < 2:
        return frozenset(edge_list)

    G = nx.Graph()
    G.add_edges_from(edge_list)
    if G.number_of_nodes() < 4:
        return frozenset(edge_list)

    requested = len(edge_list)
    rng = random.Random(seed)
    completed = 0
    try:
        for _ in range(requested):
            nx.double_edge_swap(G, nswap=1, max_tries=SWAP_TRIES, seed=rng)
            completed += 1
    except nx.NetworkXException:
        log_event(
            "rewire.partial",
            requested=requested,
            completed=completed,
            edges=len(edge_list),
            nodes=G.number_of_nodes(),
        )
    return frozenset(make_pair(u, v) for u, v in G.edges())
