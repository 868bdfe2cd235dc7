from itertools import combinations
from typing import Iterable, Mapping, Sequence

import networkx as nx
from hypothesis import strategies as st

from app.core.factory import Factory
from app.models.partition import Partition
from app.models.tempgraph import AggregatedGraph, TemporalNetwork
from app.schemas.requests.events import InteractionEvent
from app.schemas.requests.synth import SynthParams
from app.schemas.requests.windowing import WindowingPolicy

TRIANGLES = [("a", "b"), ("b", "c"), ("a", "c"), ("d", "e"), ("e", "f"), ("d", "f")]
BARBELL = [("a", "b"), ("b", "c"), ("a", "c"), ("c", "d"), ("d", "e"), ("e", "f"), ("d", "f")]

# small planted networks that keep Girvan-Newman fast
SMALL_SYNTH = SynthParams(
    community_sizes=[12, 12, 12, 12],
    windows=50,
    p_intra=0.3,
    social_density=0.5,
    noise_edges=60,
    seed=0,
)


def network_from_windows(
    windows: Mapping[int, Sequence[tuple[str, str]]],
    window_count: int,
    nodes: Iterable[str] = (),
) -> TemporalNetwork:
    """Temporal network with the given pairs in the given window indices."""
    events = [
        InteractionEvent(t=w, u=u, v=v) for w in sorted(windows) for u, v in windows[w]
    ]
    return (
        Factory()
        .get_ingest_controller()
        .build_windows(
            events, WindowingPolicy(window_length=1, horizon=window_count), nodes=nodes
        )
    )


def graph_from_edges(
    edges: Iterable[tuple[str, str]], nodes: Iterable[str] = ()
) -> AggregatedGraph:
    return AggregatedGraph.from_edges(edges, nodes=nodes)


def labelled(graph: AggregatedGraph, *blocks: Iterable[str]) -> Partition:
    """Partition of ``graph`` given as blocks of node labels."""
    return Partition.from_communities(
        [graph.index.index_of(label) for label in block] for block in blocks
    )


def pairwise_modularity(graph: AggregatedGraph, partition: Partition) -> float:
    """Q as the sum of A_ij - d_i d_j / 2m over same-community node pairs."""
    m = graph.m
    nodes = sorted(graph.nodes)
    total = 0.0
    for i in nodes:
        for j in nodes:
            if partition.community_of(i) != partition.community_of(j):
                continue
            a_ij = 1.0 if graph.has_edge(i, j) else 0.0
            total += a_ij - graph.degree(i) * graph.degree(j) / (2.0 * m)
    return total / (2.0 * m)


@st.composite
def random_graphs(draw, min_nodes: int = 1, max_nodes: int = 12, min_edges: int = 0):
    n = draw(st.integers(min_value=min_nodes, max_value=max_nodes))
    labels = [f"n{i:02d}" for i in range(n)]
    pairs = list(combinations(labels, 2))
    edges = (
        draw(st.lists(st.sampled_from(pairs), unique=True, min_size=min_edges))
        if pairs
        else []
    )
    return graph_from_edges(edges, nodes=labels)


@st.composite
def partitions_of(draw, nodes: Sequence[int], max_blocks: int = 5):
    labels = draw(
        st.lists(
            st.integers(min_value=0, max_value=max_blocks - 1),
            min_size=len(nodes),
            max_size=len(nodes),
        )
    )
    return Partition.from_assignment(dict(zip(nodes, labels)))


def to_nx(graph: AggregatedGraph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(graph.nodes)
    G.add_edges_from(graph.edge_weight)
    return G




@st.composite
def disconnected_graphs(draw, max_part_nodes: int = 6):
    """Two or three random parts with no edge between them."""
    edges: list[tuple[str, str]] = []
    labels: list[str] = []
    for part in "abc"[: draw(st.integers(min_value=2, max_value=3))]:
        n = draw(st.integers(min_value=1, max_value=max_part_nodes))
        part_labels = [f"{part}{i:02d}" for i in range(n)]
        pairs = list(combinations(part_labels, 2))
        if pairs:
            edges.extend(draw(st.lists(st.sampled_from(pairs), unique=True)))
        labels.extend(part_labels)
    return graph_from_edges(edges, nodes=labels)


def assert_within_components(graph: AggregatedGraph, partition: Partition) -> None:
    components = [frozenset(c) for c in nx.connected_components(to_nx(graph))]
    for community in partition.communities:
        assert any(community <= component for component in components), community


def exhaustive_projection(a: Partition, b: Partition) -> int:
    total = 0
    for block in a.communities:
        total += max(len(block & other) for other in b.communities)
    return total
