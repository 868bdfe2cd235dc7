from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from app.models.nodes import NodeIndex

__all__ = ["Pair", "make_pair", "Snapshot", "TemporalNetwork", "AggregatedGraph"]

Pair = tuple[int, int]


def make_pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Snapshot:
    """Interactions of one time window: each unordered pair at most once."""

    index: int
    edges: frozenset[Pair]
    # per-pair interaction multiplicity inside the window, kept for reporting
    counts: Mapping[Pair, int] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if u >= v:
                raise ValueError(
                    f"snapshot {self.index}: pair ({u}, {v}) is not ordered or is a self-loop"
                )

    @cached_property
    def nodes(self) -> frozenset[int]:
        return frozenset(x for pair in self.edges for x in pair)

    def __contains__(self, pair: object) -> bool:
        return pair in self.edges

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class TemporalNetwork:
    snapshots: tuple[Snapshot, ...]
    window_count: int
    nodes: frozenset[int]
    index: NodeIndex

    def __post_init__(self) -> None:
        previous = -1
        for snapshot in self.snapshots:
            if snapshot.index <= previous or snapshot.index >= self.window_count:
                raise ValueError(
                    f"snapshot index {snapshot.index} out of order or beyond "
                    f"window_count={self.window_count}"
                )
            previous = snapshot.index
            if not snapshot.nodes <= self.nodes:
                raise ValueError(
                    f"snapshot {snapshot.index} has endpoints outside the node universe"
                )

    @classmethod
    def empty(cls, index: NodeIndex, window_count: int = 0) -> TemporalNetwork:
        return cls(snapshots=(), window_count=window_count, nodes=frozenset(), index=index)

    @property
    def total_snapshot_edges(self) -> int:
        return sum(len(snapshot) for snapshot in self.snapshots)

    @cached_property
    def pair_windows(self) -> dict[Pair, int]:
        """Number of snapshots containing each pair, in sorted pair order."""
        windows: dict[Pair, int] = {}
        for snapshot in self.snapshots:
            for pair in snapshot.edges:
                windows[pair] = windows.get(pair, 0) + 1
        return dict(sorted(windows.items()))

    def is_empty(self) -> bool:
        return not self.snapshots


@dataclass(frozen=True)
class AggregatedGraph:
    """Simple undirected static graph with window-count edge weights."""

    nodes: frozenset[int]
    adjacency: Mapping[int, tuple[int, ...]]
    edge_weight: Mapping[Pair, int]
    index: NodeIndex

    @classmethod
    def from_weights(
        cls,
        edge_weight: Mapping[Pair, int],
        index: NodeIndex,
        nodes: Iterable[int] | None = None,
    ) -> AggregatedGraph:
        neighbors: dict[int, list[int]] = {}
        for u, v in edge_weight:
            if u == v:
                raise ValueError(f"self-loop on node {u}")
            neighbors.setdefault(u, []).append(v)
            neighbors.setdefault(v, []).append(u)

        node_set = frozenset(neighbors) if nodes is None else frozenset(nodes)
        if not frozenset(neighbors) <= node_set:
            raise ValueError("edge endpoints outside the node set")

        adjacency = {u: tuple(sorted(neighbors.get(u, ()))) for u in sorted(node_set)}
        weights = {make_pair(u, v): w for (u, v), w in sorted(edge_weight.items())}
        return cls(nodes=node_set, adjacency=adjacency, edge_weight=weights, index=index)

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[str, str]],
        weights: Iterable[int] | None = None,
        nodes: Iterable[str] = (),
    ) -> AggregatedGraph:
        """Build a graph straight from labelled edges; repeated edges add weight."""
        edge_list = list(edges)
        weight_list = list(weights) if weights is not None else [1] * len(edge_list)
        extra = list(nodes)
        index = NodeIndex.from_labels(
            [x for edge in edge_list for x in edge] + extra
        )

        edge_weight: dict[Pair, int] = {}
        for (a, b), w in zip(edge_list, weight_list):
            pair = make_pair(index.index_of(a), index.index_of(b))
            edge_weight[pair] = edge_weight.get(pair, 0) + w
        node_set = {x for pair in edge_weight for x in pair}
        node_set.update(index.index_of(label) for label in extra)
        return cls.from_weights(edge_weight, index, node_set)

    @property
    def n(self) -> int:
        return len(self.nodes)

    @property
    def m(self) -> int:
        return len(self.edge_weight)

    def edges(self) -> list[Pair]:
        return list(self.edge_weight)

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adjacency[u]

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def has_edge(self, u: int, v: int) -> bool:
        return make_pair(u, v) in self.edge_weight

    @cached_property
    def neighbor_sets(self) -> dict[int, frozenset[int]]:
        return {u: frozenset(vs) for u, vs in self.adjacency.items()}

    def label_pair(self, pair: Pair) -> tuple[str, str]:
        return self.index.label_of(pair[0]), self.index.label_of(pair[1])
