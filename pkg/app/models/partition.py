from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from app.core.exceptions import InvalidPartitionException

__all__ = ["Partition"]


@dataclass(frozen=True)
class Partition:
    """Non-overlapping assignment of nodes to communities ``0..k-1``.

    Community ids are canonical: they are numbered by the smallest node of each
    community, so two partitions with the same blocks compare equal.
    """

    assignment: Mapping[int, int]

    @classmethod
    def from_assignment(cls, assignment: Mapping[int, object]) -> Partition:
        renumbered: dict[object, int] = {}
        dense: dict[int, int] = {}
        for node in sorted(assignment):
            label = assignment[node]
            if label not in renumbered:
                renumbered[label] = len(renumbered)
            dense[node] = renumbered[label]
        return cls(assignment=dense)

    @classmethod
    def from_communities(cls, communities: Iterable[Iterable[int]]) -> Partition:
        assignment: dict[int, int] = {}
        for label, community in enumerate(communities):
            for node in community:
                if node in assignment:
                    raise InvalidPartitionException(
                        f"node {node} appears in more than one community"
                    )
                assignment[node] = label
        return cls.from_assignment(assignment)

    @classmethod
    def singletons(cls, nodes: Iterable[int]) -> Partition:
        return cls.from_communities([node] for node in nodes)

    @cached_property
    def nodes(self) -> frozenset[int]:
        return frozenset(self.assignment)

    @property
    def k(self) -> int:
        return len(set(self.assignment.values()))

    @cached_property
    def communities(self) -> tuple[frozenset[int], ...]:
        blocks: dict[int, set[int]] = {}
        for node, label in self.assignment.items():
            blocks.setdefault(label, set()).add(node)
        return tuple(frozenset(blocks[label]) for label in sorted(blocks))

    def community_of(self, node: int) -> int:
        return self.assignment[node]

    def restrict(self, nodes: Iterable[int]) -> Partition:
        keep = set(nodes)
        return Partition.from_assignment(
            {node: label for node, label in self.assignment.items() if node in keep}
        )

    def __len__(self) -> int:
        return len(self.assignment)
