from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

__all__ = ["NodeIndex"]


@dataclass(frozen=True)
class NodeIndex:
    """Bidirectional mapping between opaque node ids and dense integer indices.

    Indices follow the sorted order of the ids, so the same id set always maps
    to the same indices whatever order the ids were first seen in.
    """

    labels: tuple[str, ...]
    _positions: dict[str, int] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "_positions", {label: i for i, label in enumerate(self.labels)}
        )

    @classmethod
    def from_labels(cls, labels: Iterable[str]) -> NodeIndex:
        return cls(labels=tuple(sorted(set(labels))))

    def __len__(self) -> int:
        return len(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self._positions

    def index_of(self, label: str) -> int:
        return self._positions[label]

    def get(self, label: str) -> int | None:
        return self._positions.get(label)

    def label_of(self, index: int) -> str:
        return self.labels[index]
