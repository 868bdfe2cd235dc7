from pathlib import Path

import pandas as pd

from app.models.nodes import NodeIndex
from app.models.partition import Partition
from app.repositories.base import BaseRepository
from app.utils.logger import log_event


class PartitionRepository(BaseRepository[Partition]):
    """Partitions as `node,community_id` lines sorted by node."""

    columns = ["node", "community_id"]

    def read(self, path: Path, index: NodeIndex) -> Partition:
        """Read a partition over ``index``; ids missing from ``index`` are skipped."""
        frame = self._read_frame(path, self.columns)
        known = frame["node"].map(index.get)
        unknown = int(known.isna().sum())
        if unknown:
            log_event("partition.unknown_nodes", path=str(path), skipped=unknown)
        frame = frame.assign(index=known).dropna(subset=["index"])
        return self.model_class.from_assignment(
            dict(zip(frame["index"].astype(int), frame["community_id"]))
        )

    def to_frame(self, partition: Partition, index: NodeIndex) -> pd.DataFrame:
        rows = [
            (index.label_of(node), partition.assignment[node])
            for node in sorted(partition.assignment, key=index.label_of)
        ]
        return pd.DataFrame(rows, columns=self.columns)

    def write(self, partition: Partition, path: Path, index: NodeIndex) -> Path:
        return self._write_frame(
            self.to_frame(partition, index), path, comment="node,community_id"
        )
