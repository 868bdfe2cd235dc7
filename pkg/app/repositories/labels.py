from pathlib import Path
from typing import Mapping

import pandas as pd

from app.models.nodes import NodeIndex
from app.models.tempgraph import Pair, make_pair
from app.repositories.base import BaseRepository


class NoiseLabelRepository(BaseRepository[Mapping[Pair, str]]):
    """Planted edge labels as `u,v,label` lines (`social` or `noise`)."""

    columns = ["u", "v", "label"]

    def read(self, path: Path, index: NodeIndex) -> dict[Pair, str]:
        frame = self._read_frame(path, self.columns)
        labels: dict[Pair, str] = {}
        for u, v, label in frame.itertuples(index=False):
            if u in index and v in index:
                labels[make_pair(index.index_of(u), index.index_of(v))] = label
        return dict(sorted(labels.items()))

    def write(self, labels: Mapping[Pair, str], path: Path, index: NodeIndex) -> Path:
        frame = pd.DataFrame(
            [
                (index.label_of(u), index.label_of(v), label)
                for (u, v), label in sorted(labels.items())
            ],
            columns=self.columns,
        )
        return self._write_frame(frame, path, comment="u,v,label")
