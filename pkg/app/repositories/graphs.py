from pathlib import Path

import pandas as pd

from app.core.exceptions import DataException
from app.models.tempgraph import AggregatedGraph
from app.repositories.base import BaseRepository


class GraphRepository(BaseRepository[AggregatedGraph]):
    """Edge lists as `u,v,weight` lines; the weight column is optional on read."""

    columns = ["u", "v", "weight"]

    def read(self, path: Path) -> AggregatedGraph:
        try:
            frame = pd.read_csv(
                path,
                header=None,
                names=self.columns,
                dtype=str,
                comment="#",
                skipinitialspace=True,
            )
        except pd.errors.EmptyDataError:
            frame = pd.DataFrame(columns=self.columns)
        except (OSError, pd.errors.ParserError) as e:
            raise DataException(f"cannot read {path}: {e}", ex=e)

        if frame[["u", "v"]].isna().any(axis=None):
            raise DataException(f"{path}: every edge line needs `u,v`")
        frame["weight"] = frame["weight"].fillna("1")
        try:
            weights = frame["weight"].astype(int).tolist()
        except ValueError as e:
            raise DataException(f"{path}: weights must be integers", ex=e)

        loops = frame["u"] == frame["v"]
        if loops.any():
            raise DataException(f"{path}: {int(loops.sum())} self-loop edges")
        return self.model_class.from_edges(
            zip(frame["u"], frame["v"]), weights=weights
        )

    def to_frame(self, graph: AggregatedGraph) -> pd.DataFrame:
        rows = [
            (*graph.label_pair(pair), weight) for pair, weight in graph.edge_weight.items()
        ]
        return pd.DataFrame(rows, columns=self.columns)

    def write(self, graph: AggregatedGraph, path: Path) -> Path:
        return self._write_frame(self.to_frame(graph), path, comment="u,v,weight")
