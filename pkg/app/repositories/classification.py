from pathlib import Path
from typing import Mapping

import pandas as pd

from app.models.nodes import NodeIndex
from app.models.tempgraph import Pair
from app.repositories.base import BaseRepository
from app.schemas.responses.classification import EdgeAssessment


class ClassificationRepository(BaseRepository[Mapping[Pair, EdgeAssessment]]):
    """Classification dumps as `u,v,per,to,class` lines sorted by (u, v)."""

    columns = ["u", "v", "per", "to", "class"]

    def to_frame(
        self, assessments: Mapping[Pair, EdgeAssessment], index: NodeIndex
    ) -> pd.DataFrame:
        rows = [
            (
                index.label_of(u),
                index.label_of(v),
                assessment.features.per,
                assessment.features.to,
                assessment.label.value,
            )
            for (u, v), assessment in sorted(assessments.items())
        ]
        return pd.DataFrame(rows, columns=self.columns)

    def write(
        self, assessments: Mapping[Pair, EdgeAssessment], path: Path, index: NodeIndex
    ) -> Path:
        return self._write_frame(
            self.to_frame(assessments, index), path, comment="u,v,per,to,class"
        )
