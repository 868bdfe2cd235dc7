from typing import Dict, List, Optional

import pandas as pd
from pydantic import BaseModel, Field, model_validator

from app.schemas.responses.classification import RelationshipClass, Thresholds


class IterationRecord(BaseModel):
    iteration: int = Field(..., ge=1)
    edges_at_start: int = Field(..., ge=0)
    nodes_at_start: int = Field(..., ge=0)
    class_counts: Dict[RelationshipClass, int]
    thresholds: Optional[Thresholds] = None
    edges_removed: int = Field(..., ge=0)
    nodes_removed: int = Field(..., ge=0)

    @model_validator(mode="after")
    def counts_cover_edges(self):
        if sum(self.class_counts.values()) != self.edges_at_start:
            raise ValueError("class counts must sum to the edge count at iteration start")
        return self


class FilterTrace(BaseModel):
    iterations: List[IterationRecord] = Field(default_factory=list)
    converged: bool = False

    @model_validator(mode="after")
    def converged_iff_last_removed_nothing(self):
        if self.iterations:
            last_removed = self.iterations[-1].edges_removed
            if self.converged != (last_removed == 0):
                raise ValueError("converged must hold exactly when the last iteration removed 0 edges")
        return self

    @property
    def final_thresholds(self) -> Optional[Thresholds]:
        for record in reversed(self.iterations):
            if record.thresholds is not None:
                return record.thresholds
        return None

    def to_frame(self) -> pd.DataFrame:
        rows = []
        for record in self.iterations:
            row = {
                "iteration": record.iteration,
                "edges": record.edges_at_start,
                "nodes": record.nodes_at_start,
            }
            for label in RelationshipClass:
                row[label.value] = record.class_counts.get(label, 0)
            row["t_per"] = record.thresholds.t_per if record.thresholds else None
            row["t_to"] = record.thresholds.t_to if record.thresholds else None
            row["edges_removed"] = record.edges_removed
            row["nodes_removed"] = record.nodes_removed
            rows.append(row)
        return pd.DataFrame(rows)

    def class_proportions(self) -> pd.DataFrame:
        """Share of each relationship class at every iteration."""
        frame = self.to_frame()
        labels = [label.value for label in RelationshipClass]
        if frame.empty:
            return pd.DataFrame(columns=["iteration", *labels])
        totals = frame["edges"].where(frame["edges"] > 0)
        proportions = frame[labels].div(totals, axis=0).fillna(0.0)
        proportions.insert(0, "iteration", frame["iteration"])
        return proportions
