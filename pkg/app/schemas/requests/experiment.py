from enum import StrEnum
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.core.config import config


class Algorithm(StrEnum):
    LP = "lp"
    LOUVAIN = "louvain"
    CNM = "cnm"
    EB = "eb"
    WALKTRAP = "walktrap"


class ExperimentConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    input_events: Path = Field(..., description="Event file `timestamp,u,v`.")
    window_length: int = Field(..., ge=1, description="Time units per window.")
    origin: int = Field(0, ge=0)
    horizon: Optional[int] = Field(None, description="Exclusive end timestamp.")
    p_rnd: float = Field(config.P_RND, gt=0.0, lt=1.0)
    shuffles: int = Field(config.SHUFFLES, ge=1)
    seed: int = Field(config.SEED, ge=0)
    algorithms: List[Algorithm] = Field(default_factory=lambda: list(Algorithm))
    ground_truth: Optional[Path] = Field(None, description="`node,community_id` file.")
    output_dir: Path = Field(..., description="Directory receiving every report.")
    max_iterations: int = Field(config.MAX_ITERATIONS, ge=1)
    eb_edge_budget: int = Field(config.EB_EDGE_BUDGET, ge=0)
    walk_length: int = Field(config.WALK_LENGTH, ge=1)
    weighted: bool = False

    @field_validator("algorithms")
    @classmethod
    def at_least_one_algorithm(cls, value: List[Algorithm]) -> List[Algorithm]:
        if not value:
            raise ValueError("at least one algorithm must be selected")
        # keep the canonical order and drop repeats
        return [algorithm for algorithm in Algorithm if algorithm in value]

    @model_validator(mode="after")
    def paths_resolvable(self):
        if not self.input_events.is_file():
            raise ValueError(f"input file {self.input_events} does not exist")
        if self.ground_truth is not None and not self.ground_truth.is_file():
            raise ValueError(f"ground truth file {self.ground_truth} does not exist")
        if self.output_dir.exists() and not self.output_dir.is_dir():
            raise ValueError(f"output path {self.output_dir} is not a directory")
        if self.horizon is not None and self.horizon <= self.origin:
            raise ValueError("horizon must be greater than origin")
        return self
