from typing import List

from pydantic import BaseModel, ConfigDict, Field, model_validator


class SynthParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    community_sizes: List[int] = Field(
        default_factory=lambda: [25, 25, 25, 25],
        description="Planted community sizes.",
    )
    windows: int = Field(50, ge=2, description="Number of time windows W.")
    p_intra: float = Field(
        0.3, ge=0.0, le=1.0, description="Per-window interaction probability of a social pair."
    )
    social_density: float = Field(
        0.3, ge=0.0, le=1.0, description="Fraction of intra-community pairs that are social."
    )
    noise_edges: int = Field(200, ge=0, description="Random cross-community pairs.")
    noise_repeat: int = Field(1, ge=1, description="Windows each noise pair appears in.")
    seed: int = Field(0, ge=0)

    @model_validator(mode="after")
    def validate_sizes(self):
        if not self.community_sizes or any(size < 1 for size in self.community_sizes):
            raise ValueError("community_sizes must be a non-empty list of positive counts")
        if sum(self.community_sizes) < 4:
            raise ValueError("synthetic networks need at least 4 nodes")
        if self.noise_repeat > self.windows:
            raise ValueError("noise_repeat cannot exceed the number of windows")
        return self

    @property
    def node_count(self) -> int:
        return sum(self.community_sizes)
