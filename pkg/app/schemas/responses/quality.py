from typing import List, Optional

from pydantic import BaseModel, Field


class GraphCharacterization(BaseModel):
    n: int = Field(..., ge=0)
    m: int = Field(..., ge=0)
    max_degree: int = Field(..., ge=0)


class ConductanceReport(BaseModel):
    conductance_per_community: List[float] = Field(default_factory=list)
    mean_conductance: Optional[float] = None
    # literal outside/inside edge ratio; None where a community has no internal edge
    cut_ratio_per_community: List[Optional[float]] = Field(default_factory=list)
    skipped_communities: List[int] = Field(default_factory=list)


class QualityReport(BaseModel):
    modularity: Optional[float] = Field(None, ge=-0.5, le=1.0)
    community_count: int = Field(..., ge=0)
    conductance_per_community: List[float] = Field(default_factory=list)
    mean_conductance: Optional[float] = None
    cut_ratio_per_community: List[Optional[float]] = Field(default_factory=list)
    skipped_communities: List[int] = Field(default_factory=list)


class ConsensusReport(BaseModel):
    algorithms: List[str]
    matrix: List[List[int]]
    score: float = Field(..., ge=0.0, description="Mean off-diagonal split-join distance.")
