from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from app.core.config import config
from app.schemas.responses.classification import Thresholds
from app.schemas.responses.quality import (
    ConsensusReport,
    GraphCharacterization,
    QualityReport,
)
from app.schemas.responses.trace import FilterTrace

GRAPH_VARIANTS = ("original", "null", "filtered", "random_subgraph")


class ReportDocument(BaseModel):
    schema_version: str = Field(default_factory=lambda: config.REPORT_SCHEMA_VERSION)
    kind: str


class TraceDocument(ReportDocument):
    kind: str = "filter_trace"
    trace: FilterTrace


class CharacterizationDocument(ReportDocument):
    kind: str = "characterization"
    graphs: Dict[str, Optional[GraphCharacterization]]


class ModularityRow(BaseModel):
    algorithm: str
    original: Optional[float] = None
    null: Optional[float] = None
    filtered: Optional[float] = None
    random_subgraph: Optional[float] = None


class ModularityDocument(ReportDocument):
    kind: str = "modularity"
    null_model_k: int
    rows: List[ModularityRow]


class QualityDocument(ReportDocument):
    kind: str = "quality"
    reports: Dict[str, Dict[str, Optional[QualityReport]]]


class GroundTruthRow(BaseModel):
    algorithm: str
    original: Optional[int] = None
    null: Optional[int] = None
    filtered: Optional[int] = None
    random_subgraph: Optional[int] = None
    gain: Optional[int] = Field(None, description="original - filtered")
    null_gain: Optional[int] = Field(None, description="original - null")


class GroundTruthDocument(ReportDocument):
    kind: str = "ground_truth"
    common_nodes: Dict[str, int]
    rows: List[GroundTruthRow]


class ConsensusDocument(ReportDocument):
    kind: str = "consensus"
    variants: Dict[str, Optional[ConsensusReport]]


class ClassificationDocument(ReportDocument):
    kind: str = "classification"
    thresholds: Thresholds
    class_counts: Dict[str, int]


class RunSummary(BaseModel):
    output_dir: str
    converged: bool
    iterations: int
    null_model_k: int
    edges: Dict[str, int]
    reports: List[str]
