from .classify import ClassifyController
from .detect import DetectController
from .filter import FilterController
from .ingest import IngestController
from .metrics import MetricsController
from .pipeline import PipelineController
from .synth import SynthController
from .tempgraph import TemporalGraphController

__all__ = [
    "ClassifyController",
    "DetectController",
    "FilterController",
    "IngestController",
    "MetricsController",
    "PipelineController",
    "SynthController",
    "TemporalGraphController",
]
