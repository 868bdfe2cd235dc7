from .classification import ClassificationRepository
from .events import EventRepository
from .graphs import GraphRepository
from .labels import NoiseLabelRepository
from .partitions import PartitionRepository
from .reports import ReportRepository

__all__ = [
    "ClassificationRepository",
    "EventRepository",
    "GraphRepository",
    "NoiseLabelRepository",
    "PartitionRepository",
    "ReportRepository",
]
