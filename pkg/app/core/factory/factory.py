from functools import partial

from app.controllers import (
    ClassifyController,
    DetectController,
    FilterController,
    IngestController,
    MetricsController,
    PipelineController,
    SynthController,
    TemporalGraphController,
)
from app.models.partition import Partition
from app.models.tempgraph import AggregatedGraph
from app.repositories import (
    ClassificationRepository,
    EventRepository,
    GraphRepository,
    NoiseLabelRepository,
    PartitionRepository,
    ReportRepository,
)
from app.schemas.requests.events import InteractionEvent
from app.schemas.responses.classification import EdgeAssessment
from app.schemas.responses.reports import ReportDocument


class Factory:
    event_repository = partial(EventRepository, InteractionEvent)
    graph_repository = partial(GraphRepository, AggregatedGraph)
    partition_repository = partial(PartitionRepository, Partition)
    classification_repository = partial(ClassificationRepository, EdgeAssessment)
    noise_label_repository = partial(NoiseLabelRepository, str)
    report_repository = partial(ReportRepository, ReportDocument)

    def get_ingest_controller(self) -> IngestController:
        return IngestController(event_repository=self.event_repository())

    def get_tempgraph_controller(self) -> TemporalGraphController:
        return TemporalGraphController(graph_repository=self.graph_repository())

    def get_classify_controller(self) -> ClassifyController:
        return ClassifyController(
            classification_repository=self.classification_repository(),
            tempgraph_controller=self.get_tempgraph_controller(),
        )

    def get_filter_controller(self) -> FilterController:
        return FilterController(
            report_repository=self.report_repository(),
            classify_controller=self.get_classify_controller(),
            tempgraph_controller=self.get_tempgraph_controller(),
        )

    def get_detect_controller(self) -> DetectController:
        return DetectController(partition_repository=self.partition_repository())

    def get_metrics_controller(self) -> MetricsController:
        return MetricsController()

    def get_synth_controller(self) -> SynthController:
        return SynthController(
            event_repository=self.event_repository(),
            partition_repository=self.partition_repository(),
            noise_label_repository=self.noise_label_repository(),
            ingest_controller=self.get_ingest_controller(),
        )

    def get_pipeline_controller(self) -> PipelineController:
        return PipelineController(
            report_repository=self.report_repository(),
            graph_repository=self.graph_repository(),
            partition_repository=self.partition_repository(),
            classification_repository=self.classification_repository(),
            ingest_controller=self.get_ingest_controller(),
            tempgraph_controller=self.get_tempgraph_controller(),
            classify_controller=self.get_classify_controller(),
            filter_controller=self.get_filter_controller(),
            detect_controller=self.get_detect_controller(),
            metrics_controller=self.get_metrics_controller(),
        )
