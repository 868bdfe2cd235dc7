from pathlib import Path
from typing import Dict, Mapping, Optional

import pandas as pd

from app.controllers.base import BaseController
from app.controllers.classify import ClassifyController
from app.controllers.detect import DetectController
from app.controllers.filter import FilterController
from app.controllers.ingest import IngestController
from app.controllers.metrics import MetricsController
from app.controllers.tempgraph import TemporalGraphController
from app.core.exceptions import ConvergenceException
from app.models.partition import Partition
from app.models.tempgraph import AggregatedGraph, Pair, TemporalNetwork
from app.repositories import (
    ClassificationRepository,
    GraphRepository,
    PartitionRepository,
    ReportRepository,
)
from app.schemas.requests.experiment import Algorithm, ExperimentConfig
from app.schemas.requests.windowing import WindowingPolicy
from app.schemas.responses.classification import EdgeAssessment, Thresholds
from app.schemas.responses.quality import ConsensusReport, QualityReport
from app.schemas.responses.reports import (
    GRAPH_VARIANTS,
    CharacterizationDocument,
    ClassificationDocument,
    ConsensusDocument,
    GroundTruthDocument,
    GroundTruthRow,
    ModularityDocument,
    ModularityRow,
    QualityDocument,
    RunSummary,
)
from app.utils.logger import log_event, stage_logger
from app.utils.seeding import derive_seed

Variants = Dict[str, AggregatedGraph]
Detections = Dict[str, Dict[Algorithm, Optional[Partition]]]


class PipelineController(BaseController[RunSummary]):
    """End-to-end experiment: filter the network, then compare communities."""

    def __init__(
        self,
        report_repository: ReportRepository,
        graph_repository: GraphRepository,
        partition_repository: PartitionRepository,
        classification_repository: ClassificationRepository,
        ingest_controller: IngestController,
        tempgraph_controller: TemporalGraphController,
        classify_controller: ClassifyController,
        filter_controller: FilterController,
        detect_controller: DetectController,
        metrics_controller: MetricsController,
    ):
        super().__init__(model=RunSummary, repository=report_repository)
        self.report_repository = report_repository
        self.graph_repository = graph_repository
        self.partition_repository = partition_repository
        self.classification_repository = classification_repository
        self.ingest_controller = ingest_controller
        self.tempgraph_controller = tempgraph_controller
        self.classify_controller = classify_controller
        self.filter_controller = filter_controller
        self.detect_controller = detect_controller
        self.metrics_controller = metrics_controller

    def run_pipeline(self, cfg: ExperimentConfig) -> RunSummary:
        out = cfg.output_dir
        written: list[Path] = []

        with stage_logger("ingest", input=str(cfg.input_events)):
            parsed = self.ingest_controller.read_events(cfg.input_events)
            net = self.ingest_controller.build_windows(
                parsed.events,
                WindowingPolicy(
                    window_length=cfg.window_length,
                    origin=cfg.origin,
                    horizon=cfg.horizon,
                ),
            )
            written.append(
                self.report_repository.write_node_index(net.index, out / "node_index.csv")
            )

        with stage_logger("original"):
            original = self.tempgraph_controller.aggregate(net)

        with stage_logger("filter"):
            try:
                filtered_net, trace = self.filter_controller.filter_to_fixpoint(
                    net, cfg.p_rnd, cfg.seed, cfg.max_iterations, cfg.shuffles
                )
            except ConvergenceException as error:
                self.filter_controller.write_trace(error.trace, out)
                raise
            written.extend(self.filter_controller.write_trace(trace, out))

        with stage_logger("filtered"):
            filtered = self.tempgraph_controller.aggregate(filtered_net)

        k = original.m - filtered.m
        with stage_logger("null", k=k):
            null = self.filter_controller.null_model_filter(
                original, k, derive_seed(cfg.seed, "null")
            )

        with stage_logger("random_subgraph"):
            first = trace.iterations[0].thresholds
            assessments = self._first_classification(net, first)
            labels = {pair: assessment.label for pair, assessment in assessments.items()}
            random_subgraph = self.filter_controller.random_induced_subgraph(
                original, labels
            )
            if first is not None:
                written.extend(self._write_classification(assessments, first, net, out))

        variants: Variants = {
            "original": original,
            "null": null,
            "filtered": filtered,
            "random_subgraph": random_subgraph,
        }
        for name in GRAPH_VARIANTS:
            written.append(
                self.graph_repository.write(variants[name], out / "graphs" / f"{name}.csv")
            )
        written.extend(self._write_characterization(variants, out))

        detections = self._detect_all(cfg, variants, out, written)
        quality = self._quality(variants, detections)
        written.extend(self._write_modularity(cfg, quality, k, out))

        if cfg.ground_truth is not None:
            with stage_logger("ground_truth", path=str(cfg.ground_truth)):
                truth = self.partition_repository.read(cfg.ground_truth, net.index)
                written.extend(self._write_ground_truth(cfg, detections, truth, out))

        with stage_logger("consensus"):
            written.extend(self._write_consensus(detections, out))

        summary = RunSummary(
            output_dir=str(out),
            converged=trace.converged,
            iterations=len(trace.iterations),
            null_model_k=k,
            edges={name: variants[name].m for name in GRAPH_VARIANTS},
            reports=sorted(str(path.relative_to(out)) for path in written),
        )
        log_event("pipeline.done", **summary.model_dump(exclude={"reports"}))
        return summary

    def _first_classification(
        self, net: TemporalNetwork, thresholds: Thresholds | None
    ) -> dict[Pair, EdgeAssessment]:
        if thresholds is None:
            return {}
        # the first iteration saw the unfiltered network, so this repeats its labels
        return self.classify_controller.classify_edges(net, thresholds)

    def _write_classification(
        self,
        assessments: Mapping[Pair, EdgeAssessment],
        thresholds: Thresholds,
        net: TemporalNetwork,
        out: Path,
    ) -> list[Path]:
        counts = self.classify_controller.class_counts(assessments)
        document = ClassificationDocument(
            thresholds=thresholds,
            class_counts={label.value: count for label, count in counts.items()},
        )
        return [
            self.classification_repository.write(
                assessments, out / "classification.csv", net.index
            ),
            self.report_repository.write(document, out / "classification.json"),
        ]

    def _write_characterization(self, variants: Variants, out: Path) -> list[Path]:
        graphs = {
            name: self.tempgraph_controller.characterize(variants[name])
            if variants[name].n
            else None
            for name in GRAPH_VARIANTS
        }
        frame = pd.DataFrame(
            [
                {"graph": name, **(row.model_dump() if row else {})}
                for name, row in graphs.items()
            ],
            columns=["graph", "n", "m", "max_degree"],
        )
        return [
            self.report_repository.write(
                CharacterizationDocument(graphs=graphs), out / "characterization.json"
            ),
            self.report_repository.write_table(
                frame, out / "characterization.txt", title="Graph characterization"
            ),
        ]

    def _detect_all(
        self,
        cfg: ExperimentConfig,
        variants: Variants,
        out: Path,
        written: list[Path],
    ) -> Detections:
        detections: Detections = {}
        for name in GRAPH_VARIANTS:
            graph = variants[name]
            detections[name] = {}
            for algorithm in cfg.algorithms:
                if graph.n == 0:
                    detections[name][algorithm] = None
                    continue
                with stage_logger("detect", graph=name, algorithm=algorithm.value):
                    partition = self.detect_controller.detect(
                        graph,
                        algorithm,
                        seed=derive_seed(cfg.seed, "detect", algorithm.value),
                        walk_length=cfg.walk_length,
                        edge_budget=cfg.eb_edge_budget,
                        weighted=cfg.weighted,
                    )
                detections[name][algorithm] = partition
                written.append(
                    self.detect_controller.write_partition(
                        partition,
                        out / "partitions" / f"{name}_{algorithm.value}.csv",
                        graph,
                    )
                )
        return detections

    def _quality(
        self, variants: Variants, detections: Detections
    ) -> Dict[str, Dict[Algorithm, Optional[QualityReport]]]:
        with stage_logger("metrics"):
            return {
                name: {
                    algorithm: self.metrics_controller.quality_report(
                        variants[name], partition
                    )
                    if partition is not None
                    else None
                    for algorithm, partition in detections[name].items()
                }
                for name in GRAPH_VARIANTS
            }

    def _write_modularity(
        self,
        cfg: ExperimentConfig,
        quality: Dict[str, Dict[Algorithm, Optional[QualityReport]]],
        k: int,
        out: Path,
    ) -> list[Path]:
        def q(name: str, algorithm: Algorithm) -> Optional[float]:
            report = quality[name][algorithm]
            return report.modularity if report is not None else None

        rows = [
            ModularityRow(
                algorithm=algorithm.value,
                **{name: q(name, algorithm) for name in GRAPH_VARIANTS},
            )
            for algorithm in cfg.algorithms
        ]
        quality_rows = [
            {
                "graph": name,
                "algorithm": algorithm.value,
                "modularity": report.modularity if report else None,
                "communities": report.community_count if report else None,
                "mean_conductance": report.mean_conductance if report else None,
            }
            for name in GRAPH_VARIANTS
            for algorithm, report in quality[name].items()
        ]
        return [
            self.report_repository.write(
                ModularityDocument(null_model_k=k, rows=rows), out / "modularity.json"
            ),
            self.report_repository.write_table(
                pd.DataFrame([row.model_dump() for row in rows]),
                out / "modularity.txt",
                title=f"Modularity per graph (null model removes {k} edges)",
            ),
            self.report_repository.write(
                QualityDocument(
                    reports={
                        name: {a.value: r for a, r in quality[name].items()}
                        for name in GRAPH_VARIANTS
                    }
                ),
                out / "quality.json",
            ),
            self.report_repository.write_table(
                pd.DataFrame(quality_rows), out / "quality.txt", title="Partition quality"
            ),
        ]

    def _write_ground_truth(
        self,
        cfg: ExperimentConfig,
        detections: Detections,
        truth: Partition,
        out: Path,
    ) -> list[Path]:
        common_nodes: Dict[str, int] = {}
        rows = []
        for algorithm in cfg.algorithms:
            distances: Dict[str, Optional[int]] = {}
            for name in GRAPH_VARIANTS:
                detected = detections[name][algorithm]
                if detected is None:
                    distances[name] = None
                    common_nodes[name] = 0
                    continue
                a, b = self.metrics_controller.restrict_to_common(detected, truth)
                common_nodes[name] = len(a)
                distances[name] = self.metrics_controller.split_join(a, b)
            rows.append(
                GroundTruthRow(
                    algorithm=algorithm.value,
                    **distances,
                    gain=_difference(distances["original"], distances["filtered"]),
                    null_gain=_difference(distances["original"], distances["null"]),
                )
            )
        return [
            self.report_repository.write(
                GroundTruthDocument(common_nodes=common_nodes, rows=rows),
                out / "ground_truth.json",
            ),
            self.report_repository.write_table(
                pd.DataFrame([row.model_dump() for row in rows]),
                out / "ground_truth.txt",
                title="Split-join distance to the ground truth (lower is closer)",
            ),
        ]

    def _write_consensus(self, detections: Detections, out: Path) -> list[Path]:
        variants: Dict[str, Optional[ConsensusReport]] = {}
        for name in GRAPH_VARIANTS:
            partitions = detections[name]
            if any(partition is None for partition in partitions.values()):
                variants[name] = None
                continue
            variants[name] = self.metrics_controller.consensus_matrix(
                {algorithm.value: partition for algorithm, partition in partitions.items()}
            )

        scores = pd.DataFrame(
            [
                {"graph": name, "score": report.score if report else None}
                for name, report in variants.items()
            ]
        )
        sections: list[tuple[str | None, pd.DataFrame, bool]] = [
            (
                "Consensus score: mean pairwise split-join (lower is more consensual)",
                scores,
                False,
            )
        ]
        for name, report in variants.items():
            if report is not None:
                sections.append(
                    (
                        name,
                        pd.DataFrame(
                            report.matrix,
                            index=report.algorithms,
                            columns=report.algorithms,
                        ),
                        True,
                    )
                )
        return [
            self.report_repository.write(
                ConsensusDocument(variants=variants), out / "consensus.json"
            ),
            self.report_repository.write_sections(sections, out / "consensus.txt"),
        ]


def _difference(before: Optional[int], after: Optional[int]) -> Optional[int]:
    if before is None or after is None:
        return None
    return before - after
