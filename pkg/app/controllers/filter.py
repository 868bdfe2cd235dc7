from pathlib import Path
from typing import Mapping

import numpy as np

from app.controllers.base import BaseController
from app.controllers.classify import ClassifyController
from app.controllers.tempgraph import TemporalGraphController
from app.core.config import config
from app.core.exceptions import ConvergenceException, DataException, UsageException
from app.models.tempgraph import AggregatedGraph, Pair, Snapshot, TemporalNetwork
from app.repositories import ReportRepository
from app.schemas.responses.classification import RelationshipClass
from app.schemas.responses.reports import TraceDocument
from app.schemas.responses.trace import FilterTrace, IterationRecord
from app.utils.logger import log_event, stage_logger
from app.utils.seeding import derive_seed


class FilterController(BaseController[FilterTrace]):
    def __init__(
        self,
        report_repository: ReportRepository,
        classify_controller: ClassifyController,
        tempgraph_controller: TemporalGraphController,
    ):
        super().__init__(model=FilterTrace, repository=report_repository)
        self.report_repository = report_repository
        self.classify_controller = classify_controller
        self.tempgraph_controller = tempgraph_controller

    def remove_random(
        self, net: TemporalNetwork, labels: Mapping[Pair, RelationshipClass]
    ) -> TemporalNetwork:
        """Delete every interaction of Random-labelled pairs from all snapshots.

        Nodes left without any interaction leave the node universe; the window
        count is kept.
        """
        missing = [pair for pair in net.pair_windows if pair not in labels]
        if missing:
            raise DataException(
                f"{len(missing)} edges have no relationship class, first {missing[0]}"
            )

        random = {
            pair
            for pair in net.pair_windows
            if labels[pair] is RelationshipClass.RANDOM
        }
        if not random:
            return net

        snapshots = []
        for snapshot in net.snapshots:
            edges = snapshot.edges - random
            if not edges:
                continue
            counts = {
                pair: count for pair, count in snapshot.counts.items() if pair in edges
            }
            snapshots.append(Snapshot(index=snapshot.index, edges=edges, counts=counts))

        survivors = frozenset(x for snapshot in snapshots for x in snapshot.nodes)
        return TemporalNetwork(
            snapshots=tuple(snapshots),
            window_count=net.window_count,
            nodes=survivors,
            index=net.index,
        )

    def filter_to_fixpoint(
        self,
        net: TemporalNetwork,
        p_rnd: float,
        seed: int,
        max_iterations: int = config.MAX_ITERATIONS,
        shuffles: int = config.SHUFFLES,
    ) -> tuple[TemporalNetwork, FilterTrace]:
        """Classify and drop Random edges until an iteration removes nothing.

        Thresholds are recalibrated on the current network every iteration.
        Raises ``ConvergenceException`` with the partial trace when
        ``max_iterations`` pass without a fixpoint.
        """
        if max_iterations < 1:
            raise UsageException(f"max_iterations must be at least 1, got {max_iterations}")

        current = net
        records: list[IterationRecord] = []
        for iteration in range(1, max_iterations + 1):
            with stage_logger("filter", iteration=iteration):
                record, current = self._iterate(current, iteration, p_rnd, seed, shuffles)
            records.append(record)
            log_event(
                "filter.iteration",
                iteration=iteration,
                edges=record.edges_at_start,
                removed=record.edges_removed,
                counts={label.value: n for label, n in record.class_counts.items()},
            )
            if record.edges_removed == 0:
                return current, FilterTrace(iterations=records, converged=True)

        raise ConvergenceException(
            max_iterations, FilterTrace(iterations=records, converged=False)
        )

    def null_model_filter(self, graph: AggregatedGraph, k: int, seed: int) -> AggregatedGraph:
        """Delete ``k`` edges chosen uniformly without replacement, then isolated nodes."""
        if k < 0 or k > graph.m:
            raise DataException(
                f"cannot remove {k} edges from a graph with {graph.m} edges"
            )
        edges = graph.edges()
        removed = set(
            np.random.default_rng(seed).choice(len(edges), size=k, replace=False).tolist()
        )
        kept = {
            pair: graph.edge_weight[pair]
            for position, pair in enumerate(edges)
            if position not in removed
        }
        return self.tempgraph_controller.remove_isolated(
            AggregatedGraph.from_weights(kept, graph.index, graph.nodes)
        )

    def random_induced_subgraph(
        self, graph: AggregatedGraph, labels: Mapping[Pair, RelationshipClass]
    ) -> AggregatedGraph:
        selected = {
            pair: weight
            for pair, weight in graph.edge_weight.items()
            if labels.get(pair) is RelationshipClass.RANDOM
        }
        return AggregatedGraph.from_weights(selected, graph.index)

    def write_trace(self, trace: FilterTrace, output_dir: Path) -> list[Path]:
        return [
            self.report_repository.write(
                TraceDocument(trace=trace), output_dir / "filter_trace.json"
            ),
            self.report_repository.write_table(
                trace.to_frame(),
                output_dir / "filter_trace.txt",
                title="Relationship classes at each filtering iteration",
            ),
            self.report_repository.write_table(
                trace.class_proportions(),
                output_dir / "class_proportions.txt",
                title="Share of each relationship class per iteration",
            ),
        ]

    def _iterate(
        self,
        net: TemporalNetwork,
        iteration: int,
        p_rnd: float,
        seed: int,
        shuffles: int,
    ) -> tuple[IterationRecord, TemporalNetwork]:
        edges_at_start = len(net.pair_windows)
        nodes_at_start = len(net.nodes)
        if edges_at_start == 0:
            # nothing to classify; isolated universe nodes still drop out
            emptied = TemporalNetwork.empty(net.index, net.window_count)
            record = IterationRecord(
                iteration=iteration,
                edges_at_start=0,
                nodes_at_start=nodes_at_start,
                class_counts={label: 0 for label in RelationshipClass},
                edges_removed=0,
                nodes_removed=nodes_at_start,
            )
            return record, emptied

        thresholds = self.classify_controller.calibrate_thresholds(
            net, p_rnd, derive_seed(seed, "calibrate", iteration), shuffles
        )
        assessments = self.classify_controller.classify_edges(net, thresholds)
        labels = {pair: assessment.label for pair, assessment in assessments.items()}
        filtered = self.remove_random(net, labels)
        record = IterationRecord(
            iteration=iteration,
            edges_at_start=edges_at_start,
            nodes_at_start=nodes_at_start,
            class_counts=self.classify_controller.class_counts(assessments),
            thresholds=thresholds,
            edges_removed=edges_at_start - len(filtered.pair_windows),
            nodes_removed=nodes_at_start - len(filtered.nodes),
        )
        return record, filtered
