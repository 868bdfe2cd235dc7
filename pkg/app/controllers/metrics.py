from typing import Mapping

import networkx as nx
import numpy as np

from app.controllers.base import BaseController
from app.core.exceptions import NodeSetMismatchException, UndefinedMetricException
from app.integrations.graphs import to_networkx
from app.models.partition import Partition
from app.models.tempgraph import AggregatedGraph
from app.schemas.responses.quality import ConductanceReport, ConsensusReport, QualityReport
from app.utils.logger import log_event


class MetricsController(BaseController[QualityReport]):
    def __init__(self):
        super().__init__(model=QualityReport)

    def modularity(self, graph: AggregatedGraph, partition: Partition) -> float:
        """Newman-Girvan modularity of ``partition`` on the unweighted graph."""
        if partition.nodes != graph.nodes:
            raise NodeSetMismatchException(
                f"partition covers {len(partition)} nodes, graph has {graph.n}"
            )
        if graph.m == 0:
            raise UndefinedMetricException("modularity is undefined on a graph without edges")
        return float(nx.community.modularity(to_networkx(graph), partition.communities))

    def conductance(self, graph: AggregatedGraph, partition: Partition) -> ConductanceReport:
        """cut/(2*internal + cut) per community, plus the plain cut/internal ratio.

        Communities without any incident edge are skipped.
        """
        if partition.nodes != graph.nodes:
            raise NodeSetMismatchException(
                f"partition covers {len(partition)} nodes, graph has {graph.n}"
            )
        internal = np.zeros(partition.k, dtype=int)
        cut = np.zeros(partition.k, dtype=int)
        for u, v in graph.edge_weight:
            cu, cv = partition.community_of(u), partition.community_of(v)
            if cu == cv:
                internal[cu] += 1
            else:
                cut[cu] += 1
                cut[cv] += 1

        report = ConductanceReport()
        for community in range(partition.k):
            inside, outside = int(internal[community]), int(cut[community])
            if inside + outside == 0:
                report.skipped_communities.append(community)
                continue
            report.conductance_per_community.append(outside / (2 * inside + outside))
            report.cut_ratio_per_community.append(outside / inside if inside else None)

        if report.skipped_communities:
            log_event(
                "metrics.conductance_skipped",
                skipped=len(report.skipped_communities),
            )
        if report.conductance_per_community:
            report.mean_conductance = float(np.mean(report.conductance_per_community))
        return report

    def quality_report(self, graph: AggregatedGraph, partition: Partition) -> QualityReport:
        conductance = self.conductance(graph, partition)
        return QualityReport(
            modularity=self.modularity(graph, partition) if graph.m else None,
            community_count=partition.k,
            **conductance.model_dump(),
        )

    def projection_distance(self, a: Partition, b: Partition) -> int:
        """Sum over the communities of ``a`` of their largest overlap with ``b``."""
        table = self._contingency(a, b)
        return int(table.max(axis=1).sum()) if table.size else 0

    def split_join(self, a: Partition, b: Partition) -> int:
        table = self._contingency(a, b)
        if not table.size:
            return 0
        n = len(a)
        return 2 * n - int(table.max(axis=1).sum()) - int(table.max(axis=0).sum())

    def restrict_to_common(self, a: Partition, b: Partition) -> tuple[Partition, Partition]:
        common = a.nodes & b.nodes
        if len(common) < max(len(a), len(b)):
            log_event(
                "metrics.restricted",
                common=len(common),
                dropped_a=len(a) - len(common),
                dropped_b=len(b) - len(common),
            )
        return a.restrict(common), b.restrict(common)

    def consensus_matrix(self, partitions: Mapping[str, Partition]) -> ConsensusReport:
        """Pairwise split-join distances; the score is the mean off-diagonal entry."""
        names = list(partitions)
        if names:
            nodes = partitions[names[0]].nodes
            for name in names[1:]:
                if partitions[name].nodes != nodes:
                    raise NodeSetMismatchException(
                        f"partition {name!r} covers a different node set than {names[0]!r}"
                    )

        k = len(names)
        matrix = [[0] * k for _ in range(k)]
        for i in range(k):
            for j in range(i + 1, k):
                distance = self.split_join(partitions[names[i]], partitions[names[j]])
                matrix[i][j] = matrix[j][i] = distance

        score = sum(map(sum, matrix)) / (k * (k - 1)) if k > 1 else 0.0
        return ConsensusReport(algorithms=names, matrix=matrix, score=score)

    @staticmethod
    def _contingency(a: Partition, b: Partition) -> np.ndarray:
        if a.nodes != b.nodes:
            raise NodeSetMismatchException(
                f"partitions cover {len(a)} and {len(b)} nodes; restrict them to "
                "their common nodes first"
            )
        nodes = sorted(a.nodes)
        table = np.zeros((a.k, b.k), dtype=int)
        np.add.at(
            table,
            (
                np.fromiter((a.community_of(x) for x in nodes), dtype=int, count=len(nodes)),
                np.fromiter((b.community_of(x) for x in nodes), dtype=int, count=len(nodes)),
            ),
            1,
        )
        return table
