from typing import Mapping

import numpy as np

from app.controllers.base import BaseController
from app.controllers.tempgraph import TemporalGraphController
from app.core.exceptions import (
    CalibrationException,
    EdgeNotFoundException,
    UsageException,
)
from app.integrations.graphs import rewire_edges
from app.models.tempgraph import (
    AggregatedGraph,
    Pair,
    Snapshot,
    TemporalNetwork,
    make_pair,
)
from app.repositories import ClassificationRepository
from app.schemas.responses.classification import (
    EdgeAssessment,
    EdgeFeatures,
    RelationshipClass,
    Thresholds,
)
from app.utils.logger import log_event
from app.utils.seeding import stage_rng


def _overlap(neighbor_sets: Mapping[int, frozenset[int]], u: int, v: int) -> float:
    nu, nv = neighbor_sets[u], neighbor_sets[v]
    common = len(nu & nv)
    # u and v are in each other's neighborhoods; drop both from the union
    reduced_union = len(nu) + len(nv) - common - 2
    return common / reduced_union if reduced_union > 0 else 0.0


class ClassifyController(BaseController[Mapping[Pair, EdgeAssessment]]):
    def __init__(
        self,
        classification_repository: ClassificationRepository,
        tempgraph_controller: TemporalGraphController,
    ):
        super().__init__(model=EdgeAssessment, repository=classification_repository)
        self.classification_repository = classification_repository
        self.tempgraph_controller = tempgraph_controller

    def persistence(self, pair: Pair, net: TemporalNetwork) -> float:
        """Fraction of all windows, empty ones included, that contain ``pair``."""
        windows = net.pair_windows.get(make_pair(*pair), 0)
        if windows == 0 or net.window_count < 1:
            raise EdgeNotFoundException(f"pair {pair} never interacts in the network")
        return windows / net.window_count

    def neighborhood_overlap(self, graph: AggregatedGraph, u: int, v: int) -> float:
        if not graph.has_edge(u, v):
            raise EdgeNotFoundException(f"({u}, {v}) is not an edge of the graph")
        return _overlap(graph.neighbor_sets, u, v)

    def edge_features(self, net: TemporalNetwork) -> dict[Pair, EdgeFeatures]:
        per, to = self._raw_features(net)
        return {
            pair: EdgeFeatures(per=per[pair], to=to[pair]) for pair in per
        }

    def reference_networks(
        self, net: TemporalNetwork, seed: int, shuffles: int
    ) -> list[TemporalNetwork]:
        """Copies of ``net`` with every snapshot rewired independently."""
        references = []
        for shuffle in range(shuffles):
            rng = stage_rng(seed, "shuffle", shuffle)
            snapshots = tuple(
                Snapshot(
                    index=snapshot.index,
                    edges=rewire_edges(snapshot.edges, int(rng.integers(2**31 - 1))),
                )
                for snapshot in net.snapshots
            )
            references.append(
                TemporalNetwork(
                    snapshots=snapshots,
                    window_count=net.window_count,
                    nodes=net.nodes,
                    index=net.index,
                )
            )
        return references

    def reference_pool(
        self, net: TemporalNetwork, seed: int, shuffles: int
    ) -> tuple[np.ndarray, np.ndarray]:
        """Pooled (per, to) values over all edges of the reference networks."""
        per_pool: list[float] = []
        to_pool: list[float] = []
        for reference in self.reference_networks(net, seed, shuffles):
            per, to = self._raw_features(reference)
            per_pool.extend(per.values())
            to_pool.extend(to.values())
        return np.asarray(per_pool, dtype=float), np.asarray(to_pool, dtype=float)

    def calibrate_thresholds(
        self, net: TemporalNetwork, p_rnd: float, seed: int, shuffles: int
    ) -> Thresholds:
        if not 0.0 < p_rnd < 1.0:
            raise UsageException(
                f"p_rnd must lie strictly between 0 and 1, got {p_rnd}"
            )
        if shuffles < 1:
            raise UsageException(f"shuffles must be at least 1, got {shuffles}")

        per_pool, to_pool = self.reference_pool(net, seed, shuffles)
        if per_pool.size == 0:
            raise CalibrationException(
                f"{shuffles} reference networks produced no edges"
            )

        q = 1.0 - p_rnd
        thresholds = Thresholds(
            t_per=float(np.quantile(per_pool, q, method="inverted_cdf")),
            t_to=float(np.quantile(to_pool, q, method="inverted_cdf")),
            p_rnd=p_rnd,
        )
        log_event(
            "classify.calibrated",
            reference_edges=int(per_pool.size),
            t_per=thresholds.t_per,
            t_to=thresholds.t_to,
        )
        return thresholds

    def classify_edges(
        self, net: TemporalNetwork, thresholds: Thresholds
    ) -> dict[Pair, EdgeAssessment]:
        return {
            pair: EdgeAssessment(features=features, label=thresholds.label(features))
            for pair, features in self.edge_features(net).items()
        }

    @staticmethod
    def class_counts(
        assessments: Mapping[Pair, EdgeAssessment],
    ) -> dict[RelationshipClass, int]:
        counts = {label: 0 for label in RelationshipClass}
        for assessment in assessments.values():
            counts[assessment.label] += 1
        return counts

    def _raw_features(
        self, net: TemporalNetwork
    ) -> tuple[dict[Pair, float], dict[Pair, float]]:
        graph = self.tempgraph_controller.aggregate(net)
        neighbor_sets = graph.neighbor_sets
        per = {
            pair: windows / net.window_count for pair, windows in net.pair_windows.items()
        }
        to = {pair: _overlap(neighbor_sets, *pair) for pair in per}
        return per, to
