from app.controllers.base import BaseController
from app.models.tempgraph import AggregatedGraph, TemporalNetwork
from app.repositories import GraphRepository
from app.schemas.responses.quality import GraphCharacterization


class TemporalGraphController(BaseController[AggregatedGraph]):
    def __init__(self, graph_repository: GraphRepository):
        super().__init__(model=AggregatedGraph, repository=graph_repository)
        self.graph_repository = graph_repository

    def aggregate(self, net: TemporalNetwork) -> AggregatedGraph:
        """Static graph of every pair that interacted, weighted by window count."""
        nodes = frozenset(x for snapshot in net.snapshots for x in snapshot.nodes)
        return AggregatedGraph.from_weights(net.pair_windows, net.index, nodes)

    def characterize(self, graph: AggregatedGraph) -> GraphCharacterization:
        max_degree = max((graph.degree(u) for u in graph.nodes), default=0)
        return GraphCharacterization(n=graph.n, m=graph.m, max_degree=max_degree)

    def remove_isolated(self, graph: AggregatedGraph) -> AggregatedGraph:
        connected = [u for u in graph.nodes if graph.degree(u) > 0]
        if len(connected) == graph.n:
            return graph
        return AggregatedGraph.from_weights(graph.edge_weight, graph.index, connected)
