import heapq
from pathlib import Path

import networkx as nx
import numpy as np

from app.controllers.base import BaseController
from app.core.config import config
from app.core.exceptions import EdgeBudgetException, UsageException
from app.integrations.graphs import communities_to_partition, to_networkx
from app.models.partition import Partition
from app.models.tempgraph import AggregatedGraph, Pair, make_pair
from app.repositories import PartitionRepository
from app.schemas.requests.experiment import Algorithm
from app.utils.logger import log_event

# betweenness values closer than this count as tied
BETWEENNESS_TOLERANCE = 1e-9
# a later partition must beat the best modularity by more than this to replace it
MODULARITY_TOLERANCE = 1e-12


class DetectController(BaseController[Partition]):
    def __init__(self, partition_repository: PartitionRepository):
        super().__init__(model=Partition, repository=partition_repository)
        self.partition_repository = partition_repository

    def detect(
        self,
        graph: AggregatedGraph,
        algorithm: Algorithm,
        seed: int = config.SEED,
        walk_length: int = config.WALK_LENGTH,
        edge_budget: int = config.EB_EDGE_BUDGET,
        weighted: bool = False,
    ) -> Partition:
        try:
            algorithm = Algorithm(algorithm)
        except ValueError as e:
            raise UsageException(f"unknown algorithm {algorithm!r}", ex=e)

        match algorithm:
            case Algorithm.LP:
                return self.label_propagation(graph, seed, weighted=weighted)
            case Algorithm.LOUVAIN:
                return self.louvain(graph, seed, weighted=weighted)
            case Algorithm.CNM:
                return self.greedy_modularity_cnm(graph, weighted=weighted)
            case Algorithm.EB:
                return self.edge_betweenness_gn(graph, edge_budget=edge_budget)
            case Algorithm.WALKTRAP:
                return self.walktrap(graph, walk_length, weighted=weighted)
        raise UsageException(f"unknown algorithm {algorithm!r}")

    def label_propagation(
        self, graph: AggregatedGraph, seed: int, weighted: bool = False
    ) -> Partition:
        if graph.m == 0:
            return Partition.singletons(graph.nodes)
        communities = nx.community.asyn_lpa_communities(
            to_networkx(graph, weighted),
            weight="weight" if weighted else None,
            seed=seed,
        )
        return communities_to_partition(communities)

    def louvain(
        self, graph: AggregatedGraph, seed: int, weighted: bool = False
    ) -> Partition:
        if graph.m == 0:
            return Partition.singletons(graph.nodes)
        # unweighted graphs carry no weight attribute, so every edge counts 1
        communities = nx.community.louvain_communities(
            to_networkx(graph, weighted), weight="weight", seed=seed
        )
        return communities_to_partition(communities)

    def greedy_modularity_cnm(
        self, graph: AggregatedGraph, weighted: bool = False
    ) -> Partition:
        """Agglomerative modularity maximisation from singletons.

        Only adjacent communities are candidates. The pair with the largest
        gain merges, smallest id pair first on ties, and the merged community
        keeps the smaller id. Merging stops once no pair gains modularity.
        Gains are compared as the integer ``2W * w_ij - d_i * d_j``, which is
        ``dQ = 2 (e_ij - a_i a_j)`` scaled by ``2 W^2``.
        """
        if graph.m == 0:
            return Partition.singletons(graph.nodes)

        links: dict[int, dict[int, int]] = {node: {} for node in graph.nodes}
        for (u, v), weight in graph.edge_weight.items():
            w = int(weight) if weighted else 1
            links[u][v] = w
            links[v][u] = w
        degree = {node: sum(neighbors.values()) for node, neighbors in links.items()}
        ends = sum(degree.values())
        members = {node: [node] for node in graph.nodes}

        def gain(a: int, b: int) -> int:
            return ends * links[a][b] - degree[a] * degree[b]

        current: dict[tuple[int, int], int] = {}
        heap: list[tuple[int, int, int]] = []
        for a, neighbors in links.items():
            for b in neighbors:
                if a < b:
                    current[(a, b)] = gain(a, b)
                    heap.append((-current[(a, b)], a, b))
        heapq.heapify(heap)

        merges = 0
        while heap:
            negative, a, b = heapq.heappop(heap)
            if current.get((a, b)) != -negative:
                continue
            if -negative <= 0:
                break

            # b folds into a
            del current[(a, b)]
            members[a].extend(members.pop(b))
            degree[a] += degree.pop(b)
            moved = links.pop(b)
            del links[a][b]
            for other, w in moved.items():
                if other == a:
                    continue
                del links[other][b]
                current.pop((min(b, other), max(b, other)), None)
                links[a][other] = links[a].get(other, 0) + w
                links[other][a] = links[a][other]
            for other in links[a]:
                pair = (min(a, other), max(a, other))
                current[pair] = gain(*pair)
                heapq.heappush(heap, (-current[pair], *pair))
            merges += 1

        log_event("detect.cnm", merges=merges, communities=len(members))
        return communities_to_partition(members.values())

    def edge_betweenness(self, graph: AggregatedGraph | nx.Graph) -> dict[Pair, float]:
        """Unnormalized Brandes edge betweenness over unordered node pairs."""
        G = to_networkx(graph) if isinstance(graph, AggregatedGraph) else graph
        return {
            make_pair(u, v): value
            for (u, v), value in nx.edge_betweenness_centrality(
                G, normalized=False
            ).items()
        }

    def edge_betweenness_gn(
        self, graph: AggregatedGraph, edge_budget: int = config.EB_EDGE_BUDGET
    ) -> Partition:
        """Girvan-Newman divisive clustering cut at maximum modularity.

        The edge of highest betweenness is removed, smallest pair first on
        ties, and betweenness is recomputed inside the components touched by
        the removal. The component partition is recorded after every split.
        """
        if graph.m > edge_budget:
            raise EdgeBudgetException(graph.m, edge_budget)
        if graph.m == 0:
            return Partition.singletons(graph.nodes)

        original = to_networkx(graph)
        G = original.copy()
        best = communities_to_partition(nx.connected_components(G))
        best_q = nx.community.modularity(original, best.communities)

        betweenness: dict[Pair, float] = {}
        for component in nx.connected_components(G):
            if len(component) > 1:
                betweenness.update(self.edge_betweenness(G.subgraph(component)))

        removals = 0
        while betweenness:
            top = max(betweenness.values())
            u, v = min(
                pair
                for pair, value in betweenness.items()
                if value >= top - BETWEENNESS_TOLERANCE
            )
            G.remove_edge(u, v)
            del betweenness[(u, v)]
            removals += 1

            touched = [nx.node_connected_component(G, u)]
            split = v not in touched[0]
            if split:
                touched.append(nx.node_connected_component(G, v))
            for component in touched:
                if len(component) > 1:
                    betweenness.update(self.edge_betweenness(G.subgraph(component)))

            if split:
                candidate = communities_to_partition(nx.connected_components(G))
                q = nx.community.modularity(original, candidate.communities)
                if q > best_q + MODULARITY_TOLERANCE:
                    best, best_q = candidate, q

        log_event(
            "detect.edge_betweenness",
            removals=removals,
            communities=best.k,
            modularity=round(best_q, 6),
        )
        return best

    def walktrap(
        self,
        graph: AggregatedGraph,
        walk_length: int = config.WALK_LENGTH,
        weighted: bool = False,
    ) -> Partition:
        """Agglomerative random-walk clustering cut at maximum modularity.

        Each node gets a self-loop before the ``walk_length``-step transition
        probabilities are taken. Adjacent communities merge in order of the
        smallest increase of the mean squared walk distance, ties going to the
        smallest id pair. Modularity is tracked on the graph without the
        self-loops.
        """
        if walk_length < 1:
            raise UsageException(f"walk_length must be at least 1, got {walk_length}")
        if graph.m == 0:
            return Partition.singletons(graph.nodes)

        nodes = sorted(graph.nodes)
        n = len(nodes)
        position = {node: i for i, node in enumerate(nodes)}

        weights = np.zeros((n, n))
        for (u, v), weight in graph.edge_weight.items():
            w = float(weight) if weighted else 1.0
            weights[position[u], position[v]] = w
            weights[position[v], position[u]] = w

        looped = weights + np.eye(n)
        degree = looped.sum(axis=1)
        transition = looped / degree[:, None]
        # rows scaled by D^(-1/2) so euclidean distance is the walk distance
        walks = np.linalg.matrix_power(transition, walk_length)
        walks = walks / np.sqrt(degree)[None, :]

        total = weights.sum() / 2.0
        size = {i: 1 for i in range(n)}
        vector = {i: walks[i] for i in range(n)}
        internal = {i: 0.0 for i in range(n)}
        volume = {i: float(weights[i].sum()) for i in range(n)}
        links: dict[int, dict[int, float]] = {i: {} for i in range(n)}
        for (u, v), weight in graph.edge_weight.items():
            a, b = position[u], position[v]
            w = float(weight) if weighted else 1.0
            links[a][b] = w
            links[b][a] = w

        def sigma(a: int, b: int) -> float:
            diff = vector[a] - vector[b]
            factor = size[a] * size[b] / (size[a] + size[b])
            return float(factor * np.dot(diff, diff) / n)

        heap: list[tuple[float, int, int]] = []
        distance: dict[tuple[int, int], float] = {}
        for a in range(n):
            for b in links[a]:
                if a < b:
                    distance[(a, b)] = sigma(a, b)
                    heap.append((distance[(a, b)], a, b))
        heapq.heapify(heap)

        q = sum(_community_q(0.0, volume[i], total) for i in range(n))
        best_q, best_step = q, 0
        merges: list[tuple[int, int]] = []
        next_id = n
        while heap:
            ds, a, b = heapq.heappop(heap)
            if distance.get((a, b)) != ds:
                continue

            c = next_id
            next_id += 1
            size_a, size_b = size.pop(a), size.pop(b)
            size[c] = size_a + size_b
            vector[c] = (size_a * vector.pop(a) + size_b * vector.pop(b)) / size[c]

            q -= _community_q(internal[a], volume[a], total)
            q -= _community_q(internal[b], volume[b], total)
            internal[c] = internal.pop(a) + internal.pop(b) + links[a][b]
            volume[c] = volume.pop(a) + volume.pop(b)
            q += _community_q(internal[c], volume[c], total)

            merged: dict[int, float] = {}
            for old in (a, b):
                for other, w in links.pop(old).items():
                    if other == a or other == b:
                        continue
                    merged[other] = merged.get(other, 0.0) + w
                    del links[other][old]
                    distance.pop((min(old, other), max(old, other)), None)
            distance.pop((a, b), None)

            links[c] = merged
            for other in sorted(merged):
                links[other][c] = merged[other]
                # c is the newest id, so (other, c) is already ordered
                distance[(other, c)] = sigma(other, c)
                heapq.heappush(heap, (distance[(other, c)], other, c))

            merges.append((a, b))
            if q > best_q + MODULARITY_TOLERANCE:
                best_q, best_step = q, len(merges)

        members = {i: [nodes[i]] for i in range(n)}
        for step, (a, b) in enumerate(merges[:best_step]):
            members[n + step] = members.pop(a) + members.pop(b)

        log_event(
            "detect.walktrap",
            merges=len(merges),
            cut=best_step,
            communities=len(members),
            modularity=round(best_q, 6),
        )
        return communities_to_partition(members.values())

    def write_partition(
        self, partition: Partition, path: Path, graph: AggregatedGraph
    ) -> Path:
        return self.partition_repository.write(partition, path, graph.index)


def _community_q(internal: float, volume: float, total: float) -> float:
    return internal / total - (volume / (2.0 * total)) ** 2
