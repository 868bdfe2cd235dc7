from itertools import combinations
from pathlib import Path

import numpy as np

from app.controllers.base import BaseController
from app.controllers.ingest import IngestController
from app.core.exceptions import SynthCapacityException
from app.models.partition import Partition
from app.models.synthetic import NOISE, SOCIAL, SyntheticNetwork
from app.models.tempgraph import Pair, make_pair
from app.repositories import EventRepository, NoiseLabelRepository, PartitionRepository
from app.schemas.requests.events import InteractionEvent
from app.schemas.requests.synth import SynthParams
from app.schemas.requests.windowing import WindowingPolicy
from app.utils.logger import log_event
from app.utils.seeding import stage_rng

EVENTS_FILE = "events.csv"
GROUND_TRUTH_FILE = "ground_truth.csv"
NOISE_LABELS_FILE = "noise_labels.csv"


def node_label(node: int, width: int) -> str:
    return f"v{node:0{width}d}"


class SynthController(BaseController[SyntheticNetwork]):
    def __init__(
        self,
        event_repository: EventRepository,
        partition_repository: PartitionRepository,
        noise_label_repository: NoiseLabelRepository,
        ingest_controller: IngestController,
    ):
        super().__init__(model=SyntheticNetwork)
        self.event_repository = event_repository
        self.partition_repository = partition_repository
        self.noise_label_repository = noise_label_repository
        self.ingest_controller = ingest_controller

    def generate(self, params: SynthParams) -> SyntheticNetwork:
        """Planted communities with persistent social pairs and one-off noise pairs.

        Time is measured in windows: an event at ``t`` falls in window ``t``.
        """
        n = params.node_count
        width = max(4, len(str(n - 1)))
        labels = [node_label(node, width) for node in range(n)]

        community = np.repeat(
            np.arange(len(params.community_sizes)), params.community_sizes
        )
        starts = np.concatenate(([0], np.cumsum(params.community_sizes)[:-1]))

        social_rng = stage_rng(params.seed, "synth", "social")
        social: list[tuple[int, int]] = []
        for start, size in zip(starts.tolist(), params.community_sizes):
            pairs = list(combinations(range(start, start + size), 2))
            chosen = round(params.social_density * len(pairs))
            picked = social_rng.choice(len(pairs), size=chosen, replace=False)
            social.extend(pairs[i] for i in sorted(picked.tolist()))

        cross = [(u, v) for u, v in combinations(range(n), 2) if community[u] != community[v]]
        if params.noise_edges > len(cross):
            raise SynthCapacityException(params.noise_edges, len(cross))
        noise_rng = stage_rng(params.seed, "synth", "noise")
        picked = noise_rng.choice(len(cross), size=params.noise_edges, replace=False)
        noise = [cross[i] for i in sorted(picked.tolist())]

        interactions: list[tuple[int, int, int]] = []
        active = stage_rng(params.seed, "synth", "interactions").random(
            (len(social), params.windows)
        ) < params.p_intra
        for (u, v), windows in zip(social, active):
            interactions.extend((int(t), u, v) for t in np.flatnonzero(windows))
        for u, v in noise:
            windows = noise_rng.choice(params.windows, size=params.noise_repeat, replace=False)
            interactions.extend((int(t), u, v) for t in windows)
        interactions.sort()

        events = tuple(
            InteractionEvent(t=t, u=labels[u], v=labels[v]) for t, u, v in interactions
        )
        network = self.ingest_controller.build_windows(
            events,
            WindowingPolicy(window_length=1, origin=0, horizon=params.windows),
            nodes=labels,
        )

        index = network.index
        truth = Partition.from_assignment(
            {index.index_of(labels[node]): int(community[node]) for node in range(n)}
        )
        kind = {make_pair(u, v): SOCIAL for u, v in social}
        kind.update({make_pair(u, v): NOISE for u, v in noise})
        noise_labels: dict[Pair, str] = {}
        for (u, v), label in kind.items():
            pair = make_pair(index.index_of(labels[u]), index.index_of(labels[v]))
            # social pairs that never interacted have no edge to label
            if pair in network.pair_windows:
                noise_labels[pair] = label

        log_event(
            "synth.generated",
            nodes=n,
            events=len(events),
            social_pairs=len(social),
            noise_pairs=len(noise),
            seed=params.seed,
        )
        return SyntheticNetwork(
            events=events,
            network=network,
            ground_truth=truth,
            noise_labels=dict(sorted(noise_labels.items())),
        )

    def write(self, synthetic: SyntheticNetwork, output_dir: Path) -> list[Path]:
        index = synthetic.network.index
        return [
            self.event_repository.write(
                synthetic.events, output_dir / EVENTS_FILE, comment="timestamp,u,v"
            ),
            self.partition_repository.write(
                synthetic.ground_truth, output_dir / GROUND_TRUTH_FILE, index
            ),
            self.noise_label_repository.write(
                synthetic.noise_labels, output_dir / NOISE_LABELS_FILE, index
            ),
        ]
