from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from app.models.partition import Partition
from app.models.tempgraph import Pair, TemporalNetwork
from app.schemas.requests.events import InteractionEvent

__all__ = ["NOISE", "SOCIAL", "SyntheticNetwork"]

SOCIAL = "social"
NOISE = "noise"


@dataclass(frozen=True)
class SyntheticNetwork:
    """Planted-partition temporal network with the truth it was generated from."""

    events: tuple[InteractionEvent, ...]
    network: TemporalNetwork
    ground_truth: Partition
    # every aggregated edge labelled `social` or `noise`
    noise_labels: Mapping[Pair, str]
