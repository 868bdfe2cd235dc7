from pathlib import Path
from typing import Iterable, Sequence, TextIO

from app.controllers.base import BaseController
from app.models.nodes import NodeIndex
from app.models.tempgraph import Pair, Snapshot, TemporalNetwork, make_pair
from app.repositories import EventRepository
from app.schemas.requests.events import InteractionEvent
from app.schemas.requests.windowing import WindowingPolicy
from app.schemas.responses.events import ParsedEvents
from app.utils.logger import log_event


class IngestController(BaseController[ParsedEvents]):
    def __init__(self, event_repository: EventRepository):
        super().__init__(model=InteractionEvent, repository=event_repository)
        self.event_repository = event_repository

    def parse_events(self, source: TextIO | Iterable[str]) -> ParsedEvents:
        parsed = self.event_repository.parse(source)
        self._warn_self_loops(parsed)
        return parsed

    def read_events(self, path: Path) -> ParsedEvents:
        parsed = self.event_repository.read(path)
        self._warn_self_loops(parsed, path=str(path))
        return parsed

    def build_windows(
        self,
        events: Sequence[InteractionEvent],
        policy: WindowingPolicy,
        nodes: Iterable[str] = (),
    ) -> TemporalNetwork:
        """Group events into per-window snapshots.

        ``nodes`` adds ids to the node universe that may never interact.
        Windows without any interaction are not materialized but keep their
        place in the numbering.
        """
        extra = list(nodes)
        kept = [event for event in events if policy.covers(event.t)]
        if len(kept) < len(events):
            log_event(
                "ingest.out_of_range",
                dropped=len(events) - len(kept),
                origin=policy.origin,
                horizon=policy.horizon,
            )

        index = NodeIndex.from_labels(
            [label for event in kept for label in (event.u, event.v)] + extra
        )
        windows: dict[int, dict[Pair, int]] = {}
        for event in kept:
            pair = make_pair(index.index_of(event.u), index.index_of(event.v))
            counts = windows.setdefault(policy.window_of(event.t), {})
            counts[pair] = counts.get(pair, 0) + 1

        snapshots = tuple(
            Snapshot(
                index=w,
                edges=frozenset(windows[w]),
                counts=dict(sorted(windows[w].items())),
            )
            for w in sorted(windows)
        )
        window_count = policy.fixed_window_count
        if window_count is None:
            window_count = snapshots[-1].index + 1 if snapshots else 0

        universe = frozenset(x for counts in windows.values() for pair in counts for x in pair)
        universe |= frozenset(index.index_of(label) for label in extra)
        return TemporalNetwork(
            snapshots=snapshots,
            window_count=window_count,
            nodes=universe,
            index=index,
        )

    def _warn_self_loops(self, parsed: ParsedEvents, **context) -> None:
        if parsed.dropped_self_loops:
            log_event(
                "ingest.self_loops_dropped",
                dropped=parsed.dropped_self_loops,
                **context,
            )
