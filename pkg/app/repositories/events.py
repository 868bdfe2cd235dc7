from pathlib import Path
from typing import Iterable, TextIO

from pydantic import ValidationError

from app.core.exceptions import DataException, ParseException
from app.repositories.base import BaseRepository
from app.schemas.requests.events import InteractionEvent
from app.schemas.responses.events import ParsedEvents


class EventRepository(BaseRepository[ParsedEvents]):
    def parse(self, stream: TextIO | Iterable[str]) -> ParsedEvents:
        events: list[InteractionEvent] = []
        dropped = 0
        for line_number, line in self._stream_lines(stream):
            fields = [field.strip() for field in line.split(",")]
            if len(fields) != 3:
                raise ParseException(
                    line_number, f"expected `timestamp,u,v`, got {line!r}"
                )
            raw_t, u, v = fields
            try:
                t = int(raw_t)
            except ValueError as e:
                raise ParseException(
                    line_number, f"timestamp {raw_t!r} is not an integer", ex=e
                )
            if t < 0:
                raise ParseException(line_number, f"negative timestamp {t}")
            if u == v:
                dropped += 1
                continue
            try:
                events.append(self.model_class(t=t, u=u, v=v))
            except ValidationError as e:
                raise ParseException(line_number, str(e.errors()[0]["msg"]), ex=e)

        # stable: equal timestamps keep file order
        events.sort(key=lambda event: event.t)
        return ParsedEvents(events=events, dropped_self_loops=dropped)

    def read(self, path: Path) -> ParsedEvents:
        try:
            with open(path, "r", encoding="utf-8") as handle:
                return self.parse(handle)
        except OSError as e:
            raise DataException(f"cannot read {path}: {e}", ex=e)

    def write(
        self, events: Iterable[InteractionEvent], path: Path, comment: str | None = None
    ) -> Path:
        header = f"# {comment}\n" if comment else ""
        body = "".join(f"{event.t},{event.u},{event.v}\n" for event in events)
        return self._write_text(header + body, path)
