from typing import List

from pydantic import BaseModel, Field

from app.schemas.requests.events import InteractionEvent


class ParsedEvents(BaseModel):
    events: List[InteractionEvent] = Field(default_factory=list)
    dropped_self_loops: int = 0
