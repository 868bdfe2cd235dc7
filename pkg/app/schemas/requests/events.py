from pydantic import BaseModel, ConfigDict, Field, model_validator


class InteractionEvent(BaseModel):
    model_config = ConfigDict(frozen=True)

    t: int = Field(..., ge=0, description="Timestamp in abstract integer time units.")
    u: str = Field(..., min_length=1, description="First endpoint id.")
    v: str = Field(..., min_length=1, description="Second endpoint id.")

    @model_validator(mode="after")
    def distinct_endpoints(self):
        if self.u == self.v:
            raise ValueError(f"self-interaction on node {self.u!r}")
        return self
