from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class WindowingPolicy(BaseModel):
    model_config = ConfigDict(frozen=True)

    window_length: int = Field(..., ge=1, description="Time units per window.")
    origin: int = Field(0, ge=0, description="Start timestamp of window 0.")
    horizon: Optional[int] = Field(
        None, description="Exclusive end timestamp; fixes the window count when set."
    )

    @model_validator(mode="after")
    def horizon_after_origin(self):
        if self.horizon is not None and self.horizon <= self.origin:
            raise ValueError("horizon must be greater than origin")
        return self

    def window_of(self, t: int) -> int:
        return (t - self.origin) // self.window_length

    def covers(self, t: int) -> bool:
        if t < self.origin:
            return False
        return self.horizon is None or t < self.horizon

    @property
    def fixed_window_count(self) -> Optional[int]:
        if self.horizon is None:
            return None
        return -(-(self.horizon - self.origin) // self.window_length)
