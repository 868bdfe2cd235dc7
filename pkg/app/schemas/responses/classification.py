from enum import StrEnum

from pydantic import BaseModel, ConfigDict, Field


class RelationshipClass(StrEnum):
    FRIEND = "friend"
    BRIDGE = "bridge"
    ACQUAINTANCE = "acquaintance"
    RANDOM = "random"


class EdgeFeatures(BaseModel):
    model_config = ConfigDict(frozen=True)

    per: float = Field(..., ge=0.0, le=1.0, description="Persistence over windows.")
    to: float = Field(..., ge=0.0, le=1.0, description="Neighborhood overlap.")


class Thresholds(BaseModel):
    model_config = ConfigDict(frozen=True)

    t_per: float = Field(..., ge=0.0, le=1.0)
    t_to: float = Field(..., ge=0.0, le=1.0)
    p_rnd: float = Field(..., gt=0.0, lt=1.0)

    def label(self, features: EdgeFeatures) -> RelationshipClass:
        # strict '>' for exceeding: boundary values fall to the low side
        persistent = features.per > self.t_per
        embedded = features.to > self.t_to
        if persistent and embedded:
            return RelationshipClass.FRIEND
        if persistent:
            return RelationshipClass.BRIDGE
        if embedded:
            return RelationshipClass.ACQUAINTANCE
        return RelationshipClass.RANDOM


class EdgeAssessment(BaseModel):
    model_config = ConfigDict(frozen=True)

    features: EdgeFeatures
    label: RelationshipClass
