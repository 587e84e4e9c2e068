"""Pydantic request/response models for the HTTP gateway."""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..netmodel import TransportMode
from ..optimizer import Scenario
from ..orchestrator import RunOptions, ScenarioRequest


class ScenarioModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    origin: int
    destination: int
    containers: int = Field(ge=1)
    deadline_hours: float = Field(gt=0)
    carbon_price_usd_per_kg: float = Field(ge=0)
    allowed_modes: list[str] = Field(min_length=1)
    travel_time_cv: float = Field(default=0.0, ge=0)
    seed: int | None = Field(default=None, ge=0, lt=2**64)

    @field_validator("allowed_modes")
    @classmethod
    def _known_modes(cls, modes: list[str]) -> list[str]:
        valid = {m.value for m in TransportMode}
        unknown = [m for m in modes if m not in valid]
        if unknown:
            raise ValueError(f"unknown transport mode(s) {unknown}; valid: {sorted(valid)}")
        return modes


class RunOptionsModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    samples: int = Field(default=10000, ge=1)
    k_pool: int = Field(default=16, ge=1)
    want_map: bool = True


class ScenarioRequestModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    network_ref: str | None = None
    network: dict[str, Any] | None = None
    scenario: ScenarioModel
    options: RunOptionsModel = RunOptionsModel()

    @model_validator(mode="after")
    def _single_network_source(self) -> "ScenarioRequestModel":
        if (self.network_ref is None) == (self.network is None):
            raise ValueError("exactly one of network_ref/network must be given")
        return self

    def to_domain(self) -> ScenarioRequest:
        s = self.scenario
        return ScenarioRequest(
            scenario=Scenario(
                origin=s.origin,
                destination=s.destination,
                containers=s.containers,
                deadline_hours=s.deadline_hours,
                carbon_price_usd_per_kg=s.carbon_price_usd_per_kg,
                allowed_modes=frozenset(TransportMode(m) for m in s.allowed_modes),
                travel_time_cv=s.travel_time_cv,
                seed=s.seed,
            ),
            network_ref=self.network_ref,
            network_doc=self.network,
            options=RunOptions(
                samples=self.options.samples, k_pool=self.options.k_pool, want_map=self.options.want_map
            ),
        )


class SubmitResponse(BaseModel):
    run_id: str


class HealthResponse(BaseModel):
    ok: bool = True


class FixtureNode(BaseModel):
    id: int
    name: str
    kind: str
    lat: float
    lon: float


class FixtureInfo(BaseModel):
    name: str
    network_name: str
    node_count: int
    edge_count: int
    modes: list[str]
    nodes: list[FixtureNode]
