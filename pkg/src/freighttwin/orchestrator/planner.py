"""Deterministic workflow planning.

A scenario request maps to a fixed tool chain:

    validate_network -> solve_route [-> assign_flow] -> simulate_plan [-> render_route]

``assign_flow`` joins the chain exactly when the network carries any edge
capacity; ``render_route`` when the request wants a map. Plan ids are
derived from the canonical request hash, so identical requests plan
identically.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Any, Callable

from ..canonical import canonical_dumps
from ..errors import InvalidScenarioError
from ..fixtures import fixture_document
from ..optimizer import Scenario, scenario_from_dict, scenario_to_dict, validate_scenario
from ..netmodel import network_from_dict


@dataclass(frozen=True)
class RunOptions:
    samples: int = 10000
    k_pool: int = 16
    want_map: bool = True


@dataclass(frozen=True)
class ScenarioRequest:
    scenario: Scenario
    network_ref: str | None = None
    network_doc: dict | None = None
    options: RunOptions = field(default_factory=RunOptions)

    def __post_init__(self) -> None:
        if (self.network_ref is None) == (self.network_doc is None):
            raise InvalidScenarioError("exactly one of network_ref/network must be given")


@dataclass(frozen=True)
class WorkflowStep:
    step_id: str
    tool_name: str
    argument_template: dict
    bindings: dict[str, tuple[str, str]]  # placeholder -> (earlier step_id, JSON path)


@dataclass(frozen=True)
class WorkflowPlan:
    id: str
    steps: tuple[WorkflowStep, ...]


def request_to_dict(req: ScenarioRequest) -> dict:
    doc: dict[str, Any] = {
        "scenario": scenario_to_dict(req.scenario),
        "options": {
            "samples": req.options.samples,
            "k_pool": req.options.k_pool,
            "want_map": req.options.want_map,
        },
    }
    if req.network_ref is not None:
        doc["network_ref"] = req.network_ref
    else:
        doc["network"] = req.network_doc
    return doc


def request_from_dict(doc: dict) -> ScenarioRequest:
    options_doc = doc.get("options", {})
    return ScenarioRequest(
        scenario=scenario_from_dict(doc["scenario"]),
        network_ref=doc.get("network_ref"),
        network_doc=doc.get("network"),
        options=RunOptions(
            samples=options_doc.get("samples", 10000),
            k_pool=options_doc.get("k_pool", 16),
            want_map=options_doc.get("want_map", True),
        ),
    )


def request_hash(req: ScenarioRequest) -> str:
    return hashlib.sha256(canonical_dumps(request_to_dict(req)).encode("utf-8")).hexdigest()[:16]


def plan_to_dict(plan: WorkflowPlan) -> dict:
    return {
        "id": plan.id,
        "steps": [
            {
                "step_id": step.step_id,
                "tool_name": step.tool_name,
                "argument_template": step.argument_template,
                "bindings": {
                    name: {"step_id": src, "path": path} for name, (src, path) in step.bindings.items()
                },
            }
            for step in plan.steps
        ],
    }


def plan_workflow(req: ScenarioRequest, fixtures: Callable[[str], dict] = fixture_document) -> WorkflowPlan:
    validate_scenario(req.scenario)
    if req.network_ref is not None:
        network_doc = fixtures(req.network_ref)
    else:
        network_doc = req.network_doc
    net = network_from_dict(network_doc)  # structural check; semantic checks run in-chain
    scenario_doc = scenario_to_dict(req.scenario)

    net_binding = {"network": ("validate_network", "$.network")}
    steps = [
        WorkflowStep("validate_network", "validate_network", {"network": network_doc}, {}),
        WorkflowStep(
            "solve_route",
            "solve_route",
            {"network": "${network}", "scenario": scenario_doc},
            dict(net_binding),
        ),
    ]
    if net.has_capacities():
        steps.append(
            WorkflowStep(
                "assign_flow",
                "assign_flow",
                {"network": "${network}", "scenario": scenario_doc, "k_pool": req.options.k_pool},
                dict(net_binding),
            )
        )
    steps.append(
        WorkflowStep(
            "simulate_plan",
            "simulate_plan",
            {
                "network": "${network}",
                "plan": "${plan}",
                "scenario": scenario_doc,
                "samples": req.options.samples,
            },
            {**net_binding, "plan": ("solve_route", "$")},
        )
    )
    if req.options.want_map:
        steps.append(
            WorkflowStep(
                "render_route",
                "render_route",
                {"network": "${network}", "plan": "${plan}"},
                {**net_binding, "plan": ("solve_route", "$")},
            )
        )
    return WorkflowPlan(id=request_hash(req), steps=tuple(steps))
