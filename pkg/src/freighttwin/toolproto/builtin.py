"""The five built-in tools wrapping the core engines."""

from __future__ import annotations

from ..errors import ValidationError
from ..geoviz import plan_to_geojson
from ..netmodel import Network, network_from_dict, network_to_dict, validate_network
from ..optimizer import (
    assign_flow,
    flow_assignment_to_dict,
    k_best_plans,
    plan_from_dict,
    plan_to_dict,
    scenario_from_dict,
    solve_rcsp,
)
from ..simulator import monte_carlo, report_to_dict
from . import schemas
from .registry import ToolDescriptor, ToolRegistry


def _load_valid_network(doc: dict) -> Network:
    net = network_from_dict(doc)
    violations = validate_network(net)
    if violations:
        raise ValidationError(violations)
    return net


def _validate_network(args: dict) -> dict:
    net = network_from_dict(args["network"])
    violations = validate_network(net)
    return {
        "valid": not violations,
        "violations": [{"code": v.code, "entity_id": v.entity_id, "message": v.message} for v in violations],
        "network": network_to_dict(net),
    }


def _solve_route(args: dict) -> dict:
    net = _load_valid_network(args["network"])
    scenario = scenario_from_dict(args["scenario"])
    return plan_to_dict(solve_rcsp(net, scenario))


def _assign_flow(args: dict) -> dict:
    net = _load_valid_network(args["network"])
    scenario = scenario_from_dict(args["scenario"])
    pool = k_best_plans(net, scenario, args.get("k_pool", 16))
    return flow_assignment_to_dict(assign_flow(net, scenario, pool))


def _simulate_plan(args: dict) -> dict:
    net = _load_valid_network(args["network"])
    scenario = scenario_from_dict(args["scenario"])
    plan = plan_from_dict(args["plan"])
    return report_to_dict(monte_carlo(net, plan, scenario, args.get("samples", 10000)))


def _render_route(args: dict) -> dict:
    net = _load_valid_network(args["network"])
    plan = plan_from_dict(args["plan"])
    return plan_to_geojson(net, plan)


def build_default_registry() -> ToolRegistry:
    registry = ToolRegistry()
    registry.register(
        ToolDescriptor(
            name="validate_network",
            description="Check every network invariant; violations are returned as data, not errors.",
            input_schema={
                "type": "object",
                "required": ["network"],
                "additionalProperties": False,
                "properties": {"network": schemas.NETWORK_SCHEMA},
            },
            output_schema=schemas.VALIDATION_RESULT_SCHEMA,
        ),
        _validate_network,
    )
    registry.register(
        ToolDescriptor(
            name="solve_route",
            description="Deadline-constrained minimum-cost intermodal route for a scenario.",
            input_schema={
                "type": "object",
                "required": ["network", "scenario"],
                "additionalProperties": False,
                "properties": {"network": schemas.NETWORK_SCHEMA, "scenario": schemas.SCENARIO_SCHEMA},
            },
            output_schema=schemas.PLAN_SCHEMA,
        ),
        _solve_route,
    )
    registry.register(
        ToolDescriptor(
            name="assign_flow",
            description="Split the shipment over a k-best plan pool respecting edge capacities.",
            input_schema={
                "type": "object",
                "required": ["network", "scenario"],
                "additionalProperties": False,
                "properties": {
                    "network": schemas.NETWORK_SCHEMA,
                    "scenario": schemas.SCENARIO_SCHEMA,
                    "k_pool": {"type": "integer", "minimum": 1},
                },
            },
            output_schema=schemas.ASSIGNMENT_SCHEMA,
        ),
        _assign_flow,
    )
    registry.register(
        ToolDescriptor(
            name="simulate_plan",
            description="Monte Carlo on-time probability for a plan under travel-time noise.",
            input_schema={
                "type": "object",
                "required": ["network", "plan", "scenario"],
                "additionalProperties": False,
                "properties": {
                    "network": schemas.NETWORK_SCHEMA,
                    "plan": schemas.PLAN_SCHEMA,
                    "scenario": schemas.SCENARIO_SCHEMA,
                    "samples": {"type": "integer", "minimum": 1},
                },
            },
            output_schema=schemas.REPORT_SCHEMA,
        ),
        _simulate_plan,
    )
    registry.register(
        ToolDescriptor(
            name="render_route",
            description="GeoJSON FeatureCollection for a plan: leg LineStrings, transfer and endpoint Points.",
            input_schema={
                "type": "object",
                "required": ["network", "plan"],
                "additionalProperties": False,
                "properties": {"network": schemas.NETWORK_SCHEMA, "plan": schemas.PLAN_SCHEMA},
            },
            output_schema=schemas.GEOJSON_SCHEMA,
        ),
        _render_route,
    )
    return registry
