"""Template-based, human-readable result narration.

Every figure in the rendered text is taken verbatim from the workflow
result or the originating request (money at its 2-decimal serialized
precision); the template never invents numbers.
"""

from __future__ import annotations

from ..errors import IncompleteResultError
from .executor import WorkflowResult
from .planner import ScenarioRequest


def format_money(value: float) -> str:
    return f"${value:,.2f}"


def format_percent(probability: float) -> str:
    pct = probability * 100.0
    if pct == int(pct):
        return f"{pct:.1f}%"
    return f"{pct:g}%"


def plan_cost_sentence(plan_doc: dict) -> str:
    return (
        f"This route results in a total cost of {format_money(plan_doc['total_usd'])}, including "
        f"{format_money(plan_doc['linehaul_usd'])} in operational expenses, "
        f"{format_money(plan_doc['transfer_usd'])} in transfer and handling, and "
        f"{format_money(plan_doc['ghg_tax_usd'])} in GHG tax."
    )


def _step_value(result: WorkflowResult, step_id: str):
    for outcome in result.step_results:
        if outcome.step_id == step_id and outcome.result.ok:
            return outcome.result.value
    return None


def _step_wall_ms(result: WorkflowResult, step_id: str) -> float | None:
    for outcome in result.step_results:
        if outcome.step_id == step_id:
            return outcome.wall_ms
    return None


def explain_result(result: WorkflowResult, req: ScenarioRequest) -> str:
    if result.status != "completed":
        raise IncompleteResultError(f"cannot explain a run with status {result.status!r}")
    validation = _step_value(result, "validate_network")
    plan = _step_value(result, "solve_route")
    report = _step_value(result, "simulate_plan")
    assignment = _step_value(result, "assign_flow")
    if validation is None or plan is None or report is None:
        raise IncompleteResultError("missing step results for explanation")

    names = {node["id"]: node["name"] for node in validation["network"]["nodes"]}
    s = req.scenario
    origin_name = names.get(s.origin, f"node {s.origin}")
    destination_name = names.get(s.destination, f"node {s.destination}")

    lines = [
        f"To fulfill your request of transporting {s.containers} containers "
        f"from {origin_name} (node {s.origin}) to {destination_name} (node {s.destination}) "
        f"within {s.deadline_hours:g} hours:"
    ]

    if not plan["legs"]:
        lines.append("Origin and destination coincide; no transport legs required.")
    else:
        lines.append(f"The optimized route uses {len(plan['legs'])} legs:")
        transfers = list(plan["transfers"])
        previous_mode = None
        for leg in plan["legs"]:
            if previous_mode is not None and leg["mode"] != previous_mode:
                stop = transfers.pop(0)
                lines.append(
                    f"  transfer at {names.get(stop['node_id'], 'node')} (node {stop['node_id']}): "
                    f"{stop['from_mode']} to {stop['to_mode']}"
                )
            lines.append(f"  - {leg['mode']} edge {leg['edge_id']}")
            previous_mode = leg["mode"]

    lines.append(plan_cost_sentence(plan))

    if assignment is not None:
        split = ", ".join(
            f"{route['containers']} containers via route {index + 1} ({format_money(route['plan']['total_usd'])})"
            for index, route in enumerate(assignment["routes"])
        )
        lines.append(
            f"Capacity-aware split: {split}; combined total {format_money(assignment['total_usd'])}."
        )

    lines.append(
        f"Simulated on-time probability {format_percent(report['on_time_probability'])} "
        f"over {report['samples']} samples."
    )
    wall_ms = _step_wall_ms(result, "solve_route")
    if wall_ms is not None:
        lines.append(f"Solver wall time {wall_ms:g} ms.")
    return "\n".join(lines)
