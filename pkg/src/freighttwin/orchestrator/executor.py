"""Workflow execution: step-by-step tool calls with output-to-input binding.

A template string that is exactly ``${name}`` is replaced by the bound
value (whole-value substitution; partial string interpolation is not
supported in v1). Execution stops at the first failing step; transport
errors are retried once with a short backoff, domain errors are final.
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass
from typing import Any

from ..errors import BindingError, TransportError
from ..toolproto.registry import TOOL_ERROR, ToolResult, result_to_dict
from .planner import WorkflowPlan, WorkflowStep

RETRY_BACKOFF_SECONDS = 0.1

_PATH_TOKEN = re.compile(r"\.([A-Za-z_][A-Za-z0-9_]*)|\[(\d+)\]")
_PLACEHOLDER = re.compile(r"^\$\{([A-Za-z_][A-Za-z0-9_]*)\}$")


@dataclass(frozen=True)
class StepOutcome:
    step_id: str
    result: ToolResult
    wall_ms: float


@dataclass(frozen=True)
class WorkflowResult:
    plan_id: str
    step_results: tuple[StepOutcome, ...]
    status: str  # "completed" | "failed"
    failed_at_step: str | None
    final_value: Any


def result_doc(result: WorkflowResult) -> dict:
    return {
        "plan_id": result.plan_id,
        "status": result.status,
        "failed_at_step": result.failed_at_step,
        "step_results": [
            {"step_id": outcome.step_id, "wall_ms": outcome.wall_ms, "result": result_to_dict(outcome.result)}
            for outcome in result.step_results
        ],
        "final_value": result.final_value,
    }


def strip_wall_ms(doc: Any) -> Any:
    """Copy of a document with every wall_ms field removed; wall-clock is
    the only nondeterministic part of a run record."""
    if isinstance(doc, dict):
        return {key: strip_wall_ms(value) for key, value in doc.items() if key != "wall_ms"}
    if isinstance(doc, list):
        return [strip_wall_ms(item) for item in doc]
    return doc


def resolve_json_path(value: Any, path: str) -> Any:
    """Resolve a '$', '$.key', '$.key[0].sub' style path."""
    if not path.startswith("$"):
        raise KeyError(f"path must start with '$': {path}")
    rest = path[1:]
    pos = 0
    current = value
    while pos < len(rest):
        match = _PATH_TOKEN.match(rest, pos)
        if match is None:
            raise KeyError(f"bad path syntax at {rest[pos:]!r}")
        key, index = match.group(1), match.group(2)
        if key is not None:
            if not isinstance(current, dict) or key not in current:
                raise KeyError(f"no member {key!r}")
            current = current[key]
        else:
            i = int(index)
            if not isinstance(current, list) or i >= len(current):
                raise KeyError(f"no element [{index}]")
            current = current[i]
        pos = match.end()
    return current


def _substitute(template: Any, step: WorkflowStep, values: dict[str, Any]) -> Any:
    if isinstance(template, str):
        match = _PLACEHOLDER.match(template)
        if match is None:
            return template
        name = match.group(1)
        if name not in step.bindings:
            raise BindingError(name, step.step_id, "?", "placeholder has no binding")
        src_step, path = step.bindings[name]
        if src_step not in values:
            raise BindingError(name, src_step, path, "source step has no result")
        try:
            return resolve_json_path(values[src_step], path)
        except KeyError as exc:
            raise BindingError(name, src_step, path, str(exc)) from None
    if isinstance(template, dict):
        return {key: _substitute(item, step, values) for key, item in template.items()}
    if isinstance(template, list):
        return [_substitute(item, step, values) for item in template]
    return template


def execute_workflow(plan: WorkflowPlan, client) -> WorkflowResult:
    """Run the chain in order; returns a prefix of step outcomes ending at
    the first failure (if any)."""
    outcomes: list[StepOutcome] = []
    values: dict[str, Any] = {}
    final_value: Any = None
    for step in plan.steps:
        try:
            arguments = _substitute(step.argument_template, step, values)
        except BindingError as exc:
            failure = ToolResult(
                id=step.step_id, ok=False, error={"code": TOOL_ERROR, "message": str(exc), "data": exc.payload()}
            )
            outcomes.append(StepOutcome(step.step_id, failure, 0.0))
            return WorkflowResult(plan.id, tuple(outcomes), "failed", step.step_id, final_value)
        call_id = f"{plan.id}/{step.step_id}"  # deterministic: run records must not depend on client state
        started = time.perf_counter()
        try:
            result = client.call(step.tool_name, arguments, call_id=call_id)
        except TransportError:
            time.sleep(RETRY_BACKOFF_SECONDS)
            result = client.call(step.tool_name, arguments, call_id=call_id)  # one retry, then propagate
        wall_ms = round((time.perf_counter() - started) * 1000.0, 2)
        outcomes.append(StepOutcome(step.step_id, result, wall_ms))
        if not result.ok:
            return WorkflowResult(plan.id, tuple(outcomes), "failed", step.step_id, final_value)
        values[step.step_id] = result.value
        final_value = result.value
    return WorkflowResult(plan.id, tuple(outcomes), "completed", None, final_value)
