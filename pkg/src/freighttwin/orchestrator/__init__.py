"""Deterministic workflow planning, execution, and narration."""

from .executor import (
    StepOutcome,
    WorkflowResult,
    execute_workflow,
    resolve_json_path,
    result_doc,
    strip_wall_ms,
)
from .explain import explain_result, format_money, format_percent, plan_cost_sentence
from .planner import (
    RunOptions,
    ScenarioRequest,
    WorkflowPlan,
    WorkflowStep,
    plan_to_dict,
    plan_workflow,
    request_from_dict,
    request_hash,
    request_to_dict,
)
from .runner import RunOutput, run_request
from .runstore import RunStore

__all__ = [
    "StepOutcome",
    "WorkflowResult",
    "execute_workflow",
    "resolve_json_path",
    "result_doc",
    "strip_wall_ms",
    "explain_result",
    "format_money",
    "format_percent",
    "plan_cost_sentence",
    "RunOptions",
    "ScenarioRequest",
    "WorkflowPlan",
    "WorkflowStep",
    "plan_to_dict",
    "plan_workflow",
    "request_from_dict",
    "request_hash",
    "request_to_dict",
    "RunOutput",
    "run_request",
    "RunStore",
]
