"""End-to-end scenario pipeline shared by the gateway and the CLI."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..fixtures import fixture_document
from .executor import WorkflowResult, execute_workflow, result_doc
from .explain import explain_result
from .planner import ScenarioRequest, WorkflowPlan, plan_workflow


@dataclass(frozen=True)
class RunOutput:
    plan: WorkflowPlan
    result: WorkflowResult
    explanation: str | None
    geojson: dict | None

    def result_doc(self) -> dict:
        return result_doc(self.result)


def run_request(
    req: ScenarioRequest,
    client,
    fixtures: Callable[[str], dict] = fixture_document,
) -> RunOutput:
    plan = plan_workflow(req, fixtures)
    result = execute_workflow(plan, client)
    explanation = None
    geojson = None
    if result.status == "completed":
        explanation = explain_result(result, req)
        for outcome in result.step_results:
            if outcome.step_id == "render_route" and outcome.result.ok:
                geojson = outcome.result.value
    return RunOutput(plan=plan, result=result, explanation=explanation, geojson=geojson)
