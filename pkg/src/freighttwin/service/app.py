"""HTTP gateway: scenario runs, fixtures, health, and the /rpc endpoint.

POST /scenarios enqueues a workflow run and answers 202 immediately; runs
execute on a worker pool and their records become immutable once terminal.
The JSON-RPC endpoint serves the same registry the orchestrator uses, so
serve-path results are bit-identical to in-process tool calls.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from contextlib import asynccontextmanager

from fastapi import FastAPI, HTTPException, Request, Response
from fastapi.exceptions import RequestValidationError

from .. import __version__
from ..canonical import canonical_dumps
from ..errors import FreightTwinError
from ..fixtures import FIXTURE_NAMES, load_fixture
from ..orchestrator import RunStore, request_hash, request_to_dict, run_request
from ..toolproto import InProcessClient, build_default_registry, handle_text
from .models import FixtureInfo, FixtureNode, HealthResponse, ScenarioRequestModel, SubmitResponse

JOURNAL_ENV = "FT_JOURNAL_PATH"
PORT_ENV = "FT_PORT"
UI_DIR_ENV = "FT_UI_DIR"
DEFAULT_PORT = 8080


def create_app(journal_path: str | None = None, max_workers: int = 16) -> FastAPI:
    if journal_path is None:
        journal_path = os.environ.get(JOURNAL_ENV) or None
    registry = build_default_registry()
    client = InProcessClient(registry)
    store = RunStore(journal_path)
    pool = ThreadPoolExecutor(max_workers=max_workers, thread_name_prefix="ft-run")

    @asynccontextmanager
    async def lifespan(_app: FastAPI):
        yield
        pool.shutdown(wait=True)  # graceful: in-flight runs finish

    app = FastAPI(title="freighttwin", version=__version__, lifespan=lifespan)
    app.state.registry = registry
    app.state.store = store

    @app.exception_handler(RequestValidationError)
    async def _validation_handler(_request: Request, exc: RequestValidationError):
        from fastapi.encoders import jsonable_encoder
        from fastapi.responses import JSONResponse

        return JSONResponse(status_code=400, content={"detail": jsonable_encoder(exc.errors())})

    def _execute(run_id: str, request) -> None:
        store.mark_running(run_id)
        try:
            output = run_request(request, client)
            if output.result.status == "completed":
                store.complete(
                    run_id,
                    plan_id=output.plan.id,
                    result_doc=output.result_doc(),
                    explanation=output.explanation,
                    geojson=output.geojson,
                )
            else:
                failed = output.result.step_results[-1].result.error if output.result.step_results else None
                store.fail(run_id, error_doc=failed or {"message": "workflow failed"},
                           plan_id=output.plan.id, result_doc=output.result_doc())
        except FreightTwinError as exc:
            store.fail(run_id, error_doc=exc.payload())
        except Exception as exc:  # a failing run must never take the gateway down
            store.fail(run_id, error_doc={"error": "Internal", "message": str(exc)})

    @app.post("/scenarios", status_code=202, response_model=SubmitResponse)
    def submit_scenario(body: ScenarioRequestModel) -> SubmitResponse:
        if body.network_ref is not None and body.network_ref not in FIXTURE_NAMES:
            raise HTTPException(status_code=400, detail=f"unknown fixture {body.network_ref!r}")
        try:
            request = body.to_domain()
        except FreightTwinError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        run_id = store.create(request_hash(request), request_to_dict(request))
        pool.submit(_execute, run_id, request)
        return SubmitResponse(run_id=run_id)

    @app.get("/runs/{run_id}")
    def get_run(run_id: str) -> dict:
        record = store.get(run_id)
        if record is None:
            raise HTTPException(status_code=404, detail=f"unknown run {run_id!r}")
        return record

    @app.get("/fixtures", response_model=list[FixtureInfo])
    def list_fixtures() -> list[FixtureInfo]:
        out = []
        for name in FIXTURE_NAMES:
            net = load_fixture(name)
            out.append(
                FixtureInfo(
                    name=name,
                    network_name=net.name,
                    node_count=len(net.nodes),
                    edge_count=len(net.edges),
                    modes=sorted(m.value for m in net.modes),
                    nodes=[
                        FixtureNode(id=n.id, name=n.name, kind=n.kind.value, lat=n.lat, lon=n.lon)
                        for n in net.nodes
                    ],
                )
            )
        return out

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse()

    @app.post("/rpc")
    async def rpc(request: Request) -> Response:
        body = await request.body()
        response = handle_text(registry, body.decode("utf-8", errors="replace"))
        return Response(content=canonical_dumps(response), media_type="application/json")

    ui_dir = os.environ.get(UI_DIR_ENV)
    if ui_dir and os.path.isdir(ui_dir):
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


def gateway_port() -> int:
    raw = os.environ.get(PORT_ENV)
    return int(raw) if raw else DEFAULT_PORT
