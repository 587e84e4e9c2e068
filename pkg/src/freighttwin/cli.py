"""Batch entry point: solve / simulate / serve / oracle-check / demo.

Exit codes: 0 success, 1 input error, 2 deadline infeasible, 3 no path,
4 oracle mismatch. Environment: FT_PORT (gateway port), FT_JOURNAL_PATH
(run journal), FT_DOMINANCE_TOLERANCE (oracle-check test hook).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import random
import sys
import time
from pathlib import Path

from .canonical import canonical_dumps
from .errors import DeadlineInfeasibleError, FreightTwinError, NoPathError
from .fixtures import DEMO_FIXTURE, demo_scenario
from .geoviz import DEFAULT_ROUTE_LAYERS, DEFAULT_US_BBOX, build_wms_query
from .netmodel import load_network
from .optimizer import (
    DOMINANCE_TOLERANCE,
    enumerate_paths_oracle,
    plan_from_dict,
    plan_to_dict,
    scenario_from_dict,
    solve_rcsp,
)
from .orchestrator import (
    RunOptions,
    RunStore,
    ScenarioRequest,
    plan_cost_sentence,
    request_hash,
    request_to_dict,
    run_request,
    strip_wall_ms,
)
from .randomnet import random_scenario
from .simulator import monte_carlo, replay_plan, report_to_dict
from .toolproto import InProcessClient, build_default_registry, serve_stdio

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_DEADLINE = 2
EXIT_NO_PATH = 3
EXIT_ORACLE_MISMATCH = 4

DOMINANCE_TOLERANCE_ENV = "FT_DOMINANCE_TOLERANCE"


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FreightTwinError(f"cannot read {path}: {exc}") from None


def _cmd_solve(args: argparse.Namespace) -> int:
    try:
        net = load_network(_read(args.network))
        scenario = scenario_from_dict(json.loads(_read(args.scenario)))
    except (FreightTwinError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        plan = solve_rcsp(net, scenario)
    except DeadlineInfeasibleError as exc:
        print(f"deadline infeasible: minimum achievable time {exc.min_achievable_hours:g} h", file=sys.stderr)
        return EXIT_DEADLINE
    except NoPathError as exc:
        print(f"no path: {exc}", file=sys.stderr)
        return EXIT_NO_PATH
    except FreightTwinError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    doc = plan_to_dict(plan)
    if args.json:
        print(canonical_dumps(doc))
    else:
        names = {n.id: n.name for n in net.nodes}
        print(f"Route {names.get(plan.origin)} -> {names.get(plan.destination)}: {len(plan.legs)} legs")
        for leg in plan.legs:
            print(f"  - {leg.mode.value} edge {leg.edge_id}")
        print(plan_cost_sentence(doc))
        print(f"Total transit time {plan.total_time_hours:g} h (deadline {scenario.deadline_hours:g} h).")
    return EXIT_OK


def _cmd_simulate(args: argparse.Namespace) -> int:
    try:
        net = load_network(_read(args.network))
        scenario = scenario_from_dict(json.loads(_read(args.scenario)))
        plan = plan_from_dict(json.loads(_read(args.plan)))
        replay_plan(net, plan)
        report = monte_carlo(net, plan, scenario, args.samples)
    except (FreightTwinError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    doc = report_to_dict(report)
    if args.json:
        print(canonical_dumps(doc))
    else:
        print(
            f"{report.samples} samples, seed {report.seed_used}: "
            f"on-time probability {report.on_time_probability:.6f}, "
            f"p50 {report.completion_p50_hours:g} h, p95 {report.completion_p95_hours:g} h"
        )
    return EXIT_OK


def _cmd_oracle_check(args: argparse.Namespace) -> int:
    try:
        net = load_network(_read(args.network))
    except FreightTwinError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if len(net.nodes) > 10:
        print(f"error: oracle-check expects <= 10 nodes, got {len(net.nodes)}", file=sys.stderr)
        return EXIT_INPUT
    tolerance = DOMINANCE_TOLERANCE
    raw = os.environ.get(DOMINANCE_TOLERANCE_ENV)
    if raw:
        tolerance = float(raw)
        print(f"warning: dominance tolerance overridden to {tolerance:g}", file=sys.stderr)
    if args.trials == 0:
        print("0 trials requested; nothing to check")
        return EXIT_OK
    rng = random.Random(args.seed)
    for trial in range(args.trials):
        scenario = random_scenario(rng, net)
        solver_err = oracle_err = None
        solver_plan = oracle_plan = None
        try:
            solver_plan = solve_rcsp(net, scenario, dominance_tolerance=tolerance)
        except (DeadlineInfeasibleError, NoPathError) as exc:
            solver_err = exc
        try:
            oracle_plan = enumerate_paths_oracle(net, scenario, len(net.nodes))
        except (DeadlineInfeasibleError, NoPathError) as exc:
            oracle_err = exc
        mismatch = None
        if (solver_err is None) != (oracle_err is None):
            mismatch = f"solver {solver_err!r} vs oracle {oracle_err!r}"
        elif solver_err is not None:
            if type(solver_err) is not type(oracle_err):
                mismatch = f"solver {solver_err.kind} vs oracle {oracle_err.kind}"
            elif isinstance(solver_err, DeadlineInfeasibleError) and not math.isclose(
                solver_err.min_achievable_hours, oracle_err.min_achievable_hours, rel_tol=1e-9, abs_tol=1e-9
            ):
                mismatch = (
                    f"min achievable {solver_err.min_achievable_hours} vs {oracle_err.min_achievable_hours}"
                )
        else:
            if not math.isclose(solver_plan.total_usd, oracle_plan.total_usd, rel_tol=1e-9, abs_tol=1e-9):
                mismatch = f"total {solver_plan.total_usd} vs {oracle_plan.total_usd}"
            elif solver_plan.edge_ids != oracle_plan.edge_ids:
                mismatch = f"legs {solver_plan.edge_ids} vs {oracle_plan.edge_ids}"
        if mismatch:
            print(f"counterexample at trial {trial}: {mismatch}", file=sys.stderr)
            print(f"scenario: {canonical_dumps(_scenario_doc(scenario))}", file=sys.stderr)
            return EXIT_ORACLE_MISMATCH
    print(f"{args.trials} trials, solver and oracle agree")
    return EXIT_OK


def _scenario_doc(scenario) -> dict:
    from .optimizer import scenario_to_dict

    return scenario_to_dict(scenario)


def _cmd_demo(args: argparse.Namespace) -> int:
    del args
    started = time.perf_counter()
    request = ScenarioRequest(
        scenario=demo_scenario(),
        network_ref=DEMO_FIXTURE,
        options=RunOptions(samples=10000, k_pool=16, want_map=True),
    )
    store = RunStore(os.environ.get("FT_JOURNAL_PATH") or None)
    run_id = store.create(request_hash(request), request_to_dict(request))
    try:
        output = run_request(request, InProcessClient(build_default_registry()))
    except FreightTwinError as exc:
        print(f"demo failed: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if output.result.status != "completed":
        failed = output.result.step_results[-1].result.error
        store.fail(run_id, error_doc=failed, plan_id=output.plan.id, result_doc=output.result_doc())
        print(f"demo failed at step {output.result.failed_at_step}: {failed}", file=sys.stderr)
        return EXIT_INPUT
    store.complete(
        run_id,
        plan_id=output.plan.id,
        result_doc=output.result_doc(),
        explanation=output.explanation,
        geojson=output.geojson,
    )
    out_dir = Path("out")
    out_dir.mkdir(exist_ok=True)
    # artifacts are canonical and timing-free so repeated demos are byte-identical
    artifact = {
        "run_id": run_id,
        "request": request_to_dict(request),
        "plan_id": output.plan.id,
        "status": "completed",
        "result": strip_wall_ms(output.result_doc()),
        "geojson": output.geojson,
    }
    (out_dir / "run.json").write_text(canonical_dumps(artifact) + "\n", encoding="utf-8")
    (out_dir / "route.geojson").write_text(canonical_dumps(output.geojson) + "\n", encoding="utf-8")
    wms = build_wms_query(
        "http://<geoserver-host>/geoserver/wms",
        DEFAULT_ROUTE_LAYERS,
        DEFAULT_US_BBOX,
        800,
        600,
        route_id=f"OPT{run_id[:8]}",
    )
    (out_dir / "wms_query.txt").write_text(wms + "\n", encoding="utf-8")
    print(output.explanation)
    print(f"artifacts: {out_dir / 'run.json'}, {out_dir / 'route.geojson'}, {out_dir / 'wms_query.txt'}")
    print(f"wall time {time.perf_counter() - started:.3f} s")
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    if args.stdio:
        serve_stdio(build_default_registry())
        return EXIT_OK
    import uvicorn

    from .service import create_app, gateway_port

    port = args.port if args.port is not None else gateway_port()
    try:
        uvicorn.run(create_app(), host=args.host, port=port, log_level="warning")
    except SystemExit:
        raise
    except OSError as exc:  # port bind failures and friends
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="freighttwin", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve one scenario against a network file")
    p_solve.add_argument("--network", required=True)
    p_solve.add_argument("--scenario", required=True)
    p_solve.add_argument("--json", action="store_true", help="print the canonical RoutePlan JSON")
    p_solve.set_defaults(func=_cmd_solve)

    p_sim = sub.add_parser("simulate", help="Monte Carlo a saved plan")
    p_sim.add_argument("--network", required=True)
    p_sim.add_argument("--plan", required=True)
    p_sim.add_argument("--scenario", required=True)
    p_sim.add_argument("--samples", type=int, default=10000)
    p_sim.add_argument("--json", action="store_true")
    p_sim.set_defaults(func=_cmd_simulate)

    p_oracle = sub.add_parser("oracle-check", help="randomized solver-vs-oracle harness")
    p_oracle.add_argument("--network", required=True)
    p_oracle.add_argument("--trials", type=int, required=True)
    p_oracle.add_argument("--seed", type=int, required=True)
    p_oracle.set_defaults(func=_cmd_oracle_check)

    p_demo = sub.add_parser("demo", help="run the bundled coast-to-coast scenario end to end")
    p_demo.set_defaults(func=_cmd_demo)

    p_serve = sub.add_parser("serve", help="start the tool server and gateway")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=None, help="default: FT_PORT or 8080")
    p_serve.add_argument("--stdio", action="store_true", help="serve JSON-RPC over stdio instead of HTTP")
    p_serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
