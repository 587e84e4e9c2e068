"""Acceptance suite: one test per release criterion, each printing a
PASS line with the measured figures (run with -s or -rP to see them)."""

import dataclasses
import json
import math
import random
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np
import pytest
from fastapi.testclient import TestClient

from freighttwin.canonical import canonical_dumps
from freighttwin.errors import DeadlineInfeasibleError, NoPathError
from freighttwin.fixtures import demo_scenario, load_fixture
from freighttwin.geoviz import DEFAULT_ROUTE_LAYERS, build_wms_query, plan_to_geojson
from freighttwin.netmodel import TransportMode, network_to_dict
from freighttwin.optimizer import enumerate_paths_oracle, scenario_to_dict, solve_rcsp
from freighttwin.orchestrator import (
    RunOptions,
    ScenarioRequest,
    request_from_dict,
    run_request,
    strip_wall_ms,
)
from freighttwin.randomnet import random_network, random_scenario
from freighttwin.service import create_app
from freighttwin.simulator import monte_carlo, sample_factors
from freighttwin.toolproto import InProcessClient, build_default_registry, handle_request

from conftest import build_t3, t3_scenario

GOLDEN = Path(__file__).parent / "golden"

MODE_SETS = (
    (TransportMode.HIGHWAY,),
    (TransportMode.HIGHWAY, TransportMode.RAIL),
    (TransportMode.HIGHWAY, TransportMode.RAIL, TransportMode.WATER),
)


def test_acceptance_oracle_equivalence():
    """1,000 seeded scenarios on 25 seeded networks: solver == oracle."""
    rng = random.Random(20250809)
    started = time.perf_counter()
    agreements = 0
    feasible = 0
    for net_index in range(25):
        net = random_network(rng, rng.randint(4, 10), modes=MODE_SETS[net_index % 3])
        for _ in range(40):
            scenario = random_scenario(rng, net)
            try:
                fast = solve_rcsp(net, scenario)
            except (DeadlineInfeasibleError, NoPathError) as solver_err:
                try:
                    enumerate_paths_oracle(net, scenario)
                except type(solver_err) as oracle_err:
                    if isinstance(solver_err, DeadlineInfeasibleError):
                        assert math.isclose(
                            solver_err.min_achievable_hours,
                            oracle_err.min_achievable_hours,
                            rel_tol=1e-9,
                        )
                    agreements += 1
                    continue
                raise AssertionError(f"solver raised {solver_err!r} but oracle did not match")
            slow = enumerate_paths_oracle(net, scenario)
            assert math.isclose(fast.total_usd, slow.total_usd, rel_tol=1e-9)
            assert fast.edge_ids == slow.edge_ids, "tie-broken plan identity"
            assert (fast.total_usd, fast.total_time_hours) == (slow.total_usd, slow.total_time_hours)
            agreements += 1
            feasible += 1
    elapsed = time.perf_counter() - started
    assert agreements == 1000
    assert elapsed < 60.0
    print(f"PASS oracle equivalence: 1000/1000 agree ({feasible} feasible) in {elapsed:.1f}s")


def test_acceptance_cost_decomposition_identity():
    """total = linehaul + transfer + ghg_tax bit-for-bit, incl. the
    published-arithmetic component example."""
    rng = random.Random(414)
    checked = 0
    while checked < 120:
        net = random_network(rng, rng.randint(3, 8))
        scenario = random_scenario(rng, net)
        try:
            plan = solve_rcsp(net, scenario)
        except (DeadlineInfeasibleError, NoPathError):
            continue
        assert plan.total_usd == plan.linehaul_usd + plan.transfer_usd + plan.ghg_tax_usd
        checked += 1
    for net, scenario in ((build_t3(), t3_scenario()), (load_fixture("fixture14"), demo_scenario())):
        plan = solve_rcsp(net, scenario)
        assert plan.total_usd == plan.linehaul_usd + plan.transfer_usd + plan.ghg_tax_usd
    operational, handling, ghg_tax = 45065.13, 1231.63, 29371.77
    assert f"{operational + handling + ghg_tax:.2f}" == "75668.53"
    print(f"PASS cost identity: {checked + 2} plans bit-exact; 45065.13+1231.63+29371.77 -> 75668.53")


def test_acceptance_fixture14_performance():
    """Demo scenario solves in <= 0.1 s; full pipeline in <= 2 s."""
    net = load_fixture("fixture14")
    scenario = demo_scenario()
    started = time.perf_counter()
    plan = solve_rcsp(net, scenario)
    solve_seconds = time.perf_counter() - started
    assert plan.optimal and plan.total_time_hours <= 36.0
    assert solve_seconds <= 0.1

    request = ScenarioRequest(scenario=scenario, network_ref="fixture14", options=RunOptions(samples=10000))
    client = InProcessClient(build_default_registry())
    started = time.perf_counter()
    output = run_request(request, client)
    pipeline_seconds = time.perf_counter() - started
    assert output.result.status == "completed"
    assert [o.step_id for o in output.result.step_results] == [
        "validate_network",
        "solve_route",
        "simulate_plan",
        "render_route",
    ]
    assert pipeline_seconds <= 2.0
    print(
        f"PASS fixture14 performance: solve {solve_seconds * 1000:.1f} ms (<=100 ms), "
        f"pipeline {pipeline_seconds:.2f} s (<=2 s)"
    )


def test_acceptance_deadline_monotonicity():
    rng = random.Random(808)
    trials = 0
    while trials < 200:
        net = random_network(rng, rng.randint(3, 8))
        scenario = random_scenario(rng, net)
        try:
            tight = solve_rcsp(net, scenario)
        except (DeadlineInfeasibleError, NoPathError):
            continue
        relax = rng.choice((1.5, 2.0, 4.0))
        relaxed = solve_rcsp(net, dataclasses.replace(scenario, deadline_hours=scenario.deadline_hours * relax))
        assert relaxed.total_usd <= tight.total_usd * (1 + 1e-9) + 1e-9
        trials += 1
    print("PASS deadline monotonicity: 200 randomized trials")


def test_acceptance_carbon_price_monotonicity():
    rng = random.Random(909)
    trials = 0
    while trials < 200:
        net = random_network(rng, rng.randint(3, 8))
        scenario = random_scenario(rng, net)
        try:
            base = solve_rcsp(net, scenario)
        except (DeadlineInfeasibleError, NoPathError):
            continue
        bump = rng.choice((0.125, 0.5, 2.0))
        pricier = solve_rcsp(
            net, dataclasses.replace(scenario, carbon_price_usd_per_kg=scenario.carbon_price_usd_per_kg + bump)
        )
        assert pricier.total_usd >= base.total_usd - 1e-9
        assert pricier.emissions_kg <= base.emissions_kg + 1e-9
        trials += 1
    print("PASS carbon-price monotonicity: 200 randomized trials")


def test_acceptance_protocol_conformance():
    """Golden handshake and roster, the five error codes, and serve-path
    vs in-process bit-equality on 100 randomized solve_route calls."""
    registry = build_default_registry()
    init = handle_request(registry, {"jsonrpc": "2.0", "id": 1, "method": "initialize"})
    assert canonical_dumps(init["result"]) + "\n" == (GOLDEN / "initialize.json").read_text()
    roster = handle_request(registry, {"jsonrpc": "2.0", "id": 2, "method": "tools/list"})
    assert canonical_dumps(roster["result"]) + "\n" == (GOLDEN / "tools_list.json").read_text()

    t3_doc = network_to_dict(build_t3())
    good_scenario = scenario_to_dict(t3_scenario())
    app = create_app(journal_path="")
    with TestClient(app) as web:
        codes = {}
        probes = {
            -32700: "{broken",
            -32600: json.dumps({"id": 1, "method": "initialize"}),
            -32601: json.dumps({"jsonrpc": "2.0", "id": 1, "method": "tools/call",
                                "params": {"name": "foo", "arguments": {}}}),
            -32602: json.dumps({"jsonrpc": "2.0", "id": 1, "method": "tools/call",
                                "params": {"name": "solve_route",
                                           "arguments": {"network": t3_doc,
                                                         "scenario": {k: v for k, v in good_scenario.items()
                                                                      if k != "deadline_hours"}}}}),
            -32000: json.dumps({"jsonrpc": "2.0", "id": 1, "method": "tools/call",
                                "params": {"name": "solve_route",
                                           "arguments": {"network": t3_doc,
                                                         "scenario": dict(good_scenario, deadline_hours=0.25)}}}),
        }
        for expected, probe in probes.items():
            response = web.post("/rpc", content=probe).json()
            codes[expected] = response["error"]["code"]
        assert codes == {code: code for code in probes}

        rng = random.Random(2468)
        matched = 0
        for call_index in range(100):
            net = random_network(rng, rng.randint(3, 7))
            scenario = random_scenario(rng, net)
            envelope = {
                "jsonrpc": "2.0",
                "id": call_index,
                "method": "tools/call",
                "params": {
                    "name": "solve_route",
                    "arguments": {"network": network_to_dict(net), "scenario": scenario_to_dict(scenario)},
                },
            }
            served = web.post("/rpc", content=json.dumps(envelope)).json()
            local = handle_request(registry, envelope)
            assert canonical_dumps(served) == canonical_dumps(local)
            matched += 1
    print(f"PASS protocol conformance: goldens + 5 error codes + {matched}/100 serve-path bit-equal")


def test_acceptance_concurrent_gateway():
    """50 simultaneous scenario submissions complete, each equal to its
    serial counterpart; p95 request latency <= 3 s."""
    bodies = []
    for index in range(50):
        bodies.append(
            {
                "network_ref": "t3",
                "scenario": {
                    "origin": 1,
                    "destination": 3,
                    "containers": 1 + index % 9,
                    "deadline_hours": 9.0 + (index % 4),
                    "carbon_price_usd_per_kg": 0.25 * (index % 5),
                    "allowed_modes": ["Highway", "Rail"],
                    "travel_time_cv": 0.2,
                    "seed": index,
                },
                "options": {"samples": 500, "k_pool": 4, "want_map": True},
            }
        )
    # serial baseline, in process
    local_client = InProcessClient(build_default_registry())
    baseline = {}
    for body in bodies:
        request = request_from_dict({k: body[k] for k in ("network_ref", "scenario", "options")})
        output = run_request(request, local_client)
        baseline[canonical_dumps(body["scenario"])] = canonical_dumps(strip_wall_ms(output.result_doc()))

    app = create_app(journal_path="")
    with TestClient(app) as web:
        latencies = []

        def submit(body):
            started = time.perf_counter()
            response = web.post("/scenarios", json=body)
            latencies.append(time.perf_counter() - started)
            assert response.status_code == 202
            return response.json()["run_id"], body

        with ThreadPoolExecutor(max_workers=50) as pool:
            submissions = list(pool.map(submit, bodies))
        assert len({run_id for run_id, _ in submissions}) == 50

        deadline = time.time() + 60
        for run_id, body in submissions:
            while True:
                record = web.get(f"/runs/{run_id}").json()
                if record["status"] in ("completed", "failed"):
                    break
                assert time.time() < deadline, "runs did not finish in time"
                time.sleep(0.02)
            assert record["status"] == "completed"
            key = canonical_dumps(body["scenario"])
            assert canonical_dumps(strip_wall_ms(record["result"])) == baseline[key]
    p95 = sorted(latencies)[int(0.95 * len(latencies)) - 1]
    assert p95 <= 3.0
    print(f"PASS concurrency: 50 concurrent submissions == serial; p95 submit latency {p95 * 1000:.0f} ms")


def test_acceptance_simulation_statistics():
    """Lognormal moments within 3 SE at 1e5 samples; bit-exact seed
    determinism; cv=0 gives probability exactly 1 for feasible plans."""
    cv = 0.25
    n = 100_000
    factors = np.concatenate([sample_factors(31337, i, 20, cv) for i in range(n // 20)])
    mean = float(np.mean(factors))
    sd = float(np.std(factors, ddof=1))
    se_mean = sd / math.sqrt(n)
    assert abs(mean - 1.0) <= 3 * se_mean
    m4 = float(np.mean((factors - mean) ** 4))
    se_sd = math.sqrt(max(m4 - sd**4, 0.0) / n) / (2 * sd)
    assert abs(sd - cv) <= 3 * se_sd

    net = build_t3()
    noisy = t3_scenario(travel_time_cv=0.3, seed=99)
    plan = solve_rcsp(net, noisy)
    from freighttwin.simulator import report_to_dict

    first = canonical_dumps(report_to_dict(monte_carlo(net, plan, noisy, 5000)))
    second = canonical_dumps(report_to_dict(monte_carlo(net, plan, noisy, 5000)))
    assert first == second

    calm = t3_scenario(travel_time_cv=0.0, seed=99)
    report = monte_carlo(net, solve_rcsp(net, calm), calm, 2000)
    assert report.on_time_probability == 1.0
    print(
        f"PASS simulation statistics: mean {mean:.5f} (SE {se_mean:.5f}), sd {sd:.5f} vs cv {cv}; "
        "seed-deterministic; cv=0 => p=1"
    )


def test_acceptance_wms_golden():
    query = build_wms_query(
        "http://<geoserver-host>/geoserver/wms",
        DEFAULT_ROUTE_LAYERS,
        (-125, 24, -66, 50),
        800,
        600,
        "OPT12345",
    )
    assert query == (GOLDEN / "wms_query.txt").read_text(encoding="utf-8")
    print("PASS WMS golden: byte-exact against the published GetMap query")


def test_acceptance_geojson_feature_law():
    """Feature count = legs + transfers + 2 on the demo route (supporting
    check for the visualization contract)."""
    net = load_fixture("fixture14")
    plan = solve_rcsp(net, demo_scenario())
    features = plan_to_geojson(net, plan)["features"]
    assert len(features) == len(plan.legs) + len(plan.transfers) + 2
    print(f"PASS geojson feature law: {len(plan.legs)}+{len(plan.transfers)}+2 = {len(features)}")
