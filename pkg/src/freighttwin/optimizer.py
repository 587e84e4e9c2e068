"""Deadline-constrained minimum-cost intermodal routing.

The production solver is a label-correcting search with Pareto dominance
per (node, last-mode) bucket; ``enumerate_paths_oracle`` is a deliberately
independent brute-force enumeration over simple paths kept free of the
solver's cost fold so the two can cross-check each other.

Costs are per-container and linear. The search ranks candidates by
per-container cost; equal (cost, time) candidates are broken by the
lexicographically smallest edge-id sequence, which makes results
deterministic across transports and platforms.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, replace
from typing import Any, Iterable

from .errors import (
    CapacityInfeasibleError,
    DeadlineInfeasibleError,
    InconsistentPlanError,
    InvalidScenarioError,
    NoPathError,
    ParseError,
    UnknownEdgeError,
    UnknownNodeError,
    UnknownTransferError,
)
from .netmodel import Network, NetworkEdge, TransferRule, TransportMode

DOMINANCE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Scenario:
    origin: int
    destination: int
    containers: int
    deadline_hours: float
    carbon_price_usd_per_kg: float
    allowed_modes: frozenset[TransportMode]
    travel_time_cv: float = 0.0
    seed: int | None = None


def validate_scenario(s: Scenario) -> None:
    if s.containers < 1:
        raise InvalidScenarioError(f"containers must be >= 1, got {s.containers}")
    if not s.deadline_hours > 0:
        raise InvalidScenarioError(f"deadline_hours must be > 0, got {s.deadline_hours}")
    if s.carbon_price_usd_per_kg < 0:
        raise InvalidScenarioError("carbon_price_usd_per_kg must be >= 0")
    if not s.allowed_modes:
        raise InvalidScenarioError("allowed_modes must be non-empty")
    if s.travel_time_cv < 0:
        raise InvalidScenarioError("travel_time_cv must be >= 0")
    if s.seed is not None and not 0 <= s.seed < 2**64:
        raise InvalidScenarioError("seed must fit in 64 unsigned bits")


def scenario_from_dict(doc: dict) -> Scenario:
    required = {"origin", "destination", "containers", "deadline_hours", "carbon_price_usd_per_kg", "allowed_modes"}
    allowed = required | {"travel_time_cv", "seed"}
    if not isinstance(doc, dict):
        raise ParseError("scenario must be a JSON object")
    unknown = set(doc) - allowed
    if unknown:
        raise ParseError(f"scenario: unknown key(s) {sorted(unknown)}")
    missing = required - set(doc)
    if missing:
        raise ParseError(f"scenario: missing key(s) {sorted(missing)}")
    try:
        modes = frozenset(TransportMode(m) for m in doc["allowed_modes"])
    except (ValueError, TypeError):
        raise ParseError(f"scenario: bad allowed_modes {doc['allowed_modes']!r}") from None
    for key in ("origin", "destination", "containers"):
        if isinstance(doc[key], bool) or not isinstance(doc[key], int):
            raise ParseError(f"scenario: {key} must be an integer, got {doc[key]!r}")
    try:
        s = Scenario(
            origin=doc["origin"],
            destination=doc["destination"],
            containers=doc["containers"],
            deadline_hours=float(doc["deadline_hours"]),
            carbon_price_usd_per_kg=float(doc["carbon_price_usd_per_kg"]),
            allowed_modes=modes,
            travel_time_cv=float(doc.get("travel_time_cv", 0.0)),
            seed=doc.get("seed"),
        )
    except (TypeError, ValueError) as exc:
        raise ParseError(f"scenario: {exc}") from None
    validate_scenario(s)
    return s


def scenario_to_dict(s: Scenario) -> dict:
    doc: dict[str, Any] = {
        "origin": s.origin,
        "destination": s.destination,
        "containers": s.containers,
        "deadline_hours": s.deadline_hours,
        "carbon_price_usd_per_kg": s.carbon_price_usd_per_kg,
        "allowed_modes": sorted(m.value for m in s.allowed_modes),
        "travel_time_cv": s.travel_time_cv,
    }
    if s.seed is not None:
        doc["seed"] = s.seed
    return doc


@dataclass(frozen=True)
class Leg:
    edge_id: int
    mode: TransportMode
    depart_hours: float
    arrive_hours: float


@dataclass(frozen=True)
class TransferStop:
    node_id: int
    from_mode: TransportMode
    to_mode: TransportMode
    start_hours: float
    end_hours: float


@dataclass(frozen=True)
class RoutePlan:
    origin: int
    destination: int
    legs: tuple[Leg, ...]
    transfers: tuple[TransferStop, ...]
    linehaul_usd: float
    transfer_usd: float
    ghg_tax_usd: float
    total_usd: float
    total_time_hours: float
    emissions_kg: float
    optimal: bool

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(leg.edge_id for leg in self.legs)


@dataclass(frozen=True)
class CostBreakdown:
    linehaul_usd: float
    transfer_usd: float
    ghg_tax_usd: float
    total_usd: float
    emissions_kg: float


@dataclass(frozen=True)
class FlowAssignment:
    routes: tuple[tuple[RoutePlan, int], ...]
    total_usd: float
    max_completion_hours: float


def plan_to_dict(plan: RoutePlan) -> dict:
    return {
        "origin": plan.origin,
        "destination": plan.destination,
        "legs": [
            {
                "edge_id": leg.edge_id,
                "mode": leg.mode.value,
                "depart_hours": leg.depart_hours,
                "arrive_hours": leg.arrive_hours,
            }
            for leg in plan.legs
        ],
        "transfers": [
            {
                "node_id": t.node_id,
                "from_mode": t.from_mode.value,
                "to_mode": t.to_mode.value,
                "start_hours": t.start_hours,
                "end_hours": t.end_hours,
            }
            for t in plan.transfers
        ],
        "linehaul_usd": plan.linehaul_usd,
        "transfer_usd": plan.transfer_usd,
        "ghg_tax_usd": plan.ghg_tax_usd,
        "total_usd": plan.total_usd,
        "total_time_hours": plan.total_time_hours,
        "emissions_kg": plan.emissions_kg,
        "optimal": plan.optimal,
    }


def plan_from_dict(doc: dict) -> RoutePlan:
    try:
        legs = tuple(
            Leg(raw["edge_id"], TransportMode(raw["mode"]), float(raw["depart_hours"]), float(raw["arrive_hours"]))
            for raw in doc["legs"]
        )
        transfers = tuple(
            TransferStop(
                raw["node_id"],
                TransportMode(raw["from_mode"]),
                TransportMode(raw["to_mode"]),
                float(raw["start_hours"]),
                float(raw["end_hours"]),
            )
            for raw in doc["transfers"]
        )
        return RoutePlan(
            origin=doc["origin"],
            destination=doc["destination"],
            legs=legs,
            transfers=transfers,
            linehaul_usd=float(doc["linehaul_usd"]),
            transfer_usd=float(doc["transfer_usd"]),
            ghg_tax_usd=float(doc["ghg_tax_usd"]),
            total_usd=float(doc["total_usd"]),
            total_time_hours=float(doc["total_time_hours"]),
            emissions_kg=float(doc["emissions_kg"]),
            optimal=bool(doc["optimal"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad route plan document: {exc}") from None


def flow_assignment_to_dict(assignment: FlowAssignment) -> dict:
    return {
        "routes": [{"plan": plan_to_dict(plan), "containers": n} for plan, n in assignment.routes],
        "total_usd": assignment.total_usd,
        "max_completion_hours": assignment.max_completion_hours,
    }


# ---------------------------------------------------------------------------
# search machinery


@dataclass(frozen=True, eq=False)
class Label:
    """Search state: cost is accumulated per container."""

    node: int
    last_mode: TransportMode | None
    arrival_time_hours: float
    cost_usd: float
    predecessor: tuple["Label", int] | None = None


def _edge_sequence(label: Label) -> tuple[int, ...]:
    out: list[int] = []
    cur = label
    while cur.predecessor is not None:
        prev, edge_id = cur.predecessor
        out.append(edge_id)
        cur = prev
    out.reverse()
    return tuple(out)


@dataclass(frozen=True)
class _Arc:
    edge: NetworkEdge
    tail: int
    head: int
    time_hours: float
    cost_per_container: float


def _arcs_by_tail(net: Network, s: Scenario) -> dict[int, list[_Arc]]:
    """Directed-arc view: bidirectional edges expand to two arcs sharing
    the edge id (and, downstream, the capacity budget)."""
    arcs: dict[int, list[_Arc]] = {}
    price = s.carbon_price_usd_per_kg
    for edge in net.edges:
        if edge.mode not in s.allowed_modes:
            continue
        time = edge.distance_miles / edge.speed_mph
        cost = (
            edge.distance_miles * edge.op_cost_per_container_mile
            + edge.distance_miles * edge.emission_kg_per_container_mile * price
        )
        arcs.setdefault(edge.from_node, []).append(_Arc(edge, edge.from_node, edge.to_node, time, cost))
        if edge.bidirectional:
            arcs.setdefault(edge.to_node, []).append(_Arc(edge, edge.to_node, edge.from_node, time, cost))
    for adjacency in arcs.values():
        adjacency.sort(key=lambda a: (a.edge.id, a.head))
    return arcs


def _step(
    net: Network, cost: float, time: float, last_mode: TransportMode | None, arc: _Arc
) -> tuple[float, float, TransferRule | None] | None:
    """Extend a partial walk over one arc; None when the mode change has
    no transfer rule (forbidden)."""
    rule = None
    if last_mode is not None and arc.edge.mode is not last_mode:
        rule = net.transfer_by_key.get((arc.tail, last_mode, arc.edge.mode))
        if rule is None:
            return None
        cost = cost + rule.transfer_cost_per_container
        time = time + rule.transfer_time_hours
    cost = cost + arc.cost_per_container
    time = time + arc.time_hours
    return cost, time, rule


def _dominates(a: Label, b: Label, tol: float) -> bool:
    return (
        a.arrival_time_hours <= b.arrival_time_hours + tol
        and a.cost_usd <= b.cost_usd + tol
        and (a.arrival_time_hours < b.arrival_time_hours or a.cost_usd < b.cost_usd)
    )


def _insert_label(bucket: list[Label], cand: Label, tol: float) -> bool:
    """Keep the bucket a Pareto frontier; on exact (cost, time) ties keep
    the lexicographically smallest edge sequence."""
    tie_loser = None
    for inc in bucket:
        if inc.arrival_time_hours == cand.arrival_time_hours and inc.cost_usd == cand.cost_usd:
            if _edge_sequence(inc) <= _edge_sequence(cand):
                return False
            tie_loser = inc
        elif _dominates(inc, cand, tol):
            return False
    bucket[:] = [inc for inc in bucket if inc is not tie_loser and not _dominates(cand, inc, tol)]
    bucket.append(cand)
    return True


def _breakdown(
    net: Network,
    containers: int,
    carbon_price: float,
    edge_ids: Iterable[int],
    rules: Iterable[TransferRule],
) -> CostBreakdown:
    linehaul = 0.0
    emissions = 0.0
    for eid in edge_ids:
        edge = net.edge_by_id.get(eid)
        if edge is None:
            raise UnknownEdgeError(f"unknown edge {eid}")
        linehaul += edge.distance_miles * edge.op_cost_per_container_mile * containers
        emissions += edge.distance_miles * edge.emission_kg_per_container_mile * containers
    transfer = 0.0
    for rule in rules:
        transfer += rule.transfer_cost_per_container * containers
    ghg_tax = emissions * carbon_price
    total = linehaul + transfer + ghg_tax
    return CostBreakdown(linehaul, transfer, ghg_tax, total, emissions)


def walk_arcs(net: Network, origin: int, edge_ids: Iterable[int]) -> list[tuple[NetworkEdge, int, int]]:
    """Orient a leg sequence into (edge, tail, head) triples starting at
    ``origin``; bidirectional edges are disambiguated by connectivity."""
    out: list[tuple[NetworkEdge, int, int]] = []
    cur = origin
    for index, eid in enumerate(edge_ids):
        edge = net.edge_by_id.get(eid)
        if edge is None:
            raise UnknownEdgeError(f"unknown edge {eid}")
        if edge.from_node == cur:
            head = edge.to_node
        elif edge.bidirectional and edge.to_node == cur:
            head = edge.from_node
        else:
            raise InconsistentPlanError(index, "walk", cur, edge.from_node)
        out.append((edge, cur, head))
        cur = head
    return out


def _empty_plan(s: Scenario) -> RoutePlan:
    return RoutePlan(
        origin=s.origin,
        destination=s.destination,
        legs=(),
        transfers=(),
        linehaul_usd=0.0,
        transfer_usd=0.0,
        ghg_tax_usd=0.0,
        total_usd=0.0,
        total_time_hours=0.0,
        emissions_kg=0.0,
        optimal=True,
    )


def build_plan(net: Network, s: Scenario, edge_ids: Iterable[int], *, optimal: bool) -> RoutePlan:
    """Construct a timed, costed RoutePlan from an edge-id walk."""
    edge_ids = tuple(edge_ids)
    if not edge_ids:
        return _empty_plan(s)
    legs: list[Leg] = []
    transfers: list[TransferStop] = []
    rules: list[TransferRule] = []
    t = 0.0
    last_mode: TransportMode | None = None
    for index, (edge, tail, _head) in enumerate(walk_arcs(net, s.origin, edge_ids)):
        if last_mode is not None and edge.mode is not last_mode:
            rule = net.transfer_by_key.get((tail, last_mode, edge.mode))
            if rule is None:
                raise UnknownTransferError(
                    f"no transfer rule at node {tail} for {last_mode.value}->{edge.mode.value}"
                )
            transfers.append(TransferStop(tail, last_mode, edge.mode, t, t + rule.transfer_time_hours))
            rules.append(rule)
            t = t + rule.transfer_time_hours
        depart = t
        t = t + edge.distance_miles / edge.speed_mph
        legs.append(Leg(edge.id, edge.mode, depart, t))
        last_mode = edge.mode
    costs = _breakdown(net, s.containers, s.carbon_price_usd_per_kg, edge_ids, rules)
    return RoutePlan(
        origin=s.origin,
        destination=s.destination,
        legs=tuple(legs),
        transfers=tuple(transfers),
        linehaul_usd=costs.linehaul_usd,
        transfer_usd=costs.transfer_usd,
        ghg_tax_usd=costs.ghg_tax_usd,
        total_usd=costs.total_usd,
        total_time_hours=t,
        emissions_kg=costs.emissions_kg,
        optimal=optimal,
    )


def cost_breakdown(net: Network, plan: RoutePlan, s: Scenario) -> CostBreakdown:
    """Recompute the plan's cost components for scenario ``s``.

    total_usd is, bit for bit, linehaul + transfer + ghg_tax as summed here;
    ``build_plan`` uses the same fold, so plans satisfy the identity exactly.
    """
    rules = []
    for stop in plan.transfers:
        rule = net.transfer_by_key.get((stop.node_id, stop.from_mode, stop.to_mode))
        if rule is None:
            raise UnknownTransferError(
                f"no transfer rule at node {stop.node_id} for {stop.from_mode.value}->{stop.to_mode.value}"
            )
        rules.append(rule)
    return _breakdown(net, s.containers, s.carbon_price_usd_per_kg, plan.edge_ids, rules)


def _check_endpoints(net: Network, s: Scenario) -> None:
    for node_id in (s.origin, s.destination):
        if node_id not in net.node_by_id:
            raise UnknownNodeError(f"unknown node {node_id}")


def _min_time_pass(net: Network, s: Scenario) -> float | None:
    """Pure time-minimization over (node, last-mode) states, ignoring the
    deadline; None when the destination is unreachable."""
    arcs = _arcs_by_tail(net, s)
    start: tuple[int, TransportMode | None] = (s.origin, None)
    best: dict[tuple[int, TransportMode | None], float] = {start: 0.0}
    counter = itertools.count()
    heap: list[tuple[float, int, tuple[int, TransportMode | None]]] = [(0.0, next(counter), start)]
    while heap:
        time, _, (node, last_mode) = heapq.heappop(heap)
        if time > best.get((node, last_mode), float("inf")):
            continue
        if node == s.destination:
            return time
        for arc in arcs.get(node, ()):
            step = _step(net, 0.0, time, last_mode, arc)
            if step is None:
                continue
            _, t2, _ = step
            key = (arc.head, arc.edge.mode)
            if t2 < best.get(key, float("inf")):
                best[key] = t2
                heapq.heappush(heap, (t2, next(counter), key))
    return None


def solve_rcsp(
    net: Network,
    s: Scenario,
    *,
    dominance_tolerance: float = DOMINANCE_TOLERANCE,
    use_dominance: bool = True,
    max_hops: int | None = None,
) -> RoutePlan:
    """Exact minimum-cost routing subject to the deadline.

    ``use_dominance=False`` switches to exhaustive label expansion bounded
    by ``max_hops`` edges (testing hook for dominance soundness).
    """
    _check_endpoints(net, s)
    validate_scenario(s)
    if s.origin == s.destination:
        return _empty_plan(s)
    if max_hops is None:
        max_hops = _oracle_hop_bound(net, s)
    arcs = _arcs_by_tail(net, s)
    start = Label(s.origin, None, 0.0, 0.0, None)
    buckets: dict[tuple[int, TransportMode | None], list[Label]] = {(s.origin, None): [start]}
    counter = itertools.count()
    heap: list[tuple[float, float, int, Label, int]] = [(0.0, 0.0, next(counter), start, 0)]
    dest_labels: list[Label] = []
    while heap:
        _, _, _, label, depth = heapq.heappop(heap)
        if use_dominance:
            bucket = buckets.get((label.node, label.last_mode), ())
            if not any(inc is label for inc in bucket):
                continue  # superseded since push
        elif depth >= max_hops:
            continue
        for arc in arcs.get(label.node, ()):
            step = _step(net, label.cost_usd, label.arrival_time_hours, label.last_mode, arc)
            if step is None:
                continue
            cost2, time2, _ = step
            if time2 > s.deadline_hours:
                continue
            cand = Label(arc.head, arc.edge.mode, time2, cost2, (label, arc.edge.id))
            if use_dominance:
                if not _insert_label(buckets.setdefault((arc.head, arc.edge.mode), []), cand, dominance_tolerance):
                    continue
            elif arc.head == s.destination:
                dest_labels.append(cand)
            if arc.head != s.destination:
                heapq.heappush(heap, (cost2, time2, next(counter), cand, depth + 1))
    if use_dominance:
        dest_labels = [
            label for (node, _), bucket in buckets.items() if node == s.destination for label in bucket
        ]
    if not dest_labels:
        min_time = _min_time_pass(net, s)
        if min_time is None:
            raise NoPathError(s.origin, s.destination)
        raise DeadlineInfeasibleError(s.deadline_hours, min_time)
    best = min(dest_labels, key=lambda lab: (lab.cost_usd, lab.arrival_time_hours, _edge_sequence(lab)))
    return build_plan(net, s, _edge_sequence(best), optimal=True)


def _oracle_hop_bound(net: Network, s: Scenario) -> int:
    # a walk that never repeats a (node, last-mode) state has at most
    # |nodes| * |modes| edges; revisiting a state is never optimal because
    # travel times are strictly positive
    return len(net.nodes) * max(1, len(net.modes & s.allowed_modes))


def enumerate_paths_oracle(net: Network, s: Scenario, max_hops: int | None = None) -> RoutePlan:
    """Brute-force reference: enumerate every mode-annotated simple path
    (no repeated (node, mode) state) up to ``max_hops`` edges and pick the
    cheapest deadline-feasible one.

    Kept independent of the label solver: separate adjacency expansion and
    a separate cost fold (components summed per path, combined at the end).
    """
    _check_endpoints(net, s)
    validate_scenario(s)
    if s.origin == s.destination:
        return _empty_plan(s)
    if max_hops is None:
        max_hops = _oracle_hop_bound(net, s)
    if max_hops < 1:
        raise InvalidScenarioError("max_hops must be >= 1")
    neighbors: dict[int, list[tuple[NetworkEdge, int]]] = {}
    for edge in net.edges:
        if edge.mode not in s.allowed_modes:
            continue
        neighbors.setdefault(edge.from_node, []).append((edge, edge.to_node))
        if edge.bidirectional:
            neighbors.setdefault(edge.to_node, []).append((edge, edge.from_node))
    for adjacency in neighbors.values():
        adjacency.sort(key=lambda pair: (pair[0].id, pair[1]))

    price = s.carbon_price_usd_per_kg
    candidates: list[tuple[float, float, tuple[int, ...]]] = []
    best_cost: float | None = None

    def visit(node, last_mode, time, linehaul, emission, transfer, visited, edges):
        nonlocal best_cost
        if len(edges) >= max_hops:
            return
        for edge, head in neighbors.get(node, ()):
            if (head, edge.mode) in visited:
                continue
            leg_time = time
            leg_linehaul = linehaul
            leg_emission = emission
            leg_transfer = transfer
            if last_mode is not None and edge.mode is not last_mode:
                rule = net.transfer_by_key.get((node, last_mode, edge.mode))
                if rule is None:
                    continue
                leg_time += rule.transfer_time_hours
                leg_transfer += rule.transfer_cost_per_container
            leg_time += edge.distance_miles / edge.speed_mph
            leg_linehaul += edge.distance_miles * edge.op_cost_per_container_mile
            leg_emission += edge.distance_miles * edge.emission_kg_per_container_mile
            if leg_time > s.deadline_hours:
                continue
            cost = leg_linehaul + leg_transfer + leg_emission * price
            if best_cost is not None and cost > best_cost:
                continue
            path = edges + (edge.id,)
            if head == s.destination:
                candidates.append((cost, leg_time, path))
                best_cost = cost if best_cost is None else min(best_cost, cost)
                continue
            visit(
                head,
                edge.mode,
                leg_time,
                leg_linehaul,
                leg_emission,
                leg_transfer,
                visited | {(head, edge.mode)},
                path,
            )

    visit(s.origin, None, 0.0, 0.0, 0.0, 0.0, frozenset(), ())
    if not candidates:
        min_time = _oracle_min_time(net, s, neighbors, max_hops)
        if min_time is None:
            raise NoPathError(s.origin, s.destination)
        raise DeadlineInfeasibleError(s.deadline_hours, min_time)
    candidates.sort()
    cost, _, path = candidates[0]
    return build_plan(net, s, path, optimal=True)


def _oracle_min_time(net, s, neighbors, max_hops) -> float | None:
    best: float | None = None

    def visit(node, last_mode, time, visited, hops):
        nonlocal best
        if best is not None and time >= best:
            return
        if hops >= max_hops:
            return
        for edge, head in neighbors.get(node, ()):
            if (head, edge.mode) in visited:
                continue
            t2 = time
            if last_mode is not None and edge.mode is not last_mode:
                rule = net.transfer_by_key.get((node, last_mode, edge.mode))
                if rule is None:
                    continue
                t2 += rule.transfer_time_hours
            t2 += edge.distance_miles / edge.speed_mph
            if head == s.destination:
                best = t2 if best is None else min(best, t2)
                continue
            visit(head, edge.mode, t2, visited | {(head, edge.mode)}, hops + 1)

    visit(s.origin, None, 0.0, frozenset(), 0)
    return best


def k_best_plans(net: Network, s: Scenario, k: int) -> list[RoutePlan]:
    """Up to k cheapest deadline-feasible plans with pairwise distinct leg
    sequences, cheapest first. Element 0 matches ``solve_rcsp``.

    Enumerates mode-annotated simple paths with the production cost fold;
    fine at desk scale (the pool feeds greedy capacity assignment, not
    large instances).
    """
    if k < 1:
        raise InvalidScenarioError(f"k must be >= 1, got {k}")
    _check_endpoints(net, s)
    validate_scenario(s)
    if s.origin == s.destination:
        return [_empty_plan(s)]
    arcs = _arcs_by_tail(net, s)
    max_hops = _oracle_hop_bound(net, s)
    candidates: list[tuple[float, float, tuple[int, ...]]] = []
    worst_topk: list[float] = []  # max-heap (negated) of the k cheapest costs so far

    def visit(node, last_mode, time, cost, visited, edges):
        if len(edges) >= max_hops:
            return
        for arc in arcs.get(node, ()):
            if (arc.head, arc.edge.mode) in visited:
                continue
            step = _step(net, cost, time, last_mode, arc)
            if step is None:
                continue
            cost2, time2, _ = step
            if time2 > s.deadline_hours:
                continue
            if len(worst_topk) == k and cost2 > -worst_topk[0]:
                continue
            path = edges + (arc.edge.id,)
            if arc.head == s.destination:
                candidates.append((cost2, time2, path))
                if len(worst_topk) < k:
                    heapq.heappush(worst_topk, -cost2)
                elif cost2 < -worst_topk[0]:
                    heapq.heapreplace(worst_topk, -cost2)
                continue
            visit(arc.head, arc.edge.mode, time2, cost2, visited | {(arc.head, arc.edge.mode)}, path)

    visit(s.origin, None, 0.0, 0.0, frozenset(), ())
    if not candidates:
        min_time = _min_time_pass(net, s)
        if min_time is None:
            raise NoPathError(s.origin, s.destination)
        raise DeadlineInfeasibleError(s.deadline_hours, min_time)
    candidates.sort()
    return [build_plan(net, s, path, optimal=(rank == 0)) for rank, (_, _, path) in enumerate(candidates[:k])]


def assign_flow(net: Network, s: Scenario, pool: list[RoutePlan]) -> FlowAssignment:
    """Greedy capacitated split of the shipment over a plan pool.

    Plans are filled cheapest-first up to binding edge capacities; the
    per-route money fields are recomputed for the assigned container count
    so the linear cost identity holds per route.
    """
    if not pool:
        raise InvalidScenarioError("plan pool must be non-empty")
    ordered = sorted(pool, key=lambda p: (p.total_usd, p.total_time_hours, p.edge_ids))
    remaining = {
        edge.id: edge.capacity_containers for edge in net.edges if edge.capacity_containers is not None
    }
    left = s.containers
    routes: list[tuple[RoutePlan, int]] = []
    total = 0.0
    max_completion = 0.0
    for plan in ordered:
        if left == 0:
            break
        limit = left
        for eid in plan.edge_ids:
            if eid in remaining:
                limit = min(limit, remaining[eid])
        if limit <= 0:
            continue
        rules = [net.transfer_by_key[(t.node_id, t.from_mode, t.to_mode)] for t in plan.transfers]
        costs = _breakdown(net, limit, s.carbon_price_usd_per_kg, plan.edge_ids, rules)
        assigned = replace(
            plan,
            linehaul_usd=costs.linehaul_usd,
            transfer_usd=costs.transfer_usd,
            ghg_tax_usd=costs.ghg_tax_usd,
            total_usd=costs.total_usd,
            emissions_kg=costs.emissions_kg,
        )
        routes.append((assigned, limit))
        total += costs.total_usd
        max_completion = max(max_completion, plan.total_time_hours)
        for eid in plan.edge_ids:
            if eid in remaining:
                remaining[eid] -= limit
        left -= limit
    if left > 0:
        raise CapacityInfeasibleError(left)
    return FlowAssignment(routes=tuple(routes), total_usd=total, max_completion_hours=max_completion)
