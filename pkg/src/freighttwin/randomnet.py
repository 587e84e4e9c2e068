"""Seeded random networks and scenarios for oracle harnesses.

Attribute values are dyadic rationals (quarters, sixteenths, sixty-fourths)
and speeds are powers of two, so every cost and travel time is exact in
double precision: solver/oracle comparisons then never hinge on float
rounding, and ties are genuine ties resolved by the lexicographic rule.
"""

from __future__ import annotations

import random

from .netmodel import Network, NetworkEdge, NetworkNode, NodeKind, TransferRule, TransportMode
from .optimizer import Scenario

_SPEEDS = (16.0, 32.0, 64.0)
_KINDS = tuple(NodeKind)


def random_network(
    rng: random.Random,
    n_nodes: int,
    modes: tuple[TransportMode, ...] = (TransportMode.HIGHWAY, TransportMode.RAIL, TransportMode.WATER),
    edge_factor: float = 2.2,
    transfer_factor: float = 1.5,
    name: str = "random",
) -> Network:
    nodes = tuple(
        NetworkNode(
            id=i,
            name=f"node {i}",
            kind=rng.choice(_KINDS),
            lat=rng.uniform(25.0, 49.0),
            lon=rng.uniform(-124.0, -67.0),
        )
        for i in range(1, n_nodes + 1)
    )
    edges = []
    for edge_id in range(1, int(edge_factor * n_nodes) + 1):
        tail = rng.randint(1, n_nodes)
        head = rng.randint(1, n_nodes)
        while head == tail:
            head = rng.randint(1, n_nodes)
        edges.append(
            NetworkEdge(
                id=edge_id,
                from_node=tail,
                to_node=head,
                mode=rng.choice(modes),
                distance_miles=rng.randint(40, 2000) * 0.25,  # 10..500 mi
                speed_mph=rng.choice(_SPEEDS),
                op_cost_per_container_mile=rng.randint(0, 64) / 16.0,
                emission_kg_per_container_mile=rng.randint(0, 32) / 64.0,
                capacity_containers=None,
                bidirectional=rng.random() < 0.25,
            )
        )
    transfers: dict[tuple[int, TransportMode, TransportMode], TransferRule] = {}
    if len(modes) > 1:
        for _ in range(int(transfer_factor * n_nodes)):
            node_id = rng.randint(1, n_nodes)
            from_mode, to_mode = rng.sample(list(modes), 2)
            key = (node_id, from_mode, to_mode)
            transfers[key] = TransferRule(
                node_id=node_id,
                from_mode=from_mode,
                to_mode=to_mode,
                transfer_time_hours=rng.randint(0, 16) * 0.25,
                transfer_cost_per_container=rng.randint(0, 80) * 0.25,
            )
    return Network(name=name, nodes=nodes, edges=tuple(edges), transfers=tuple(transfers.values()))


def random_scenario(rng: random.Random, net: Network, travel_time_cv: float = 0.0) -> Scenario:
    node_ids = [node.id for node in net.nodes]
    origin = rng.choice(node_ids)
    destination = rng.choice(node_ids)
    while destination == origin:
        destination = rng.choice(node_ids)
    available = sorted(net.modes, key=lambda m: m.value) or [TransportMode.HIGHWAY]
    count = rng.randint(1, len(available))
    allowed = frozenset(rng.sample(available, count))
    return Scenario(
        origin=origin,
        destination=destination,
        containers=rng.randint(1, 20),
        deadline_hours=rng.randint(1, 240) * 0.25,  # 0.25..60 h
        carbon_price_usd_per_kg=rng.randint(0, 16) / 8.0,
        allowed_modes=allowed,
        travel_time_cv=travel_time_cv,
        seed=rng.randint(0, 2**32),
    )
