"""Multimodal network data model, file formats, and validation.

Units are fixed globally: miles, mph, hours, USD, kg CO2. Node and edge
ids are positive integers. Networks are immutable after load and safe to
share across concurrent readers.

A mode change at a node is only possible where an explicit
:class:`TransferRule` exists; the absence of a rule means the absence of
a transfer facility.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Any

from .canonical import canonical_dumps
from .errors import ParseError, ValidationError


class TransportMode(str, Enum):
    HIGHWAY = "Highway"
    RAIL = "Rail"
    WATER = "Water"


class NodeKind(str, Enum):
    CITY = "City"
    TERMINAL = "Terminal"
    RAIL_STATION = "RailStation"
    SEAPORT = "Seaport"
    WAREHOUSE = "Warehouse"
    JUNCTION = "Junction"


@dataclass(frozen=True)
class NetworkNode:
    id: int
    name: str
    kind: NodeKind
    lat: float
    lon: float


@dataclass(frozen=True)
class NetworkEdge:
    id: int
    from_node: int
    to_node: int
    mode: TransportMode
    distance_miles: float
    speed_mph: float
    op_cost_per_container_mile: float
    emission_kg_per_container_mile: float
    capacity_containers: int | None = None
    bidirectional: bool = False

    @property
    def travel_time_hours(self) -> float:
        return self.distance_miles / self.speed_mph


@dataclass(frozen=True)
class TransferRule:
    node_id: int
    from_mode: TransportMode
    to_mode: TransportMode
    transfer_time_hours: float
    transfer_cost_per_container: float


@dataclass(frozen=True)
class Violation:
    code: str
    entity_id: int
    message: str


@dataclass(frozen=True)
class Network:
    name: str
    nodes: tuple[NetworkNode, ...]
    edges: tuple[NetworkEdge, ...]
    transfers: tuple[TransferRule, ...]

    @cached_property
    def node_by_id(self) -> dict[int, NetworkNode]:
        return {node.id: node for node in self.nodes}

    @cached_property
    def edge_by_id(self) -> dict[int, NetworkEdge]:
        return {edge.id: edge for edge in self.edges}

    @cached_property
    def transfer_by_key(self) -> dict[tuple[int, TransportMode, TransportMode], TransferRule]:
        return {(rule.node_id, rule.from_mode, rule.to_mode): rule for rule in self.transfers}

    @cached_property
    def modes(self) -> frozenset[TransportMode]:
        return frozenset(edge.mode for edge in self.edges)

    def has_capacities(self) -> bool:
        return any(edge.capacity_containers is not None for edge in self.edges)


@dataclass(frozen=True)
class DemandRecord:
    origin_region: str
    destination_region: str
    commodity: str
    tons: float
    mode: str
    year: int


_NODE_KEYS = {"id", "name", "kind", "lat", "lon"}
_EDGE_KEYS = {
    "id",
    "from_node",
    "to_node",
    "mode",
    "distance_miles",
    "speed_mph",
    "op_cost_per_container_mile",
    "emission_kg_per_container_mile",
    "capacity_containers",
    "bidirectional",
}
_EDGE_REQUIRED = _EDGE_KEYS - {"capacity_containers", "bidirectional"}
_TRANSFER_KEYS = {"node_id", "from_mode", "to_mode", "transfer_time_hours", "transfer_cost_per_container"}
_NETWORK_KEYS = {"name", "nodes", "edges", "transfers"}


def _require_keys(obj: dict, required: set[str], allowed: set[str], what: str) -> None:
    if not isinstance(obj, dict):
        raise ParseError(f"{what} must be a JSON object")
    unknown = set(obj) - allowed
    if unknown:
        raise ParseError(f"{what}: unknown key(s) {sorted(unknown)}")
    missing = required - set(obj)
    if missing:
        raise ParseError(f"{what}: missing key(s) {sorted(missing)}")


def _as_int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{what} must be an integer, got {value!r}")
    return value


def _as_number(value: Any, what: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"{what} must be a number, got {value!r}")
    return float(value)


def _as_str(value: Any, what: str) -> str:
    if not isinstance(value, str):
        raise ParseError(f"{what} must be a string, got {value!r}")
    return value


def _as_mode(value: Any, what: str) -> TransportMode:
    try:
        return TransportMode(_as_str(value, what))
    except ValueError:
        raise ParseError(f"{what} must be one of {[m.value for m in TransportMode]}, got {value!r}") from None


def network_from_dict(doc: dict) -> Network:
    """Build a Network from a parsed document. Structural problems raise
    ParseError; semantic invariants are left to :func:`validate_network`."""
    _require_keys(doc, _NETWORK_KEYS, _NETWORK_KEYS, "network")
    name = _as_str(doc["name"], "network name")
    for key in ("nodes", "edges", "transfers"):
        if not isinstance(doc[key], list):
            raise ParseError(f"network {key} must be an array")
    nodes = []
    for i, raw in enumerate(doc["nodes"]):
        what = f"nodes[{i}]"
        _require_keys(raw, _NODE_KEYS, _NODE_KEYS, what)
        try:
            kind = NodeKind(_as_str(raw["kind"], f"{what}.kind"))
        except ValueError:
            raise ParseError(f"{what}.kind must be one of {[k.value for k in NodeKind]}") from None
        nodes.append(
            NetworkNode(
                id=_as_int(raw["id"], f"{what}.id"),
                name=_as_str(raw["name"], f"{what}.name"),
                kind=kind,
                lat=_as_number(raw["lat"], f"{what}.lat"),
                lon=_as_number(raw["lon"], f"{what}.lon"),
            )
        )
    edges = []
    for i, raw in enumerate(doc["edges"]):
        what = f"edges[{i}]"
        _require_keys(raw, _EDGE_REQUIRED, _EDGE_KEYS, what)
        capacity = raw.get("capacity_containers")
        if capacity is not None:
            capacity = _as_int(capacity, f"{what}.capacity_containers")
        bidirectional = raw.get("bidirectional", False)
        if not isinstance(bidirectional, bool):
            raise ParseError(f"{what}.bidirectional must be a boolean")
        edges.append(
            NetworkEdge(
                id=_as_int(raw["id"], f"{what}.id"),
                from_node=_as_int(raw["from_node"], f"{what}.from_node"),
                to_node=_as_int(raw["to_node"], f"{what}.to_node"),
                mode=_as_mode(raw["mode"], f"{what}.mode"),
                distance_miles=_as_number(raw["distance_miles"], f"{what}.distance_miles"),
                speed_mph=_as_number(raw["speed_mph"], f"{what}.speed_mph"),
                op_cost_per_container_mile=_as_number(
                    raw["op_cost_per_container_mile"], f"{what}.op_cost_per_container_mile"
                ),
                emission_kg_per_container_mile=_as_number(
                    raw["emission_kg_per_container_mile"], f"{what}.emission_kg_per_container_mile"
                ),
                capacity_containers=capacity,
                bidirectional=bidirectional,
            )
        )
    transfers = []
    for i, raw in enumerate(doc["transfers"]):
        what = f"transfers[{i}]"
        _require_keys(raw, _TRANSFER_KEYS, _TRANSFER_KEYS, what)
        transfers.append(
            TransferRule(
                node_id=_as_int(raw["node_id"], f"{what}.node_id"),
                from_mode=_as_mode(raw["from_mode"], f"{what}.from_mode"),
                to_mode=_as_mode(raw["to_mode"], f"{what}.to_mode"),
                transfer_time_hours=_as_number(raw["transfer_time_hours"], f"{what}.transfer_time_hours"),
                transfer_cost_per_container=_as_number(
                    raw["transfer_cost_per_container"], f"{what}.transfer_cost_per_container"
                ),
            )
        )
    return Network(name=name, nodes=tuple(nodes), edges=tuple(edges), transfers=tuple(transfers))


def network_to_dict(net: Network) -> dict:
    doc: dict[str, Any] = {
        "name": net.name,
        "nodes": [
            {"id": n.id, "name": n.name, "kind": n.kind.value, "lat": n.lat, "lon": n.lon} for n in net.nodes
        ],
        "edges": [],
        "transfers": [
            {
                "node_id": t.node_id,
                "from_mode": t.from_mode.value,
                "to_mode": t.to_mode.value,
                "transfer_time_hours": t.transfer_time_hours,
                "transfer_cost_per_container": t.transfer_cost_per_container,
            }
            for t in net.transfers
        ],
    }
    for e in net.edges:
        raw: dict[str, Any] = {
            "id": e.id,
            "from_node": e.from_node,
            "to_node": e.to_node,
            "mode": e.mode.value,
            "distance_miles": e.distance_miles,
            "speed_mph": e.speed_mph,
            "op_cost_per_container_mile": e.op_cost_per_container_mile,
            "emission_kg_per_container_mile": e.emission_kg_per_container_mile,
        }
        if e.capacity_containers is not None:
            raw["capacity_containers"] = e.capacity_containers
        if e.bidirectional:
            raw["bidirectional"] = True
        doc["edges"].append(raw)
    return doc


def load_network(document: str) -> Network:
    """Parse and fully validate a network JSON document.

    Raises ParseError for malformed JSON or schema problems, and
    ValidationError (carrying the full violation list) when the parsed
    network breaks any invariant.
    """
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    net = network_from_dict(doc)
    violations = validate_network(net)
    if violations:
        raise ValidationError(violations)
    return net


def serialize_network(net: Network) -> str:
    return canonical_dumps(network_to_dict(net))


def validate_network(net: Network) -> list[Violation]:
    """Check every network invariant.

    Returns a deterministic list sorted by (code, entity_id); empty iff
    the network is valid. Violations are data, not errors.
    """
    out: list[Violation] = []
    seen_nodes: set[int] = set()
    for node in net.nodes:
        if node.id <= 0:
            out.append(Violation("NONPOSITIVE_NODE_ID", node.id, f"node {node.id}: id must be positive"))
        if node.id in seen_nodes:
            out.append(Violation("DUP_NODE_ID", node.id, f"node {node.id}: duplicate id"))
        seen_nodes.add(node.id)
        if not -90.0 <= node.lat <= 90.0:
            out.append(Violation("COORD_OUT_OF_RANGE", node.id, f"node {node.id}: lat {node.lat} outside [-90, 90]"))
        if not -180.0 <= node.lon <= 180.0:
            out.append(
                Violation("COORD_OUT_OF_RANGE", node.id, f"node {node.id}: lon {node.lon} outside [-180, 180]")
            )
    seen_edges: set[int] = set()
    for edge in net.edges:
        eid = edge.id
        if eid <= 0:
            out.append(Violation("NONPOSITIVE_EDGE_ID", eid, f"edge {eid}: id must be positive"))
        if eid in seen_edges:
            out.append(Violation("DUP_EDGE_ID", eid, f"edge {eid}: duplicate id"))
        seen_edges.add(eid)
        if edge.from_node not in seen_nodes:
            out.append(Violation("UNKNOWN_FROM_NODE", eid, f"edge {eid}: unknown from_node {edge.from_node}"))
        if edge.to_node not in seen_nodes:
            out.append(Violation("UNKNOWN_TO_NODE", eid, f"edge {eid}: unknown to_node {edge.to_node}"))
        if edge.from_node == edge.to_node:
            out.append(Violation("SELF_LOOP", eid, f"edge {eid}: from_node equals to_node"))
        if edge.distance_miles <= 0:
            out.append(Violation("NONPOSITIVE_DISTANCE", eid, f"edge {eid}: distance_miles must be > 0"))
        if edge.speed_mph <= 0:
            out.append(Violation("NONPOSITIVE_SPEED", eid, f"edge {eid}: speed_mph must be > 0"))
        if edge.op_cost_per_container_mile < 0:
            out.append(Violation("NEGATIVE_COST", eid, f"edge {eid}: op_cost_per_container_mile must be >= 0"))
        if edge.emission_kg_per_container_mile < 0:
            out.append(
                Violation("NEGATIVE_EMISSION", eid, f"edge {eid}: emission_kg_per_container_mile must be >= 0")
            )
        if edge.capacity_containers is not None and edge.capacity_containers <= 0:
            out.append(Violation("NONPOSITIVE_CAPACITY", eid, f"edge {eid}: capacity_containers must be > 0"))
    seen_transfers: set[tuple[int, TransportMode, TransportMode]] = set()
    for rule in net.transfers:
        nid = rule.node_id
        key = (nid, rule.from_mode, rule.to_mode)
        if key in seen_transfers:
            out.append(
                Violation(
                    "DUP_TRANSFER_RULE",
                    nid,
                    f"transfer at node {nid}: duplicate rule {rule.from_mode.value}->{rule.to_mode.value}",
                )
            )
        seen_transfers.add(key)
        if nid not in seen_nodes:
            out.append(Violation("UNKNOWN_TRANSFER_NODE", nid, f"transfer at node {nid}: unknown node"))
        if rule.from_mode == rule.to_mode:
            out.append(
                Violation("SAME_MODE_TRANSFER", nid, f"transfer at node {nid}: from_mode equals to_mode")
            )
        if rule.transfer_time_hours < 0:
            out.append(
                Violation("NEGATIVE_TRANSFER_TIME", nid, f"transfer at node {nid}: transfer_time_hours must be >= 0")
            )
        if rule.transfer_cost_per_container < 0:
            out.append(
                Violation(
                    "NEGATIVE_TRANSFER_COST",
                    nid,
                    f"transfer at node {nid}: transfer_cost_per_container must be >= 0",
                )
            )
    out.sort(key=lambda v: (v.code, v.entity_id))
    return out


_FAF_HEADER = ["origin_region", "destination_region", "commodity", "tons", "mode", "year"]


def ingest_faf_flows(document: str) -> list[DemandRecord]:
    """Parse FAF-style demand rows from CSV text.

    Rows are numbered with the header as row 1. Any unparseable or
    invariant-breaking field rejects the whole document with a ParseError
    naming the row and column.
    """
    reader = csv.reader(io.StringIO(document))
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError("empty CSV: missing header row") from None
    if header != _FAF_HEADER:
        raise ParseError(f"bad CSV header: expected {','.join(_FAF_HEADER)}")
    records: list[DemandRecord] = []
    for row_no, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(_FAF_HEADER):
            raise ParseError(f"row {row_no}: expected {len(_FAF_HEADER)} fields, got {len(row)}", row=row_no)
        values = dict(zip(_FAF_HEADER, row))
        for col in ("origin_region", "destination_region", "commodity", "mode"):
            if not values[col].strip():
                raise ParseError(f"row {row_no}: column {col} is empty", row=row_no, column=col)
        try:
            tons = float(values["tons"])
        except ValueError:
            raise ParseError(f"row {row_no}: column tons is not a number", row=row_no, column="tons") from None
        if tons < 0:
            raise ParseError(f"row {row_no}: column tons must be >= 0", row=row_no, column="tons")
        try:
            year = int(values["year"])
        except ValueError:
            raise ParseError(f"row {row_no}: column year is not an integer", row=row_no, column="year") from None
        records.append(
            DemandRecord(
                origin_region=values["origin_region"],
                destination_region=values["destination_region"],
                commodity=values["commodity"],
                tons=tons,
                mode=values["mode"],
                year=year,
            )
        )
    return records
