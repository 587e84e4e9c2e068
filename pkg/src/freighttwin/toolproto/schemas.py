"""JSON-schema documents for the built-in tool surfaces."""

from __future__ import annotations

_MODE = {"enum": ["Highway", "Rail", "Water"]}
_KIND = {"enum": ["City", "Terminal", "RailStation", "Seaport", "Warehouse", "Junction"]}

NETWORK_SCHEMA = {
    "type": "object",
    "required": ["name", "nodes", "edges", "transfers"],
    "additionalProperties": False,
    "properties": {
        "name": {"type": "string"},
        "nodes": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "name", "kind", "lat", "lon"],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "integer"},
                    "name": {"type": "string"},
                    "kind": _KIND,
                    "lat": {"type": "number"},
                    "lon": {"type": "number"},
                },
            },
        },
        "edges": {
            "type": "array",
            "items": {
                "type": "object",
                "required": [
                    "id",
                    "from_node",
                    "to_node",
                    "mode",
                    "distance_miles",
                    "speed_mph",
                    "op_cost_per_container_mile",
                    "emission_kg_per_container_mile",
                ],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "integer"},
                    "from_node": {"type": "integer"},
                    "to_node": {"type": "integer"},
                    "mode": _MODE,
                    "distance_miles": {"type": "number"},
                    "speed_mph": {"type": "number"},
                    "op_cost_per_container_mile": {"type": "number"},
                    "emission_kg_per_container_mile": {"type": "number"},
                    "capacity_containers": {"type": "integer"},
                    "bidirectional": {"type": "boolean"},
                },
            },
        },
        "transfers": {
            "type": "array",
            "items": {
                "type": "object",
                "required": [
                    "node_id",
                    "from_mode",
                    "to_mode",
                    "transfer_time_hours",
                    "transfer_cost_per_container",
                ],
                "additionalProperties": False,
                "properties": {
                    "node_id": {"type": "integer"},
                    "from_mode": _MODE,
                    "to_mode": _MODE,
                    "transfer_time_hours": {"type": "number"},
                    "transfer_cost_per_container": {"type": "number"},
                },
            },
        },
    },
}

SCENARIO_SCHEMA = {
    "type": "object",
    "required": [
        "origin",
        "destination",
        "containers",
        "deadline_hours",
        "carbon_price_usd_per_kg",
        "allowed_modes",
    ],
    "additionalProperties": False,
    "properties": {
        "origin": {"type": "integer"},
        "destination": {"type": "integer"},
        "containers": {"type": "integer", "minimum": 1},
        "deadline_hours": {"type": "number", "exclusiveMinimum": 0},
        "carbon_price_usd_per_kg": {"type": "number", "minimum": 0},
        "allowed_modes": {"type": "array", "items": _MODE, "minItems": 1},
        "travel_time_cv": {"type": "number", "minimum": 0},
        "seed": {"type": "integer", "minimum": 0},
    },
}

PLAN_SCHEMA = {
    "type": "object",
    "required": [
        "origin",
        "destination",
        "legs",
        "transfers",
        "linehaul_usd",
        "transfer_usd",
        "ghg_tax_usd",
        "total_usd",
        "total_time_hours",
        "emissions_kg",
        "optimal",
    ],
    "additionalProperties": False,
    "properties": {
        "origin": {"type": "integer"},
        "destination": {"type": "integer"},
        "legs": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["edge_id", "mode", "depart_hours", "arrive_hours"],
                "additionalProperties": False,
                "properties": {
                    "edge_id": {"type": "integer"},
                    "mode": _MODE,
                    "depart_hours": {"type": "number"},
                    "arrive_hours": {"type": "number"},
                },
            },
        },
        "transfers": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["node_id", "from_mode", "to_mode", "start_hours", "end_hours"],
                "additionalProperties": False,
                "properties": {
                    "node_id": {"type": "integer"},
                    "from_mode": _MODE,
                    "to_mode": _MODE,
                    "start_hours": {"type": "number"},
                    "end_hours": {"type": "number"},
                },
            },
        },
        "linehaul_usd": {"type": "number"},
        "transfer_usd": {"type": "number"},
        "ghg_tax_usd": {"type": "number"},
        "total_usd": {"type": "number"},
        "total_time_hours": {"type": "number"},
        "emissions_kg": {"type": "number"},
        "optimal": {"type": "boolean"},
    },
}

REPORT_SCHEMA = {
    "type": "object",
    "required": [
        "samples",
        "on_time_probability",
        "completion_p50_hours",
        "completion_p95_hours",
        "mean_completion_hours",
        "per_leg_mean_hours",
        "seed_used",
    ],
    "additionalProperties": False,
    "properties": {
        "samples": {"type": "integer", "minimum": 1},
        "on_time_probability": {"type": "number", "minimum": 0, "maximum": 1},
        "completion_p50_hours": {"type": "number"},
        "completion_p95_hours": {"type": "number"},
        "mean_completion_hours": {"type": "number"},
        "per_leg_mean_hours": {"type": "array", "items": {"type": "number"}},
        "seed_used": {"type": "integer", "minimum": 0},
    },
}

VALIDATION_RESULT_SCHEMA = {
    "type": "object",
    "required": ["valid", "violations", "network"],
    "additionalProperties": False,
    "properties": {
        "valid": {"type": "boolean"},
        "violations": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["code", "entity_id", "message"],
                "additionalProperties": False,
                "properties": {
                    "code": {"type": "string"},
                    "entity_id": {"type": "integer"},
                    "message": {"type": "string"},
                },
            },
        },
        "network": NETWORK_SCHEMA,
    },
}

ASSIGNMENT_SCHEMA = {
    "type": "object",
    "required": ["routes", "total_usd", "max_completion_hours"],
    "additionalProperties": False,
    "properties": {
        "routes": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["plan", "containers"],
                "additionalProperties": False,
                "properties": {"plan": PLAN_SCHEMA, "containers": {"type": "integer", "minimum": 1}},
            },
        },
        "total_usd": {"type": "number"},
        "max_completion_hours": {"type": "number"},
    },
}

GEOJSON_SCHEMA = {
    "type": "object",
    "required": ["type", "features"],
    "additionalProperties": False,
    "properties": {
        "type": {"const": "FeatureCollection"},
        "features": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["type", "geometry", "properties"],
                "additionalProperties": False,
                "properties": {
                    "type": {"const": "Feature"},
                    "geometry": {
                        "type": "object",
                        "required": ["type", "coordinates"],
                        "additionalProperties": False,
                        "properties": {
                            "type": {"enum": ["Point", "LineString"]},
                            "coordinates": {"type": "array"},
                        },
                    },
                    "properties": {"type": "object"},
                },
            },
        },
    },
}
