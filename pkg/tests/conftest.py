"""Shared fixtures: the tiny T3 triangle network and canonical helpers."""

from __future__ import annotations

import json
import math
import re

import pytest

from freighttwin.canonical import canonical_dumps
from freighttwin.netmodel import (
    Network,
    NetworkEdge,
    NetworkNode,
    NodeKind,
    TransferRule,
    TransportMode,
)
from freighttwin.optimizer import Scenario

HIGHWAY = TransportMode.HIGHWAY
RAIL = TransportMode.RAIL
WATER = TransportMode.WATER


def build_t3() -> Network:
    """Three nodes, two route options: cheap intermodal (8 h) vs fast
    direct highway (~5.09 h)."""
    return Network(
        name="tiny-triangle",
        nodes=(
            NetworkNode(1, "West City", NodeKind.CITY, 40.0, -100.0),
            NetworkNode(2, "Mid Terminal", NodeKind.TERMINAL, 40.5, -97.0),
            NetworkNode(3, "East City", NodeKind.CITY, 41.0, -94.0),
        ),
        edges=(
            NetworkEdge(1, 1, 2, HIGHWAY, 100.0, 50.0, 2.0, 0.1),
            NetworkEdge(2, 2, 3, RAIL, 200.0, 40.0, 0.5, 0.02),
            NetworkEdge(3, 1, 3, HIGHWAY, 280.0, 55.0, 2.0, 0.1),
        ),
        transfers=(TransferRule(2, HIGHWAY, RAIL, 1.0, 10.0),),
    )


def t3_scenario(**overrides) -> Scenario:
    base = dict(
        origin=1,
        destination=3,
        containers=10,
        deadline_hours=12.0,
        carbon_price_usd_per_kg=1.0,
        allowed_modes=frozenset({HIGHWAY, RAIL}),
        travel_time_cv=0.0,
        seed=None,
    )
    base.update(overrides)
    return Scenario(**base)


@pytest.fixture
def t3() -> Network:
    return build_t3()


@pytest.fixture
def t3_request_body() -> dict:
    return {
        "network_ref": "t3",
        "scenario": {
            "origin": 1,
            "destination": 3,
            "containers": 10,
            "deadline_hours": 12.0,
            "carbon_price_usd_per_kg": 1.0,
            "allowed_modes": ["Highway", "Rail"],
            "travel_time_cv": 0.0,
            "seed": 11,
        },
        "options": {"samples": 200, "k_pool": 4, "want_map": True},
    }


def canonical_equal(a, b) -> bool:
    return canonical_dumps(a) == canonical_dumps(b)


_NUMERAL = re.compile(r"(\d[\d,]*(?:\.\d+)?)(%?)")


def extract_numerals(text: str) -> list[float]:
    out = []
    for match in _NUMERAL.finditer(text):
        value = float(match.group(1).replace(",", ""))
        if match.group(2):
            value /= 100.0
        out.append(value)
    return out


def collect_numbers(doc) -> list[float]:
    """All numbers in a document as serialized canonically (so money is
    seen at its 2-decimal wire precision)."""
    found: list[float] = []

    def walk(value):
        if isinstance(value, bool):
            return
        if isinstance(value, (int, float)):
            found.append(float(value))
        elif isinstance(value, list):
            for item in value:
                walk(item)
        elif isinstance(value, dict):
            for item in value.values():
                walk(item)

    walk(json.loads(canonical_dumps(doc)))
    return found


def assert_faithful(text: str, *docs) -> None:
    """Every numeral in the text must appear in one of the documents."""
    candidates = [n for doc in docs for n in collect_numbers(doc)]
    for numeral in extract_numerals(text):
        assert any(
            math.isclose(numeral, candidate, rel_tol=1e-9, abs_tol=1e-9) for candidate in candidates
        ), f"numeral {numeral} not found in result/request documents"
