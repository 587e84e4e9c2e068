"""Bundled network fixtures, loadable by name."""

from __future__ import annotations

import json
from importlib import resources

from ..errors import UnknownFixtureError
from ..netmodel import Network, load_network

FIXTURE_NAMES = ("fixture14", "t3")

DEMO_FIXTURE = "fixture14"


def demo_scenario():
    """The bundled demonstration shipment: 250 containers coast-to-coast
    within 36 hours on the 14-node network."""
    from ..netmodel import TransportMode
    from ..optimizer import Scenario

    return Scenario(
        origin=1,
        destination=14,
        containers=250,
        deadline_hours=36.0,
        carbon_price_usd_per_kg=0.25,
        allowed_modes=frozenset({TransportMode.HIGHWAY, TransportMode.RAIL}),
        travel_time_cv=0.08,
        seed=7,
    )


def fixture_document(name: str) -> dict:
    if name not in FIXTURE_NAMES:
        raise UnknownFixtureError(f"unknown fixture {name!r}; available: {', '.join(FIXTURE_NAMES)}")
    text = resources.files(__package__).joinpath(f"{name}.json").read_text(encoding="utf-8")
    return json.loads(text)


def load_fixture(name: str) -> Network:
    if name not in FIXTURE_NAMES:
        raise UnknownFixtureError(f"unknown fixture {name!r}; available: {', '.join(FIXTURE_NAMES)}")
    text = resources.files(__package__).joinpath(f"{name}.json").read_text(encoding="utf-8")
    return load_network(text)
