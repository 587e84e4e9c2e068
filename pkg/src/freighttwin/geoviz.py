"""Geospatial route export: GeoJSON features and WMS GetMap queries.

Leg geometry is the straight line between endpoint nodes (v1); snapping
to an underlying road/rail geometry is the documented extension point.
WMS output is pinned to version 1.1.1 with the ``srs`` key so the query
string is byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import EmptyLayersError, InvalidBBoxError, UnknownNodeError
from .netmodel import Network
from .optimizer import RoutePlan, walk_arcs

WMS_VERSION = "1.1.1"
DEFAULT_US_BBOX = (-125.0, 24.0, -66.0, 50.0)

# roster mirroring the published route-map query: route-filtered layers
# first, pass-through layers after
DEFAULT_ROUTE_LAYERS = (
    ("osm_base", True),
    ("faf:freight_flows", True),
    ("sim:nodes", False),
    ("sim:links", False),
)


@dataclass(frozen=True)
class WmsLayer:
    name: str
    route_filtered: bool


def _coords(net: Network, node_id: int) -> list[float]:
    node = net.node_by_id.get(node_id)
    if node is None:
        raise UnknownNodeError(f"unknown node {node_id}")
    return [node.lon, node.lat]  # GeoJSON order: [lon, lat]


def plan_to_geojson(net: Network, plan: RoutePlan) -> dict:
    """One LineString per leg, one Point per transfer, plus origin and
    destination Points; empty plans yield an empty FeatureCollection."""
    if not plan.legs:
        return {"type": "FeatureCollection", "features": []}
    features = []
    for leg, (edge, tail, head) in zip(plan.legs, walk_arcs(net, plan.origin, plan.edge_ids)):
        features.append(
            {
                "type": "Feature",
                "geometry": {"type": "LineString", "coordinates": [_coords(net, tail), _coords(net, head)]},
                "properties": {
                    "edge_id": edge.id,
                    "mode": leg.mode.value,
                    "depart_hours": leg.depart_hours,
                    "arrive_hours": leg.arrive_hours,
                },
            }
        )
    for stop in plan.transfers:
        features.append(
            {
                "type": "Feature",
                "geometry": {"type": "Point", "coordinates": _coords(net, stop.node_id)},
                "properties": {
                    "node_id": stop.node_id,
                    "from_mode": stop.from_mode.value,
                    "to_mode": stop.to_mode.value,
                },
            }
        )
    for node_id, role in ((plan.origin, "origin"), (plan.destination, "destination")):
        features.append(
            {
                "type": "Feature",
                "geometry": {"type": "Point", "coordinates": _coords(net, node_id)},
                "properties": {"role": role},
            }
        )
    return {"type": "FeatureCollection", "features": features}


def _wms_number(value: float) -> str:
    if float(value) == int(value):
        return str(int(value))
    return repr(float(value))


def build_wms_query(
    base_url: str,
    layers: Sequence[WmsLayer | tuple[str, bool]],
    bbox: tuple[float, float, float, float],
    width: int,
    height: int,
    route_id: str,
) -> str:
    """Compose a WMS 1.1.1 GetMap query string.

    Each layer contributes one CQL_FILTER entry (joined by ';'):
    route-filtered layers get ``route_id='<id>'``, pass-through layers
    get ``INCLUDE``.
    """
    if not layers:
        raise EmptyLayersError("at least one layer is required")
    normalized = [layer if isinstance(layer, WmsLayer) else WmsLayer(*layer) for layer in layers]
    minlon, minlat, maxlon, maxlat = bbox
    if minlon > maxlon or minlat > maxlat:
        raise InvalidBBoxError(f"bbox must be (minlon, minlat, maxlon, maxlat), got {bbox}")
    if width <= 0 or height <= 0:
        raise InvalidBBoxError(f"width/height must be positive, got {width}x{height}")
    names = ",".join(layer.name for layer in normalized)
    cql = ";".join(f"route_id='{route_id}'" if layer.route_filtered else "INCLUDE" for layer in normalized)
    bbox_text = ",".join(_wms_number(v) for v in (minlon, minlat, maxlon, maxlat))
    return (
        f"{base_url}?service=WMS&version={WMS_VERSION}&request=GetMap"
        f"&layers={names}&styles=&bbox={bbox_text}&width={width}&height={height}"
        f"&srs=EPSG:4326&format=image/png&CQL_FILTER={cql}"
    )
