from pathlib import Path
from urllib.parse import parse_qs, urlparse

import pytest

from freighttwin.errors import EmptyLayersError, InvalidBBoxError, UnknownNodeError
from freighttwin.geoviz import DEFAULT_ROUTE_LAYERS, WmsLayer, build_wms_query, plan_to_geojson
from freighttwin.optimizer import solve_rcsp

from conftest import t3_scenario

GOLDEN = Path(__file__).parent / "golden"


def test_empty_plan_has_no_features(t3):
    plan = solve_rcsp(t3, t3_scenario(destination=1))
    collection = plan_to_geojson(t3, plan)
    assert collection == {"type": "FeatureCollection", "features": []}


def test_t3_intermodal_feature_inventory(t3):
    plan = solve_rcsp(t3, t3_scenario())
    collection = plan_to_geojson(t3, plan)
    features = collection["features"]
    # 2 legs + 1 transfer + origin + destination
    assert len(features) == 5
    lines = [f for f in features if f["geometry"]["type"] == "LineString"]
    points = [f for f in features if f["geometry"]["type"] == "Point"]
    assert len(lines) == 2 and len(points) == 3
    assert lines[0]["properties"]["mode"] == "Highway"
    assert lines[1]["properties"]["mode"] == "Rail"
    transfer = points[0]
    assert transfer["properties"] == {"node_id": 2, "from_mode": "Highway", "to_mode": "Rail"}
    roles = [p["properties"].get("role") for p in points[1:]]
    assert roles == ["origin", "destination"]


def test_coordinates_are_lon_lat(t3):
    plan = solve_rcsp(t3, t3_scenario())
    first_line = plan_to_geojson(t3, plan)["features"][0]
    assert first_line["geometry"]["coordinates"][0] == [-100.0, 40.0]  # [lon, lat] of node 1


def test_feature_count_law_on_fixture14():
    from freighttwin.fixtures import demo_scenario, load_fixture

    net = load_fixture("fixture14")
    plan = solve_rcsp(net, demo_scenario())
    collection = plan_to_geojson(net, plan)
    assert len(collection["features"]) == len(plan.legs) + len(plan.transfers) + 2


def test_geojson_rejects_unknown_node(t3):
    import dataclasses

    plan = solve_rcsp(t3, t3_scenario())
    broken = dataclasses.replace(plan, destination=99)
    with pytest.raises(UnknownNodeError):
        plan_to_geojson(t3, broken)


def test_wms_query_matches_published_figure():
    query = build_wms_query(
        "http://<geoserver-host>/geoserver/wms",
        DEFAULT_ROUTE_LAYERS,
        (-125, 24, -66, 50),
        800,
        600,
        "OPT12345",
    )
    assert query == (GOLDEN / "wms_query.txt").read_text(encoding="utf-8")


def test_wms_single_passthrough_layer():
    query = build_wms_query("http://host/wms", [WmsLayer("osm_base", False)], (-1, -1, 1, 1), 10, 10, "X")
    assert query.endswith("CQL_FILTER=INCLUDE")


def test_wms_invalid_bbox_and_empty_layers():
    with pytest.raises(InvalidBBoxError):
        build_wms_query("http://h/wms", DEFAULT_ROUTE_LAYERS, (10, 0, -10, 5), 10, 10, "X")
    with pytest.raises(EmptyLayersError):
        build_wms_query("http://h/wms", [], (-1, -1, 1, 1), 10, 10, "X")
    with pytest.raises(InvalidBBoxError):
        build_wms_query("http://h/wms", DEFAULT_ROUTE_LAYERS, (-1, -1, 1, 1), 0, 10, "X")


def test_wms_round_trips_parameters():
    query = build_wms_query(
        "http://example/geoserver/wms",
        [WmsLayer("a:layer", True), WmsLayer("b", False)],
        (-125.5, 24.25, -66.0, 50.0),
        1024,
        768,
        "OPT777",
    )
    parsed = urlparse(query)
    params = parse_qs(parsed.query, separator="&")
    assert params["service"] == ["WMS"]
    assert params["version"] == ["1.1.1"]
    assert params["request"] == ["GetMap"]
    assert params["layers"] == ["a:layer,b"]
    assert params["bbox"] == ["-125.5,24.25,-66,50"]
    assert params["width"] == ["1024"] and params["height"] == ["768"]
    assert params["srs"] == ["EPSG:4326"]
    assert params["format"] == ["image/png"]
    assert params["CQL_FILTER"] == ["route_id='OPT777';INCLUDE"]
