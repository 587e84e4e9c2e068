import json
import math

import pytest

from freighttwin.canonical import canonical_dumps


def test_sorted_keys_compact():
    assert canonical_dumps({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'


def test_money_two_decimals_at_serialization_only():
    assert canonical_dumps({"total_usd": 75668.531}) == '{"total_usd":75668.53}'
    assert canonical_dumps({"ghg_tax_usd": 7705.8125}) == '{"ghg_tax_usd":7705.81}'
    assert canonical_dumps({"total_usd": 3240.0}) == '{"total_usd":3240.00}'


def test_probability_six_decimals():
    assert canonical_dumps({"on_time_probability": 1.0}) == '{"on_time_probability":1.000000}'
    assert canonical_dumps({"on_time_probability": 0.8338}) == '{"on_time_probability":0.833800}'


def test_plain_floats_round_trip():
    value = 280.0 / 55.0
    text = canonical_dumps({"total_time_hours": value})
    assert json.loads(text)["total_time_hours"] == value


def test_nested_money_inherits_key():
    text = canonical_dumps({"routes": [{"plan": {"total_usd": 1944.0}}]})
    assert '"total_usd":1944.00' in text


def test_rejects_nan_and_exotic_types():
    with pytest.raises(ValueError):
        canonical_dumps({"x": math.nan})
    with pytest.raises(TypeError):
        canonical_dumps({"x": {1: 2}})
    with pytest.raises(TypeError):
        canonical_dumps({"x": object()})


def test_output_is_valid_json():
    doc = {"name": "n", "values": [1, 2.5, None, True, "text"], "total_usd": 1.005}
    assert json.loads(canonical_dumps(doc)) is not None
