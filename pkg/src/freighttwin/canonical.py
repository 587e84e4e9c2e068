"""Canonical JSON serialization shared by every module.

All golden tests and cross-transport equality checks depend on one fixed
rendering:

- object keys sorted, compact separators;
- floats under a key ending in ``_usd`` rendered with exactly 2 decimals
  (money is rounded at serialization time only, never internally);
- floats under a key ending in ``probability`` rendered with 6 decimals;
- every other float rendered with ``repr`` (shortest round-trip form);
- NaN/Infinity rejected.

List elements inherit the key of the list itself, so e.g. a list under
``"total_usd"`` would be money-formatted; in practice monetary values are
always scalar fields.
"""

from __future__ import annotations

import json
import math
from typing import Any

_MONEY_SUFFIX = "_usd"
_PROBABILITY_SUFFIX = "probability"


def format_float(value: float, key: str | None = None) -> str:
    if math.isnan(value) or math.isinf(value):
        raise ValueError("canonical JSON forbids NaN/Infinity")
    if key is not None:
        if key.endswith(_MONEY_SUFFIX):
            return f"{value:.2f}"
        if key.endswith(_PROBABILITY_SUFFIX):
            return f"{value:.6f}"
    return repr(value)


def _render(value: Any, key: str | None) -> str:
    if value is None or value is True or value is False:
        return json.dumps(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_float(value, key)
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=False)
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_render(item, key) for item in value) + "]"
    if isinstance(value, dict):
        parts = []
        for child_key in sorted(value):
            if not isinstance(child_key, str):
                raise TypeError(f"canonical JSON requires string keys, got {child_key!r}")
            parts.append(json.dumps(child_key, ensure_ascii=False) + ":" + _render(value[child_key], child_key))
        return "{" + ",".join(parts) + "}"
    raise TypeError(f"not canonical-JSON serializable: {type(value).__name__}")


def canonical_dumps(value: Any) -> str:
    """Render ``value`` in the repository's canonical JSON form."""
    return _render(value, None)


def canonical_loads(text: str) -> Any:
    return json.loads(text)
