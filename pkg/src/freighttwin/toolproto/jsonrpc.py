"""JSON-RPC 2.0 dispatch for the mcp-lite/1 subset.

Methods: ``initialize``, ``tools/list``, ``tools/call``. Every outcome
maps to exactly one of {result, -32700, -32600, -32601, -32602, -32000}
and always echoes the request id when one can be recovered.
"""

from __future__ import annotations

import json
from typing import Any

from .. import PROTOCOL_VERSION, SERVER_NAME, __version__
from .registry import (
    INVALID_PARAMS,
    INVALID_REQUEST,
    METHOD_NOT_FOUND,
    PARSE_ERROR,
    ToolCall,
    ToolRegistry,
    descriptor_to_dict,
)


def _error(request_id: Any, code: int, message: str, data: dict | None = None) -> dict:
    error: dict[str, Any] = {"code": code, "message": message}
    if data is not None:
        error["data"] = data
    return {"jsonrpc": "2.0", "id": request_id, "error": error}


def _result(request_id: Any, value: Any) -> dict:
    return {"jsonrpc": "2.0", "id": request_id, "result": value}


def initialize_result() -> dict:
    return {
        "protocol": PROTOCOL_VERSION,
        "server": {"name": SERVER_NAME, "version": __version__},
        "capabilities": {"tools": True},
    }


def handle_request(registry: ToolRegistry, request: Any) -> dict:
    if not isinstance(request, dict):
        return _error(None, INVALID_REQUEST, "request must be a JSON object")
    request_id = request.get("id")
    if not isinstance(request_id, (int, str)) or isinstance(request_id, bool):
        return _error(None, INVALID_REQUEST, "id must be an integer or string")
    if request.get("jsonrpc") != "2.0":
        return _error(request_id, INVALID_REQUEST, 'jsonrpc must be "2.0"')
    method = request.get("method")
    if not isinstance(method, str):
        return _error(request_id, INVALID_REQUEST, "method must be a string")

    if method == "initialize":
        return _result(request_id, initialize_result())
    if method == "tools/list":
        return _result(request_id, {"tools": [descriptor_to_dict(d) for d in registry.list_descriptors()]})
    if method == "tools/call":
        params = request.get("params")
        if not isinstance(params, dict) or not isinstance(params.get("name"), str) or "arguments" not in params:
            return _error(request_id, INVALID_PARAMS, 'params must be {"name": str, "arguments": object}')
        outcome = registry.call(ToolCall(id=request_id, tool=params["name"], arguments=params["arguments"]))
        if outcome.ok:
            return _result(request_id, outcome.value)
        assert outcome.error is not None
        return _error(request_id, outcome.error["code"], outcome.error["message"], outcome.error.get("data"))
    return _error(request_id, METHOD_NOT_FOUND, f"unknown method {method!r}")


def handle_text(registry: ToolRegistry, text: str) -> dict:
    try:
        request = json.loads(text)
    except json.JSONDecodeError as exc:
        return _error(None, PARSE_ERROR, f"parse error: {exc}")
    return handle_request(registry, request)
