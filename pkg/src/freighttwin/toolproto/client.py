"""Tool clients used by the orchestrator.

Both flavors return :class:`ToolResult`; only genuine transport failures
raise :class:`TransportError` (domain errors travel inside the result and
are final).
"""

from __future__ import annotations

import itertools
from typing import Any

import httpx

from ..errors import TransportError
from .jsonrpc import handle_request
from .registry import ToolCall, ToolRegistry, ToolResult


class InProcessClient:
    """Direct dispatch against a registry; never raises TransportError."""

    def __init__(self, registry: ToolRegistry):
        self._registry = registry
        self._ids = itertools.count(1)

    def call(self, tool: str, arguments: Any, call_id: int | str | None = None) -> ToolResult:
        if call_id is None:
            call_id = next(self._ids)
        return self._registry.call(ToolCall(id=call_id, tool=tool, arguments=arguments))


class HttpRpcClient:
    """JSON-RPC client for a remote /rpc endpoint."""

    def __init__(self, base_url: str, client: httpx.Client | None = None, timeout: float = 30.0):
        self._base_url = base_url.rstrip("/")
        self._client = client if client is not None else httpx.Client(timeout=timeout)
        self._ids = itertools.count(1)

    def call_method(self, method: str, params: Any = None, call_id: int | str | None = None) -> dict:
        request_id = call_id if call_id is not None else next(self._ids)
        envelope: dict[str, Any] = {"jsonrpc": "2.0", "id": request_id, "method": method}
        if params is not None:
            envelope["params"] = params
        try:
            response = self._client.post(f"{self._base_url}/rpc", json=envelope)
        except httpx.HTTPError as exc:
            raise TransportError(f"rpc transport failure: {exc}") from exc
        if response.status_code != 200:
            raise TransportError(f"rpc transport failure: HTTP {response.status_code}")
        return response.json()

    def call(self, tool: str, arguments: Any, call_id: int | str | None = None) -> ToolResult:
        response = self.call_method("tools/call", {"name": tool, "arguments": arguments}, call_id=call_id)
        request_id = response.get("id")
        if "result" in response:
            return ToolResult(id=request_id, ok=True, value=response["result"])
        return ToolResult(id=request_id, ok=False, error=response.get("error"))

    def close(self) -> None:
        self._client.close()


__all__ = ["InProcessClient", "HttpRpcClient", "handle_request", "ToolRegistry"]
