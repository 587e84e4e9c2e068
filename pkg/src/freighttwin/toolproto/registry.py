"""Tool registry and in-process dispatch.

A registry maps unique snake_case tool names to (descriptor, handler)
pairs. Arguments are schema-validated before dispatch and handler output
is schema-validated before return, so a malformed call can never reach an
engine and a buggy handler can never leak a malformed result.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Callable

import jsonschema

from ..errors import DuplicateToolError, FreightTwinError

PARSE_ERROR = -32700
INVALID_REQUEST = -32600
METHOD_NOT_FOUND = -32601
INVALID_PARAMS = -32602
TOOL_ERROR = -32000

_NAME_RE = re.compile(r"^[a-z][a-z0-9_]*$")
_VALIDATOR = jsonschema.Draft202012Validator


@dataclass(frozen=True)
class ToolDescriptor:
    name: str
    description: str
    input_schema: dict
    output_schema: dict


@dataclass(frozen=True)
class ToolCall:
    id: int | str
    tool: str
    arguments: Any


@dataclass(frozen=True)
class ToolResult:
    id: int | str
    ok: bool
    value: Any = None
    error: dict | None = None


def descriptor_to_dict(descriptor: ToolDescriptor) -> dict:
    return {
        "name": descriptor.name,
        "description": descriptor.description,
        "input_schema": descriptor.input_schema,
        "output_schema": descriptor.output_schema,
    }


def result_to_dict(result: ToolResult) -> dict:
    doc: dict[str, Any] = {"id": result.id, "ok": result.ok}
    if result.ok:
        doc["value"] = result.value
    else:
        doc["error"] = result.error
    return doc


class ToolRegistry:
    def __init__(self) -> None:
        self._tools: dict[str, tuple[ToolDescriptor, Callable[[Any], Any]]] = {}

    def register(self, descriptor: ToolDescriptor, handler: Callable[[Any], Any]) -> None:
        if not _NAME_RE.match(descriptor.name):
            raise ValueError(f"tool name must be lowercase snake_case, got {descriptor.name!r}")
        if descriptor.name in self._tools:
            raise DuplicateToolError(f"tool {descriptor.name!r} already registered")
        _VALIDATOR.check_schema(descriptor.input_schema)
        _VALIDATOR.check_schema(descriptor.output_schema)
        self._tools[descriptor.name] = (descriptor, handler)

    def list_descriptors(self) -> list[ToolDescriptor]:
        return [self._tools[name][0] for name in sorted(self._tools)]

    def names(self) -> list[str]:
        return sorted(self._tools)

    def call(self, call: ToolCall) -> ToolResult:
        entry = self._tools.get(call.tool)
        if entry is None:
            return ToolResult(
                id=call.id,
                ok=False,
                error={"code": METHOD_NOT_FOUND, "message": f"unknown tool {call.tool!r}"},
            )
        descriptor, handler = entry
        try:
            jsonschema.validate(call.arguments, descriptor.input_schema, cls=_VALIDATOR)
        except jsonschema.ValidationError as exc:
            return ToolResult(
                id=call.id,
                ok=False,
                error={"code": INVALID_PARAMS, "message": f"invalid arguments: {exc.message}"},
            )
        try:
            value = handler(call.arguments)
        except FreightTwinError as exc:
            return ToolResult(
                id=call.id,
                ok=False,
                error={"code": TOOL_ERROR, "message": str(exc), "data": exc.payload()},
            )
        except Exception as exc:  # handler bug: a protocol error, never a crash
            return ToolResult(
                id=call.id,
                ok=False,
                error={"code": TOOL_ERROR, "message": f"internal tool error: {exc}", "data": {"error": "Internal"}},
            )
        try:
            jsonschema.validate(value, descriptor.output_schema, cls=_VALIDATOR)
        except jsonschema.ValidationError as exc:
            return ToolResult(
                id=call.id,
                ok=False,
                error={
                    "code": TOOL_ERROR,
                    "message": f"tool output failed schema validation: {exc.message}",
                    "data": {"error": "Internal"},
                },
            )
        return ToolResult(id=call.id, ok=True, value=value)
