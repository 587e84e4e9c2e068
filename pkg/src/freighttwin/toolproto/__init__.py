"""MCP-style tool protocol: registry, JSON-RPC server, transports, clients."""

from .builtin import build_default_registry
from .client import HttpRpcClient, InProcessClient
from .jsonrpc import handle_request, handle_text, initialize_result
from .registry import (
    INVALID_PARAMS,
    INVALID_REQUEST,
    METHOD_NOT_FOUND,
    PARSE_ERROR,
    TOOL_ERROR,
    ToolCall,
    ToolDescriptor,
    ToolRegistry,
    ToolResult,
    descriptor_to_dict,
    result_to_dict,
)
from .stdio import serve_stdio

__all__ = [
    "build_default_registry",
    "HttpRpcClient",
    "InProcessClient",
    "handle_request",
    "handle_text",
    "initialize_result",
    "serve_stdio",
    "ToolCall",
    "ToolDescriptor",
    "ToolRegistry",
    "ToolResult",
    "descriptor_to_dict",
    "result_to_dict",
    "PARSE_ERROR",
    "INVALID_REQUEST",
    "METHOD_NOT_FOUND",
    "INVALID_PARAMS",
    "TOOL_ERROR",
]
