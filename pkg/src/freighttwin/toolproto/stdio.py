"""Newline-delimited JSON-RPC over stdio (the MCP transport convention)."""

from __future__ import annotations

import sys
from typing import IO

from ..canonical import canonical_dumps
from .jsonrpc import handle_text
from .registry import ToolRegistry


def serve_stdio(registry: ToolRegistry, stdin: IO[str] | None = None, stdout: IO[str] | None = None) -> int:
    """Serve one JSON-RPC request per input line until EOF.

    Returns the number of requests handled; blank lines are ignored.
    """
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    handled = 0
    for line in stdin:
        line = line.strip()
        if not line:
            continue
        response = handle_text(registry, line)
        stdout.write(canonical_dumps(response) + "\n")
        stdout.flush()
        handled += 1
    return handled
