"""Desk-scale digital twin for intermodal freight logistics.

Core engines (network model, deadline-constrained routing, Monte Carlo
validation, geospatial export) are exposed as tools behind an "mcp-lite"
JSON-RPC protocol and driven by a deterministic workflow orchestrator
with an HTTP gateway.
"""

__version__ = "0.1.0"

SERVER_NAME = "freighttwin"
PROTOCOL_VERSION = "mcp-lite/1"
