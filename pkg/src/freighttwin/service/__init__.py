"""FastAPI service wrapping the core engines."""

from .app import DEFAULT_PORT, JOURNAL_ENV, PORT_ENV, create_app, gateway_port

__all__ = ["create_app", "gateway_port", "DEFAULT_PORT", "JOURNAL_ENV", "PORT_ENV"]
