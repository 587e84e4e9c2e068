"""Domain error taxonomy.

Every error that can cross the tool-protocol boundary derives from
:class:`FreightTwinError` and renders itself as a JSON payload via
:meth:`FreightTwinError.payload`, so protocol handlers never need
per-exception serialization code.
"""

from __future__ import annotations

from typing import Any


class FreightTwinError(Exception):
    """Base class; ``kind`` is the stable machine-readable error name."""

    kind = "Error"

    def payload(self) -> dict[str, Any]:
        return {"error": self.kind, "message": str(self)}


class ParseError(FreightTwinError):
    kind = "ParseError"

    def __init__(self, message: str, *, row: int | None = None, column: str | None = None):
        super().__init__(message)
        self.row = row
        self.column = column

    def payload(self) -> dict[str, Any]:
        data = super().payload()
        if self.row is not None:
            data["row"] = self.row
        if self.column is not None:
            data["column"] = self.column
        return data


class ValidationError(FreightTwinError):
    """Network invariant violations; carries the full sorted violation list."""

    kind = "ValidationError"

    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(v.message for v in self.violations)
        super().__init__(f"{len(self.violations)} violation(s): {lines}")

    def payload(self) -> dict[str, Any]:
        data = super().payload()
        data["violations"] = [
            {"code": v.code, "entity_id": v.entity_id, "message": v.message} for v in self.violations
        ]
        return data


class UnknownNodeError(FreightTwinError):
    kind = "UnknownNode"


class UnknownEdgeError(FreightTwinError):
    kind = "UnknownEdge"


class UnknownTransferError(FreightTwinError):
    kind = "UnknownTransfer"


class InvalidScenarioError(FreightTwinError):
    kind = "InvalidScenario"


class NoPathError(FreightTwinError):
    kind = "NoPath"

    def __init__(self, origin: int, destination: int):
        super().__init__(f"no route from node {origin} to node {destination} under the allowed modes")
        self.origin = origin
        self.destination = destination


class DeadlineInfeasibleError(FreightTwinError):
    kind = "DeadlineInfeasible"

    def __init__(self, deadline_hours: float, min_achievable_hours: float):
        super().__init__(
            f"no route meets the {deadline_hours} h deadline; "
            f"minimum achievable time is {min_achievable_hours} h"
        )
        self.deadline_hours = deadline_hours
        self.min_achievable_hours = min_achievable_hours

    def payload(self) -> dict[str, Any]:
        data = super().payload()
        data["deadline_hours"] = self.deadline_hours
        data["min_achievable_hours"] = self.min_achievable_hours
        return data


class CapacityInfeasibleError(FreightTwinError):
    kind = "CapacityInfeasible"

    def __init__(self, shortfall: int):
        super().__init__(f"path pool cannot carry all containers; shortfall {shortfall}")
        self.shortfall = shortfall

    def payload(self) -> dict[str, Any]:
        data = super().payload()
        data["shortfall"] = self.shortfall
        return data


class InconsistentPlanError(FreightTwinError):
    kind = "InconsistentPlan"

    def __init__(self, leg_index: int, field: str, expected: float, found: float):
        super().__init__(
            f"leg {leg_index}: recomputed {field} {expected} differs from plan value {found}"
        )
        self.leg_index = leg_index
        self.field = field
        self.expected = expected
        self.found = found

    def payload(self) -> dict[str, Any]:
        data = super().payload()
        data.update(
            {"leg_index": self.leg_index, "field": self.field, "expected": self.expected, "found": self.found}
        )
        return data


class DuplicateToolError(FreightTwinError):
    kind = "DuplicateTool"


class BindingError(FreightTwinError):
    kind = "BindingError"

    def __init__(self, placeholder: str, step_id: str, path: str, reason: str):
        super().__init__(f"binding ${{{placeholder}}} -> ({step_id}, {path}): {reason}")
        self.placeholder = placeholder
        self.step_id = step_id
        self.path = path

    def payload(self) -> dict[str, Any]:
        data = super().payload()
        data.update({"placeholder": self.placeholder, "step_id": self.step_id, "path": self.path})
        return data


class TransportError(FreightTwinError):
    kind = "TransportError"


class UnknownFixtureError(FreightTwinError):
    kind = "UnknownFixture"


class IncompleteResultError(FreightTwinError):
    kind = "IncompleteResult"


class InvalidBBoxError(FreightTwinError):
    kind = "InvalidBBox"


class EmptyLayersError(FreightTwinError):
    kind = "EmptyLayers"
