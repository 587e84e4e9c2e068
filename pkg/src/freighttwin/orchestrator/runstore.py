"""In-memory run store with an optional append-only JSON-lines journal.

Run ids are the first 16 hex digits of the canonical request hash plus a
monotonic per-hash counter suffix, so resubmitting the same request yields
reproducible, distinct ids. Completed runs are immutable.
"""

from __future__ import annotations

import threading
from typing import Any

from ..canonical import canonical_dumps

_TERMINAL = ("completed", "failed")


class RunStore:
    def __init__(self, journal_path: str | None = None):
        self._lock = threading.Lock()
        self._runs: dict[str, dict[str, Any]] = {}
        self._order: list[str] = []
        self._hash_counts: dict[str, int] = {}
        self._journal_path = journal_path

    def create(self, request_hash: str, request_doc: dict) -> str:
        with self._lock:
            count = self._hash_counts.get(request_hash, 0) + 1
            self._hash_counts[request_hash] = count
            run_id = f"{request_hash}-{count}"
            self._runs[run_id] = {
                "run_id": run_id,
                "status": "pending",
                "request": request_doc,
                "plan_id": None,
                "result": None,
                "explanation": None,
                "geojson": None,
                "error": None,
            }
            self._order.append(run_id)
            return run_id

    def mark_running(self, run_id: str) -> None:
        with self._lock:
            record = self._runs[run_id]
            if record["status"] == "pending":
                record["status"] = "running"

    def complete(
        self,
        run_id: str,
        plan_id: str,
        result_doc: dict,
        explanation: str,
        geojson: dict | None,
    ) -> None:
        self._finish(run_id, "completed", plan_id=plan_id, result=result_doc, explanation=explanation, geojson=geojson)

    def fail(self, run_id: str, error_doc: dict, plan_id: str | None = None, result_doc: dict | None = None) -> None:
        self._finish(run_id, "failed", plan_id=plan_id, result=result_doc, error=error_doc)

    def _finish(self, run_id: str, status: str, **fields: Any) -> None:
        with self._lock:
            record = self._runs[run_id]
            if record["status"] in _TERMINAL:
                raise RuntimeError(f"run {run_id} is already {record['status']}")
            record["status"] = status
            for key, value in fields.items():
                record[key] = value
            line = canonical_dumps(record) if self._journal_path else None
        if line is not None:
            with self._lock:
                with open(self._journal_path, "a", encoding="utf-8") as journal:
                    journal.write(line + "\n")

    def get(self, run_id: str) -> dict[str, Any] | None:
        with self._lock:
            record = self._runs.get(run_id)
            return dict(record) if record is not None else None

    def run_ids(self) -> list[str]:
        with self._lock:
            return list(self._order)
