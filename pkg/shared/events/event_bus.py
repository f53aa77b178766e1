"""
Run-scoped event bus for suite progress.

Every emitted event is validated as a RunEvent, kept in memory in emission
order, handed to subscribers and, when a log directory is configured,
appended to ``<label>_<timestamp>.jsonl`` so a run can be replayed and its
case outcomes rebuilt without rerunning anything.
"""

import json
import threading
import time
from collections import Counter
from pathlib import Path
from typing import Any, Callable

from pydantic import BaseModel, ValidationError

from shared.events.event_types import CASE_OUTCOMES, EventType


class RunEvent(BaseModel):
    type: str
    data: dict[str, Any]
    seq: int
    timestamp: float


class EventBus:
    """Thread-safe pub/sub; seq numbers follow emission order across threads."""

    def __init__(self, log_dir: str | None = None, label: str = "run"):
        self._subscribers: list[Callable[[dict], None]] = []
        self._events: list[dict] = []
        self._lock = threading.Lock()
        self._log_path: Path | None = None
        if log_dir:
            root = Path(log_dir)
            root.mkdir(parents=True, exist_ok=True)
            self._log_path = root / f"{label}_{time.strftime('%Y%m%d_%H%M%S')}.jsonl"

    def subscribe(self, callback: Callable[[dict], None]):
        self._subscribers.append(callback)

    def unsubscribe(self, callback: Callable[[dict], None]):
        self._subscribers.remove(callback)

    def emit(self, event_type: EventType | str, data: dict) -> dict:
        kind = event_type.value if isinstance(event_type, EventType) else str(event_type)
        with self._lock:
            record = RunEvent(type=kind, data=data, seq=len(self._events),
                              timestamp=data.get("timestamp", time.time()))
            event = record.model_dump()
            self._events.append(event)
            if self._log_path:
                with self._log_path.open("a", encoding="utf-8") as f:
                    f.write(json.dumps(event, default=str) + "\n")

        # a broken subscriber must not abort the suite
        for cb in list(self._subscribers):
            try:
                cb(event)
            except Exception:
                pass
        return event

    def get_events(self) -> list[dict]:
        with self._lock:
            return list(self._events)

    def clear(self):
        with self._lock:
            self._events.clear()

    @property
    def log_path(self) -> str | None:
        return str(self._log_path) if self._log_path else None

    @staticmethod
    def load_replay(jsonl_path: str) -> list[dict]:
        """Read a JSONL log back; blank lines are skipped, malformed ones raise ValueError."""
        events = []
        with open(jsonl_path, "r", encoding="utf-8") as f:
            for lineno, line in enumerate(f, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    events.append(RunEvent.model_validate_json(line).model_dump())
                except ValidationError as e:
                    raise ValueError(f"{jsonl_path}:{lineno}: not a run event ({e.error_count()} errors)") from e
        return events

    @staticmethod
    def case_outcomes(events: list[dict]) -> dict[str, dict[str, str]]:
        """suite -> case -> pass/fail/error, from the outcome events of a run."""
        out: dict[str, dict[str, str]] = {}
        for e in sorted(events, key=lambda e: e["seq"]):
            status = CASE_OUTCOMES.get(e["type"])
            if status is None:
                continue
            data = e["data"]
            out.setdefault(data.get("suite", ""), {})[data.get("case", "")] = status
        return out

    @staticmethod
    def summarize(events: list[dict]) -> dict[str, dict[str, int]]:
        """Per-suite pass/fail/error counts; matches the summary block of a report."""
        out = {}
        for suite, cases in EventBus.case_outcomes(events).items():
            counts = Counter(cases.values())
            out[suite] = {k: counts.get(k, 0) for k in ("pass", "fail", "error")}
        return out
