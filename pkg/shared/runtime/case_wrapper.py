"""
Instrumented verification cases.

A case is a named callable returning a CaseOutcome. The wrapper emits
lifecycle events through the shared event bus and turns any exception
raised inside the case into an ``error`` result, so one broken case never
takes the suite down.
"""

import sys
import time
import traceback
from dataclasses import dataclass, field
from typing import Any, Callable

from shared.events import EventBus, EventType


@dataclass(frozen=True)
class CaseOutcome:
    passed: bool
    max_error: float | None = None
    details: dict = field(default_factory=dict)


@dataclass(frozen=True)
class CaseResult:
    name: str
    status: str
    max_error: float | None
    details: dict

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "max_error": self.max_error, "details": self.details}


def outcome(passed: bool, max_error: float | None = None, **details: Any) -> CaseOutcome:
    return CaseOutcome(bool(passed), None if max_error is None else float(max_error), details)


def report_outcome(report) -> CaseOutcome:
    """A CheckReport from the algebra layer as a case outcome."""
    return CaseOutcome(report.passed, None, report.to_dict())


class InstrumentedCase:
    """Wraps a case callable to emit trace events."""

    def __init__(self, suite: str, name: str, fn: Callable[[], CaseOutcome], event_bus: EventBus | None = None):
        self.suite = suite
        self.name = name
        self._fn = fn
        self._bus = event_bus

    def _emit(self, event_type: EventType, **data):
        if self._bus:
            self._bus.emit(event_type, {"suite": self.suite, "case": self.name, "timestamp": time.time(), **data})

    def run(self) -> CaseResult:
        self._emit(EventType.CASE_STARTED)
        start = time.perf_counter()
        try:
            result = self._fn()
        except Exception as e:
            message = f"{type(e).__name__}: {e}"
            print(f"[{self.suite}] {self.name} raised {message}", file=sys.stderr)
            self._emit(EventType.CASE_ERROR, error=message, traceback=traceback.format_exc(limit=5),
                       elapsed_s=time.perf_counter() - start)
            return CaseResult(self.name, "error", None, {"error": message})

        # wall time goes to the event stream only; reports stay deterministic
        elapsed = time.perf_counter() - start
        status = "pass" if result.passed else "fail"
        self._emit(EventType.CASE_PASSED if result.passed else EventType.CASE_FAILED,
                   max_error=result.max_error, elapsed_s=elapsed)
        if not result.passed:
            print(f"[{self.suite}] {self.name} failed", file=sys.stderr)
        return CaseResult(self.name, status, result.max_error, result.details)
