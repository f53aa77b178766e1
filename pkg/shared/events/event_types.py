"""Event types emitted by suites and the case runner."""

from enum import Enum


class EventType(str, Enum):
    SUITE_STARTED = "suite_started"
    CASE_STARTED = "case_started"
    CASE_PASSED = "case_passed"
    CASE_FAILED = "case_failed"
    CASE_ERROR = "case_error"
    SUITE_COMPLETED = "suite_completed"


CASE_OUTCOMES = {
    EventType.CASE_PASSED.value: "pass",
    EventType.CASE_FAILED.value: "fail",
    EventType.CASE_ERROR.value: "error",
}
