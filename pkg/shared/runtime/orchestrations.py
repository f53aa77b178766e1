"""
Running a suite's cases and assembling the report.

Cases are independent, so they run on a thread pool sized by the engine
config; the report itself is assembled on the calling thread, in canonical
(sorted by case name) order.
"""

import sys
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable

from shared.events import EventBus, EventType
from shared.runtime.case_wrapper import CaseOutcome, CaseResult, InstrumentedCase
from shared.runtime.engine_config import get_engine_config
from shared.runtime.suite_config import REPORT_VERSION

CaseSpec = tuple[str, Callable[[], CaseOutcome]]


def summarize(results: Iterable[CaseResult]) -> dict:
    counts = {"total": 0, "pass": 0, "fail": 0, "error": 0}
    for r in results:
        counts["total"] += 1
        counts[r.status] += 1
    return counts


def build_report(suite: str, results: list[CaseResult]) -> dict:
    ordered = sorted(results, key=lambda r: r.name)
    return {
        "suite": suite,
        "version": REPORT_VERSION,
        "cases": [r.to_dict() for r in ordered],
        "summary": summarize(ordered),
    }


def run_cases(suite: str, cases: list[CaseSpec], event_bus: EventBus | None = None,
              max_workers: int | None = None) -> dict:
    names = [name for name, _ in cases]
    if len(set(names)) != len(names):
        raise ValueError(f"suite {suite} has duplicate case names")
    workers = max_workers if max_workers is not None else get_engine_config().max_workers

    if event_bus:
        event_bus.emit(EventType.SUITE_STARTED, {"suite": suite, "cases": len(cases), "timestamp": time.time()})
    print(f"[runner] {suite}: {len(cases)} case(s) on {workers} worker(s)", file=sys.stderr)

    wrapped = [InstrumentedCase(suite, name, fn, event_bus) for name, fn in cases]
    if workers <= 1 or len(wrapped) <= 1:
        results = [case.run() for case in wrapped]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda case: case.run(), wrapped))

    report = build_report(suite, results)
    if event_bus:
        event_bus.emit(EventType.SUITE_COMPLETED, {"suite": suite, **report["summary"], "timestamp": time.time()})
    s = report["summary"]
    print(f"[runner] {suite}: {s['pass']} passed, {s['fail']} failed, {s['error']} errored", file=sys.stderr)
    return report
