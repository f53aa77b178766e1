"""
End-to-end validator: runs every registered suite with its defaults.

All suites share one event bus; each report's counts are checked against
the counts rebuilt from that bus, so a report that drops a case is caught.

Usage:
    python validate_suites.py                 # all suites
    python validate_suites.py holonomy        # selected commands only

For the unit test suite run:
    python -m pytest tests/ -v
"""

import sys
import time

from app import EXIT_FAILED, SUITE_REGISTRY, run_command
from shared.events import EventBus
from shared.runtime import get_engine_config

SEPARATOR = "=" * 70


def main(argv: list[str]) -> int:
    commands = argv or sorted(SUITE_REGISTRY)
    unknown = [c for c in commands if c not in SUITE_REGISTRY]
    if unknown:
        print(f"Unknown suite command(s): {', '.join(unknown)}")
        return 2

    bus = EventBus(log_dir=get_engine_config().run_log_dir or None, label="validate")
    rows = []
    for command in commands:
        print(f"\n{SEPARATOR}\n  {SUITE_REGISTRY[command]['title']} ({command})\n{SEPARATOR}")
        start = time.time()
        code, report = run_command(command, event_bus=bus, quiet=True)
        rows.append((command, code, report.get("summary", {}), time.time() - start))

    replayed = EventBus.summarize(bus.get_events())
    print(f"\n{SEPARATOR}\n  SUMMARY\n{SEPARATOR}")
    worst = 0
    for command, code, summary, elapsed in rows:
        suite = SUITE_REGISTRY[command]["name"]
        if summary and replayed.get(suite) != {k: summary[k] for k in ("pass", "fail", "error")}:
            print(f"[validate] {command}: report counts disagree with events {replayed.get(suite)}")
            code = max(code, EXIT_FAILED)
        status = {0: "PASS", 1: "FAIL", 2: "CONFIG"}.get(code, "?")
        counts = f"{summary.get('pass', 0)}/{summary.get('total', 0)} passed" if summary else "no report"
        print(f"  {status:<7} {command:<18} {counts:<20} {elapsed:6.1f}s")
        worst = max(worst, code)
    if bus.log_path:
        print(f"[validate] events logged to {bus.log_path}")
    return worst


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
