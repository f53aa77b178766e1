"""
EventBus: ordering, subscribers, JSONL logs and replayed outcomes.

Run:
    python -m pytest tests/test_event_bus.py -v
"""

import json
import sys
import tempfile
import threading
import unittest
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(REPO_ROOT))

from shared.events.event_bus import EventBus  # noqa: E402
from shared.events.event_types import EventType  # noqa: E402
from shared.runtime.orchestrations import run_cases  # noqa: E402
from shared.runtime.case_wrapper import outcome  # noqa: E402


def _write_lines(tmp: str, lines: list[str]) -> str:
    path = Path(tmp) / "log.jsonl"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return str(path)


class TestEmit(unittest.TestCase):

    def setUp(self):
        self.bus = EventBus()

    def test_event_shape(self):
        event = self.bus.emit(EventType.CASE_STARTED, {"suite": "holonomy", "case": "torus/identity"})
        self.assertEqual(set(event), {"type", "data", "seq", "timestamp"})
        self.assertEqual(event["type"], "case_started")
        self.assertEqual(self.bus.get_events(), [event])

    def test_plain_string_type(self):
        self.bus.emit("custom_event", {"case": "x"})
        self.assertEqual(self.bus.get_events()[0]["type"], "custom_event")

    def test_timestamp_taken_from_data(self):
        self.bus.emit(EventType.CASE_PASSED, {"case": "x", "timestamp": 12.5})
        self.assertEqual(self.bus.get_events()[0]["timestamp"], 12.5)

    def test_seq_unique_across_threads(self):
        def burst():
            for _ in range(50):
                self.bus.emit(EventType.CASE_PASSED, {"case": "c"})

        threads = [threading.Thread(target=burst) for _ in range(4)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        self.assertEqual(sorted(e["seq"] for e in self.bus.get_events()), list(range(200)))

    def test_get_events_is_a_snapshot(self):
        self.bus.emit(EventType.SUITE_STARTED, {"suite": "a"})
        first = self.bus.get_events()
        self.bus.emit(EventType.SUITE_COMPLETED, {"suite": "a"})
        self.assertEqual(len(first), 1)
        self.bus.clear()
        self.assertEqual(self.bus.get_events(), [])

    def test_subscribers(self):
        received = []
        self.bus.subscribe(received.append)
        self.bus.emit(EventType.CASE_ERROR, {"case": "c", "error": "boom"})
        self.bus.unsubscribe(received.append)
        self.bus.emit(EventType.CASE_ERROR, {"case": "d"})
        self.assertEqual([e["data"]["case"] for e in received], ["c"])

    def test_faulty_subscriber_is_contained(self):
        def bad(event):
            raise RuntimeError("subscriber error")

        self.bus.subscribe(bad)
        self.bus.emit(EventType.SUITE_STARTED, {"suite": "a"})
        self.assertEqual(len(self.bus.get_events()), 1)


class TestLogAndReplay(unittest.TestCase):

    def test_no_log_by_default(self):
        self.assertIsNone(EventBus().log_path)

    def test_log_named_after_label(self):
        with tempfile.TemporaryDirectory() as tmp:
            bus = EventBus(log_dir=tmp, label="holonomy")
            bus.emit(EventType.SUITE_STARTED, {"suite": "holonomy", "cases": 3})
            self.assertTrue(Path(bus.log_path).name.startswith("holonomy_"))
            self.assertTrue(bus.log_path.endswith(".jsonl"))

    def test_round_trip(self):
        with tempfile.TemporaryDirectory() as tmp:
            bus = EventBus(log_dir=tmp)
            bus.emit(EventType.SUITE_STARTED, {"suite": "holonomy", "cases": 3})
            bus.emit(EventType.SUITE_COMPLETED, {"suite": "holonomy", "pass": 3})
            loaded = EventBus.load_replay(bus.log_path)
        self.assertEqual(loaded, bus.get_events())

    def test_unserializable_data_is_stringified(self):
        with tempfile.TemporaryDirectory() as tmp:
            bus = EventBus(log_dir=tmp)
            bus.emit(EventType.CASE_FAILED, {"case": "x", "details": {"value": complex(1, 2)}})
            loaded = EventBus.load_replay(bus.log_path)
        self.assertEqual(loaded[0]["data"]["details"]["value"], "(1+2j)")

    def test_blank_lines_skipped(self):
        lines = [
            json.dumps({"type": "case_started", "data": {"case": "a"}, "seq": 0, "timestamp": 1.0}),
            "",
            json.dumps({"type": "case_passed", "data": {"case": "a"}, "seq": 1, "timestamp": 2.0}),
        ]
        with tempfile.TemporaryDirectory() as tmp:
            loaded = EventBus.load_replay(_write_lines(tmp, lines))
        self.assertEqual([e["type"] for e in loaded], ["case_started", "case_passed"])

    def test_malformed_line_reports_line_number(self):
        lines = [
            json.dumps({"type": "case_started", "data": {}, "seq": 0, "timestamp": 1.0}),
            json.dumps({"type": "case_passed", "seq": "first"}),
        ]
        with tempfile.TemporaryDirectory() as tmp:
            with self.assertRaises(ValueError) as ctx:
                EventBus.load_replay(_write_lines(tmp, lines))
        self.assertIn(":2:", str(ctx.exception))


class TestOutcomes(unittest.TestCase):

    def test_summary_matches_report(self):
        bus = EventBus()
        cases = [
            ("good", lambda: outcome(True)),
            ("bad", lambda: outcome(False, 0.5)),
            ("broken", lambda: 1 / 0),
        ]
        report = run_cases("demo", cases, bus)
        self.assertEqual(EventBus.case_outcomes(bus.get_events()),
                         {"demo": {"good": "pass", "bad": "fail", "broken": "error"}})
        summary = EventBus.summarize(bus.get_events())["demo"]
        self.assertEqual(summary, {k: report["summary"][k] for k in ("pass", "fail", "error")})

    def test_lifecycle_events_ignored(self):
        events = [
            {"type": "suite_started", "data": {"suite": "s"}, "seq": 0, "timestamp": 0.0},
            {"type": "case_started", "data": {"suite": "s", "case": "a"}, "seq": 1, "timestamp": 0.0},
        ]
        self.assertEqual(EventBus.summarize(events), {})


if __name__ == "__main__":
    unittest.main(verbosity=2)
