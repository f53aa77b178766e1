"""
Vertex algebra verification pack: command-line entry point.

Each command runs one verification suite and prints a JSON report:

    python app.py verify-core --max-weight 4
    python app.py laplacian-check --manifold s2 --function "cos(theta)"
    python app.py associativity --config runs/assoc.json --out report.json

Exit codes: 0 when every case passes, 1 when any case fails or errors,
2 when the configuration is invalid.
"""

import argparse
import importlib
import json
import sys
import time
from pathlib import Path

from shared.events import EventBus
from shared.geometry import PRESET_NAMES
from shared.runtime.engine_config import get_engine_config
from shared.runtime.suite_config import ConfigError, load_suite_config

SUITES_DIR = Path(__file__).parent / "suites"

EXIT_OK, EXIT_FAILED, EXIT_CONFIG = 0, 1, 2


def _load_registry() -> list[dict]:
    registry = []
    for manifest in sorted(SUITES_DIR.glob("*/suite.json")):
        info = json.loads(manifest.read_text(encoding="utf-8"))
        info["module"] = f"suites.{manifest.parent.name}.run"
        registry.append(info)
    return registry


# Registry of available suites, keyed by CLI command
SUITE_REGISTRY = {info["command"]: info for info in _load_registry()}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="app.py", description="Run a verification suite.")
    sub = parser.add_subparsers(dest="command", required=True)
    for command, info in sorted(SUITE_REGISTRY.items()):
        p = sub.add_parser(command, help=info["title"], description=info["description"])
        p.add_argument("--manifold", help=f"one of {', '.join(PRESET_NAMES)}")
        p.add_argument("--function", help="function expression in the chart coordinates")
        p.add_argument("--dim", type=int, help="frame dimension for the algebra")
        p.add_argument("--max-weight", dest="max_weight", type=int, help="largest creation weight")
        p.add_argument("--order", type=int, help="truncation order K")
        p.add_argument("--tol", type=float, help="error tolerance")
        p.add_argument("--steps", type=int, help="RK4 steps per curve")
        p.add_argument("--points", type=int, help="number of evaluation points")
        p.add_argument("--out", help="write the report here instead of stdout")
        p.add_argument("--config", help="JSON file with suite settings")
    return parser


def _overrides(args: argparse.Namespace) -> dict:
    keys = ("manifold", "function", "dim", "max_weight", "order", "tol", "steps", "points", "out")
    return {k: getattr(args, k) for k in keys}


def run_command(command: str, config_file: str | None = None, overrides: dict | None = None,
                event_bus: EventBus | None = None, quiet: bool = False) -> tuple[int, dict]:
    info = SUITE_REGISTRY[command]
    try:
        config = load_suite_config(info["name"], info.get("defaults"), config_file, overrides)
    except ConfigError as e:
        print(f"[config] {e}", file=sys.stderr)
        return EXIT_CONFIG, {"suite": info["name"], "error": str(e)}

    if event_bus is None:
        event_bus = EventBus(log_dir=get_engine_config().run_log_dir or None, label=info["name"])
    try:
        mod = importlib.import_module(info["module"])
        report = mod.run_suite(config, event_bus)
    except ConfigError as e:
        print(f"[config] {e}", file=sys.stderr)
        return EXIT_CONFIG, {"suite": info["name"], "error": str(e)}

    report["timestamp"] = time.strftime("%Y-%m-%dT%H:%M:%S")
    s = report["summary"]
    code = EXIT_OK if s["fail"] == 0 and s["error"] == 0 else EXIT_FAILED

    text = json.dumps(report, indent=2, default=str)
    if config.out:
        Path(config.out).write_text(text + "\n", encoding="utf-8")
        print(f"[runner] report written to {config.out}", file=sys.stderr)
    elif not quiet:
        print(text)
    if event_bus.log_path:
        print(f"[runner] events logged to {event_bus.log_path}", file=sys.stderr)
    return code, report


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    code, _ = run_command(args.command, args.config, _overrides(args))
    return code


if __name__ == "__main__":
    sys.exit(main())
