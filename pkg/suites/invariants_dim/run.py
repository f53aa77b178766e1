"""
Invariant-tensor dimensions.

For a generic sample of plane rotations, e_1 +- i e_2 diagonalize the
action with weights +-1, so the invariant dimension in order m is the
number of +-1 sequences of length m summing to zero. Trivial holonomy
fixes everything: d^m.
"""

import json
from itertools import product
from pathlib import Path

import numpy as np

from shared.events import EventBus
from shared.geometry import TensorElement, holonomy_sample, invariant_tensors
from shared.geometry.covariant import MAX_DEPTH
from shared.geometry.holonomy import HolonomySample
from shared.module_w import restrict_check
from shared.runtime.case_wrapper import outcome
from shared.runtime.orchestrations import run_cases
from shared.runtime.suite_config import SuiteConfig

MANIFEST = json.loads((Path(__file__).parent / "suite.json").read_text())
NAME = MANIFEST["name"]
TRIVIAL_TOL = 1e-9
NESTED_LOOPS = 1


def expected_dimension(sample: HolonomySample, m: int) -> int:
    d = sample.dim
    if all(np.max(np.abs(a - np.eye(d))) < TRIVIAL_TOL for a in sample.matrices):
        return d ** m
    if d != 2:
        raise ValueError("weight count is only available for plane rotations")
    return sum(1 for signs in product((1, -1), repeat=m) if sum(signs) == 0)


def span_distance(tensor: TensorElement, basis: list[TensorElement], dim: int) -> float:
    """Distance from ``tensor`` to the span of an orthonormal basis."""
    vec = tensor.to_array(dim).reshape(-1)
    if not basis:
        return float(np.linalg.norm(vec))
    q = np.column_stack([b.to_array(dim).reshape(-1) for b in basis])
    return float(np.linalg.norm(vec - q @ (q.conj().T @ vec)))


def build_cases(config: SuiteConfig):
    chart = config.chart()
    sample = holonomy_sample(chart, steps=config.steps)
    top = min(config.order, MAX_DEPTH)
    cases = []

    for m in range(1, top + 1):
        def dimension(m=m):
            found = len(invariant_tensors(sample, m))
            expected = expected_dimension(sample, m)
            return outcome(found == expected, found=found, expected=expected)

        cases.append((f"{chart.name}/order-{m}", dimension))

    if top >= 2:
        metric = TensorElement.metric(chart.dim)

        def metric_word():
            err = span_distance(metric, invariant_tensors(sample, 2), chart.dim)
            return outcome(err < config.tol, err)

        cases.append((f"{chart.name}/metric-in-order-2", metric_word))

    def nested():
        small = sample.prefix(NESTED_LOOPS)
        checks = [restrict_check(sample, small, t) for t in invariant_tensors(sample, min(2, top))]
        grows = all(len(invariant_tensors(small, m)) >= len(invariant_tensors(sample, m))
                    for m in range(1, top + 1))
        return outcome(grows and all(c.consistent for c in checks), tensors=len(checks))

    cases.append((f"{chart.name}/restriction", nested))
    return cases


def run_suite(config: SuiteConfig, event_bus: EventBus | None = None) -> dict:
    return run_cases(NAME, build_cases(config), event_bus)
