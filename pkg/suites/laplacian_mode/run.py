"""
The Laplacian read off the induced module.

The reduced x^-2 coefficient is computed once; each evaluation point is
then its own case. Certification only needs the holonomy sample to fix the
metric to roundoff, so the manifest runs it with a short RK4 step count.
"""

import json
import sys
import time
from pathlib import Path

from shared.algebra import FrameSpace, basis_elements
from shared.algebra.vertex import CheckReport
from shared.events import EventBus
from shared.geometry import holonomy_sample, laplacian
from shared.module_w import (
    WElement,
    check_mode_identity,
    check_restriction,
    evaluate_W,
    laplacian_mode_element,
)
from shared.runtime.case_wrapper import outcome, report_outcome
from shared.runtime.orchestrations import run_cases
from shared.runtime.suite_config import SuiteConfig

MANIFEST = json.loads((Path(__file__).parent / "suite.json").read_text())
NAME = MANIFEST["name"]
RESTRICTION_WEIGHT = 2
RESTRICTION_POWERS = (-6, 6)


def build_cases(config: SuiteConfig):
    chart = config.chart()
    f = config.smooth_function()

    start = time.perf_counter()
    sample = holonomy_sample(chart, steps=config.steps)
    sampled = time.perf_counter()
    reduction, identity = laplacian_mode_element(f, chart, sample)
    print(f"[{NAME}] holonomy sample {sampled - start:.2f}s ({config.steps} steps), "
          f"reduction {time.perf_counter() - sampled:.2f}s", file=sys.stderr)

    space = FrameSpace.orthonormal(chart.dim)
    cases = []

    for k, x in enumerate(config.evaluation_points()):
        def point(x=x):
            lhs = evaluate_W(reduction.element, x, chart)
            rhs = laplacian(f, chart, x)
            err = abs(lhs - rhs)
            return outcome(err < config.tol and identity, err, point=list(x),
                           lhs=[lhs.real, lhs.imag], rhs=[rhs.real, rhs.imag])

        cases.append((f"point[{k:02d}]", point))

    def mode_identity():
        elems = basis_elements(space.dim, config.max_weight)
        return report_outcome(CheckReport.merged(
            check_mode_identity(WElement.embed(v, f), space, config.max_weight) for v in elems))

    cases.append(("mode-identity", mode_identity))

    def restriction():
        elems = basis_elements(space.dim, RESTRICTION_WEIGHT)
        lo, hi = RESTRICTION_POWERS
        return report_outcome(CheckReport.merged(
            check_restriction(u, v, lo, hi, space, f) for u in elems for v in elems))

    cases.append(("restriction", restriction))
    return cases


def run_suite(config: SuiteConfig, event_bus: EventBus | None = None) -> dict:
    return run_cases(NAME, build_cases(config), event_bus)
