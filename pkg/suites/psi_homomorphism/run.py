"""
psi(X (x) Y) = psi(X) psi(Y) on the selected manifold.

X runs over frame words of order <= order; Y over the invariant tensors of
orders 1..order found from the sampled holonomy (on the sphere and the
half-plane that leaves the metric word in order 2).
"""

import json
from pathlib import Path

from shared.events import EventBus
from shared.geometry import TensorElement, basis_words, check_psi_homomorphism, holonomy_sample, invariant_tensors
from shared.geometry.covariant import MAX_DEPTH
from shared.runtime.case_wrapper import outcome
from shared.runtime.orchestrations import run_cases
from shared.runtime.suite_config import SuiteConfig

MANIFEST = json.loads((Path(__file__).parent / "suite.json").read_text())
NAME = MANIFEST["name"]


def _word_label(word: tuple[int, ...]) -> str:
    return "(x)".join(f"e{i + 1}" for i in word) or "1"


def build_cases(config: SuiteConfig):
    chart = config.chart()
    f = config.smooth_function()
    grid = config.evaluation_points()
    sample = holonomy_sample(chart, steps=config.steps)
    top = min(config.order, MAX_DEPTH // 2)

    parallel = []
    for m in range(1, top + 1):
        for k, y in enumerate(invariant_tensors(sample, m)):
            parallel.append((f"inv{m}.{k}", y))

    cases = []
    for m in range(top + 1):
        for word in basis_words(chart.dim, m):
            x = TensorElement.word(*word)
            for label, y in parallel:
                def check(x=x, y=y):
                    err = check_psi_homomorphism(x, y, f, chart, grid, sample)
                    return outcome(err < config.tol, err)

                cases.append((f"{chart.name}/X={_word_label(word)}/Y={label}", check))
    return cases


def run_suite(config: SuiteConfig, event_bus: EventBus | None = None) -> dict:
    return run_cases(NAME, build_cases(config), event_bus)
