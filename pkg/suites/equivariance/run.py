"""
Equivariance of the mode coefficients under an exact rational rotation,
and invariance of -sum_i e_i(-1)e_i(-1)1 under the sampled holonomy.
"""

import json
from fractions import Fraction
from pathlib import Path

from shared.algebra import FrameSpace, basis_elements, check_equivariance, fock_fixed_by, metric_inverse_element
from shared.algebra.space import as_matrix
from shared.algebra.vertex import CheckReport
from shared.events import EventBus
from shared.geometry import holonomy_sample
from shared.runtime.case_wrapper import outcome, report_outcome
from shared.runtime.orchestrations import run_cases
from shared.runtime.suite_config import SuiteConfig

MANIFEST = json.loads((Path(__file__).parent / "suite.json").read_text())
NAME = MANIFEST["name"]
POWERS = (-6, 6)


def rational_rotation(dim: int) -> list:
    """Rotation by (3/5, 4/5) in the first two frame directions."""
    c, s = Fraction(3, 5), Fraction(4, 5)
    rows = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    if dim >= 2:
        rows[0][0], rows[0][1], rows[1][0], rows[1][1] = c, -s, s, c
    return as_matrix(rows)


def build_cases(config: SuiteConfig):
    space = FrameSpace.orthonormal(config.dim)
    a = rational_rotation(config.dim)
    groups: dict[int, list] = {}
    for u in basis_elements(config.dim, config.max_weight):
        groups.setdefault(u.weight, []).append(u)
    lo, hi = POWERS
    cases = []
    for wu, us in groups.items():
        for wv, vs in groups.items():
            def check(us=us, vs=vs):
                return report_outcome(CheckReport.merged(
                    check_equivariance(a, u, v, lo, hi, space) for u in us for v in vs))

            cases.append((f"rotation/wt=({wu},{wv})", check))

    if config.manifold is not None:
        def holonomy_invariance():
            chart = config.chart()
            sample = holonomy_sample(chart, steps=config.steps)
            u = metric_inverse_element(1, 1, FrameSpace.orthonormal(chart.dim)).scale(-1)
            return outcome(fock_fixed_by(u, sample.matrices, config.tol), manifold=chart.name,
                           loops=len(sample.matrices))

        cases.append((f"holonomy/{config.manifold}", holonomy_invariance))
    return cases


def run_suite(config: SuiteConfig, event_bus: EventBus | None = None) -> dict:
    return run_cases(NAME, build_cases(config), event_bus)
