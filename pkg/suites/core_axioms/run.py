"""
Core axioms: vacuum, creation, D-derivative, non-commutativity, normal form
and symmetrization, each checked exactly on the creation basis.
"""

import json
from pathlib import Path

from shared.algebra import (
    FockElement,
    FrameSpace,
    Mode,
    act_on_fock,
    basis_elements,
    check_creation,
    check_d_derivative,
    check_vacuum,
    commutativity_witness,
    mode_coefficient,
    sym_mode_coefficient,
    symmetrize,
)
from shared.algebra.fock import act_via_normal_form
from shared.algebra.vertex import CheckReport
from shared.events import EventBus
from shared.runtime.case_wrapper import outcome, report_outcome
from shared.runtime.orchestrations import run_cases
from shared.runtime.suite_config import SuiteConfig

MANIFEST = json.loads((Path(__file__).parent / "suite.json").read_text())
NAME = MANIFEST["name"]
POWERS = (-6, 6)
SYMMETRIZATION_WEIGHT = 3
NORMAL_FORM_WEIGHT = 3
MODE_LEVELS = range(-3, 4)


def _by_weight(dim: int, max_weight: int) -> dict[int, list[FockElement]]:
    out: dict[int, list[FockElement]] = {}
    for u in basis_elements(dim, max_weight):
        out.setdefault(u.weight, []).append(u)
    return out


def build_cases(config: SuiteConfig):
    space = FrameSpace.orthonormal(config.dim)
    groups = _by_weight(config.dim, config.max_weight)
    lo, hi = POWERS
    cases = []

    for wt, elems in groups.items():
        def vacuum(elems=elems):
            return report_outcome(CheckReport.merged(check_vacuum(v, lo, hi, space) for v in elems))

        def creation(elems=elems):
            return report_outcome(CheckReport.merged(check_creation(u, lo, space) for u in elems))

        cases.append((f"vacuum/wt={wt}", vacuum))
        cases.append((f"creation/wt={wt}", creation))

    for a, us in groups.items():
        for b, vs in groups.items():
            if a + b > config.max_weight:
                continue
            cases.append((
                f"d-derivative/wt=({a},{b})",
                lambda us=us, vs=vs: report_outcome(
                    CheckReport.merged(check_d_derivative(u, v, lo, hi, space) for u in us for v in vs)),
            ))

    if config.dim >= 2:
        def witness():
            u, v = FockElement.monomial((0, 1)), FockElement.monomial((1, 1))
            forward, backward = commutativity_witness(u, v, space)
            return outcome(forward != backward, forward=repr(forward), backward=repr(backward))

        cases.append(("non-commutativity", witness))

    def normal_form():
        report = CheckReport()
        for v in basis_elements(config.dim, min(NORMAL_FORM_WEIGHT, config.max_weight)):
            for level in MODE_LEVELS:
                for i in range(config.dim):
                    m = Mode.basis(i, level, config.dim)
                    report.record("normal-form", (i, level), act_via_normal_form(m, v, space),
                                  act_on_fock(m, v, space))
        return report_outcome(report)

    cases.append(("normal-form-action", normal_form))

    def symmetrization():
        report = CheckReport()
        elems = basis_elements(config.dim, min(SYMMETRIZATION_WEIGHT, config.max_weight))
        for u in elems:
            for v in elems:
                for p in range(lo, hi + 1):
                    lhs = symmetrize(mode_coefficient(u, v, p, space))
                    rhs = sym_mode_coefficient(symmetrize(u), symmetrize(v), p, space)
                    report.record("symmetrization", (p,), lhs, rhs)
        return report_outcome(report)

    cases.append(("symmetrization", symmetrization))
    return cases


def run_suite(config: SuiteConfig, event_bus: EventBus | None = None) -> dict:
    return run_cases(NAME, build_cases(config), event_bus)
