"""
Weak associativity on T(h^-) for every homogeneous basis triple with
wt u + wt v + wt w <= max_weight, and on W for u, v of weight <= 2 acting
on the generator 1 (x) (1 (x) f).
"""

import json
from pathlib import Path

from shared.algebra import FrameSpace, basis_elements, check_weak_associativity
from shared.events import EventBus
from shared.module_w import WElement, check_module_associativity
from shared.runtime.case_wrapper import report_outcome
from shared.runtime.orchestrations import run_cases
from shared.runtime.suite_config import SuiteConfig

MANIFEST = json.loads((Path(__file__).parent / "suite.json").read_text())
NAME = MANIFEST["name"]
MODULE_WEIGHT = 2


def _label(u) -> str:
    return "".join(f"e{i + 1}({-n})" for mono in u.terms for i, n in mono) or "1"


def basis_triples(dim: int, max_weight: int):
    elems = basis_elements(dim, max_weight)
    for u in elems:
        for v in elems:
            for w in elems:
                if u.weight + v.weight + w.weight <= max_weight:
                    yield u, v, w


def build_cases(config: SuiteConfig):
    space = FrameSpace.orthonormal(config.dim)
    cases = []
    for u, v, w in basis_triples(config.dim, config.max_weight):
        name = f"fock/{_label(u)}|{_label(v)}|{_label(w)}"
        cases.append((name, lambda u=u, v=v, w=w:
                      report_outcome(check_weak_associativity(u, v, w, config.order, space))))

    if config.manifold is not None and config.function is not None:
        generator = WElement.generator(config.smooth_function())
        module_space = FrameSpace.orthonormal(config.chart().dim)
        elems = [e for e in basis_elements(module_space.dim, MODULE_WEIGHT) if e.weight >= 1]
        for u in elems:
            for v in elems:
                name = f"module/{_label(u)}|{_label(v)}|gen"
                cases.append((name, lambda u=u, v=v:
                              report_outcome(check_module_associativity(u, v, generator, config.order,
                                                                        module_space))))
    return cases


def run_suite(config: SuiteConfig, event_bus: EventBus | None = None) -> dict:
    return run_cases(NAME, build_cases(config), event_bus)
