"""
Moving parallel bottom words across the balanced tensor product.

W is kept free: (word) (x) f and 1 (x) psi(word) f are different elements
until reduce_bottom rewrites the first into the second. Only whole words
are moved, and only once their homogeneous part certifies as parallel.
"""

from dataclasses import dataclass, field

import numpy as np

from shared.algebra.scalars import ONE, ZERO, Scalar, to_complex
from shared.geometry.charts import Chart
from shared.geometry.covariant import Method
from shared.geometry.holonomy import Certification, HolonomySample, certify_parallel
from shared.geometry.psi import psi_apply
from shared.geometry.tensors import TensorElement
from shared.module_w.elements import WElement, WState
from shared.module_w.errors import UnreducedElementError


@dataclass(frozen=True)
class Reduction:
    element: WElement
    irreducible: tuple[WState, ...] = ()
    certifications: dict = field(default_factory=dict)

    @property
    def complete(self) -> bool:
        return not self.irreducible


def reduce_bottom_report(w: WElement, sample: HolonomySample, chart: Chart,
                         method: Method = "auto") -> Reduction:
    groups: dict[tuple, dict] = {}
    for (mono, word, fn), c in w.terms.items():
        groups.setdefault((mono, fn), {})[word] = c

    out: dict[WState, Scalar] = {}
    irreducible: list[WState] = []
    certs: dict = {}
    for (mono, fn), words in groups.items():
        tensor = TensorElement({word: c for word, c in words.items() if word})
        if () in words:
            key = (mono, (), fn)
            out[key] = out.get(key, ZERO) + words[()]
        for order, component in tensor.homogeneous_components().items():
            cert: Certification = certify_parallel(component, chart, sample)
            certs[(mono, fn.name, order)] = cert
            if cert.parallel:
                key = (mono, (), psi_apply(component, fn, chart, method))
                out[key] = out.get(key, ZERO) + ONE
                continue
            for word, c in words.items():
                if len(word) == order:
                    out[(mono, word, fn)] = c
                    irreducible.append((mono, word, fn))
    return Reduction(WElement(out), tuple(irreducible), certs)


def reduce_bottom(w: WElement, sample: HolonomySample, chart: Chart, method: Method = "auto") -> WElement:
    return reduce_bottom_report(w, sample, chart, method).element


def _describe(state: WState, c: Scalar) -> str:
    return repr(WElement({state: c}))


def evaluate_W(w: WElement, x, chart: Chart) -> complex:
    """Value at x of a fully reduced element, read as a function."""
    x = np.asarray(x, dtype=float)
    chart.check_point(x)
    total = 0j
    for (mono, word, fn), c in w.terms.items():
        if mono or word:
            raise UnreducedElementError(f"cannot evaluate unreduced term {_describe((mono, word, fn), c)}")
        total += to_complex(c) * fn(x)
    return total

