"""
Vertex operators of the invariant subalgebra on W, and the exact checks
that are run against them.

Y_W uses the same normal-ordered field formula as T(h^-); the only change
is the backend, on which zero modes are no longer zero.
"""

from dataclasses import dataclass
from typing import Mapping

from shared.algebra.fields import field_coefficient
from shared.algebra.fock import FockElement, fock_fixed_by
from shared.algebra.modes import Mode
from shared.algebra.space import FrameSpace
from shared.algebra.vertex import CheckReport, vertex_operator, weak_associativity
from shared.geometry.functions import SmoothFunction
from shared.geometry.holonomy import HolonomySample
from shared.module_w.elements import WBackend, WElement, w_act_mode
from shared.module_w.errors import InvarianceError


MODE_IDENTITY_DEPTH = 6


@dataclass(frozen=True)
class WLaurent:
    """Coefficients of x^p on W for p in ``declared_range`` (inclusive)."""

    coeffs: Mapping[int, WElement]
    declared_range: tuple[int, int]

    def __getitem__(self, p: int) -> WElement:
        lo, hi = self.declared_range
        if not lo <= p <= hi:
            raise KeyError(f"power {p} outside declared range {self.declared_range}")
        return self.coeffs.get(p, WElement.zero())

    def nonzero_powers(self) -> list[int]:
        return sorted(p for p, c in self.coeffs.items() if c)


def _require_invariant(u: FockElement, sample: HolonomySample | None, tol: float):
    if sample is None:
        raise InvarianceError("strict mode needs a holonomy sample to certify u")
    if not fock_fixed_by(u, sample.matrices, tol):
        raise InvarianceError(f"{u!r} is not fixed by the sampled holonomy of {sample.chart_name}")


def w_mode_coefficient(u: FockElement, w: WElement, p: int, space: FrameSpace) -> WElement:
    """Coefficient of x^p in Y_W(u, x)w, no invariance check."""
    return WElement(field_coefficient(WBackend(space), u.terms, w.terms, p))


def vertex_operator_W(u: FockElement, w: WElement, pmin: int, pmax: int, space: FrameSpace,
                      sample: HolonomySample | None = None, strict: bool = True,
                      tol: float = 1e-6) -> WLaurent:
    if pmin > pmax:
        raise ValueError(f"empty power window [{pmin}, {pmax}]")
    if strict:
        _require_invariant(u, sample, tol)
    coeffs = {}
    for p in range(pmin, pmax + 1):
        c = w_mode_coefficient(u, w, p, space)
        if c:
            coeffs[p] = c
    return WLaurent(coeffs, (pmin, pmax))


def mode_identity_terms(index: int, w: WElement, space: FrameSpace,
                        depth: int = MODE_IDENTITY_DEPTH) -> WElement:
    """2 sum_{k=1..depth} e(-k)e(k)w + e(0)e(0)w for e = e_index."""
    dim = space.dim
    total = WElement.zero()
    for k in range(1, depth + 1):
        inner = w_act_mode(Mode.basis(index, k, dim), w, space)
        if inner:
            total = total + w_act_mode(Mode.basis(index, -k, dim), inner, space).scale(2)
    zero = Mode.basis(index, 0, dim)
    return total + w_act_mode(zero, w_act_mode(zero, w, space), space)


def check_mode_identity(w: WElement, space: FrameSpace, depth: int = MODE_IDENTITY_DEPTH,
                        index: int | None = None) -> CheckReport:
    """x^-2 coefficient of :e_i(x)e_i(x): against the explicit mode sum, for one i or all."""
    report = CheckReport()
    top = max(w.fock_weights(), default=0)
    if top > depth:
        raise ValueError(f"element of Fock weight {top} needs depth >= {top}")
    for i in (range(space.dim) if index is None else (index,)):
        u = FockElement.monomial((i, 1), (i, 1))
        lhs = w_mode_coefficient(u, w, -2, space)
        report.record(f"mode-identity[e{i + 1}]", (-2,), lhs, mode_identity_terms(i, w, space, depth))
    return report


def check_module_associativity(u: FockElement, v: FockElement, w: WElement, order: int,
                               space: FrameSpace) -> CheckReport:
    """Weak associativity of Y_W with bottom words kept unreduced.

    Mismatch powers are (output weight, power of x1 - x2, power of x2).
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    backend = WBackend(space)
    report = CheckReport()
    for uc in u.homogeneous_components().values():
        for vc in v.homogeneous_components().values():
            for wt, wc in w.homogeneous_components().items():
                weak_associativity(backend, uc, vc, wc.terms, wt, order, space, WElement, report)
    return report


def check_restriction(u: FockElement, v: FockElement, pmin: int, pmax: int, space: FrameSpace,
                      fn: SmoothFunction) -> CheckReport:
    """The empty-word part of Y_W(u, x)(v (x) 1 (x) f) is Y(u, x)v (x) f.

    Terms carrying zero modes always end with a nonempty bottom word, so the
    empty-word part is exactly the image of T(h^-).
    """
    report = CheckReport()
    fock = vertex_operator(u, v, pmin, pmax, space)
    series = vertex_operator_W(u, WElement.embed(v, fn), pmin, pmax, space, strict=False)
    for p in range(pmin, pmax + 1):
        lhs = series[p].fock_part().get(fn, FockElement.zero())
        report.record("restriction", (p,), lhs, fock[p])
    return report
