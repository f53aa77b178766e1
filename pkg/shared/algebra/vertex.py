"""
Vertex operators on T(h^-) and the structural checks run against them.

Series are coefficient maps over a requested window of powers; every
identity below compares finitely many exact coefficients.
"""

from dataclasses import dataclass, field
from typing import Any, Callable, ClassVar, Mapping

from shared.algebra.fields import Creations, field_coefficient
from shared.algebra.fock import FockElement, FockMonomial, annihilate, apply_linear_map, translate_D, weight
from shared.algebra.scalars import ZERO, Scalar, falling_binomial
from shared.algebra.space import FrameSpace


@dataclass(frozen=True)
class FockBackend:
    """Modes acting on tensor-algebra monomials; zero modes act as 0."""

    space: FrameSpace
    allows_zero_modes: ClassVar[bool] = False

    def fock_weight(self, state: FockMonomial) -> int:
        return weight(state)

    def apply(self, state: FockMonomial, index: int, level: int) -> dict[FockMonomial, Scalar]:
        if level == 0:
            return {}
        return annihilate(state, index, level, self.space)

    def create(self, state: FockMonomial, creations: Creations) -> FockMonomial:
        return creations + state


@dataclass(frozen=True)
class FockLaurent:
    """Coefficients of x^p for p in ``declared_range`` (inclusive)."""

    coeffs: Mapping[int, FockElement]
    declared_range: tuple[int, int]

    def __getitem__(self, p: int) -> FockElement:
        lo, hi = self.declared_range
        if not lo <= p <= hi:
            raise KeyError(f"power {p} outside declared range {self.declared_range}")
        return self.coeffs.get(p, FockElement.zero())

    def nonzero_powers(self) -> list[int]:
        return sorted(p for p, c in self.coeffs.items() if c)


def mode_coefficient(u: FockElement, v: FockElement, p: int, space: FrameSpace) -> FockElement:
    """Coefficient of x^p in Y(u, x)v."""
    return FockElement(field_coefficient(FockBackend(space), u.terms, v.terms, p))


def vertex_operator(u: FockElement, v: FockElement, pmin: int, pmax: int,
                    space: FrameSpace) -> FockLaurent:
    if pmin > pmax:
        raise ValueError(f"empty power window [{pmin}, {pmax}]")
    coeffs = {}
    for p in range(pmin, pmax + 1):
        c = mode_coefficient(u, v, p, space)
        if c:
            coeffs[p] = c
    return FockLaurent(coeffs, (pmin, pmax))


# -- check reports ------------------------------------------------------------

@dataclass(frozen=True)
class Mismatch:
    label: str
    powers: tuple[int, ...]
    lhs: Any
    rhs: Any


@dataclass
class CheckReport:
    passed: bool = True
    compared: int = 0
    first_mismatch: Mismatch | None = None

    def record(self, label: str, powers: tuple[int, ...], lhs, rhs) -> bool:
        self.compared += 1
        if lhs == rhs:
            return True
        if self.first_mismatch is None:
            self.first_mismatch = Mismatch(label, powers, lhs, rhs)
        self.passed = False
        return False

    @classmethod
    def merged(cls, reports) -> "CheckReport":
        """One report over several; keeps the first mismatch found."""
        out = cls()
        for r in reports:
            out.compared += r.compared
            if not r.passed and out.passed:
                out.passed, out.first_mismatch = False, r.first_mismatch
        return out

    def to_dict(self) -> dict:
        out = {"pass": self.passed, "compared": self.compared, "first_mismatch": None}
        if self.first_mismatch is not None:
            m = self.first_mismatch
            out["first_mismatch"] = {
                "label": m.label,
                "powers": list(m.powers),
                "lhs": repr(m.lhs),
                "rhs": repr(m.rhs),
            }
        return out


def check_vacuum(v: FockElement, pmin: int, pmax: int, space: FrameSpace) -> CheckReport:
    """Y(1, x)v = v: the x^0 coefficient is v and all others vanish."""
    report = CheckReport()
    series = vertex_operator(FockElement.vacuum(), v, pmin, pmax, space)
    for p in range(pmin, pmax + 1):
        expected = v if p == 0 else FockElement.zero()
        report.record("vacuum", (p,), series[p], expected)
    return report


def check_creation(u: FockElement, pmin: int, space: FrameSpace) -> CheckReport:
    """Y(u, x)1 has no negative powers, x^0 gives u and x^1 gives Du."""
    report = CheckReport()
    vac = FockElement.vacuum()
    for p in range(min(pmin, -1), 0):
        report.record("creation-negative", (p,), mode_coefficient(u, vac, p, space), FockElement.zero())
    report.record("creation-constant", (0,), mode_coefficient(u, vac, 0, space), u)
    report.record("creation-derivative", (1,), mode_coefficient(u, vac, 1, space), translate_D(u))
    return report


def check_d_derivative(u: FockElement, v: FockElement, pmin: int, pmax: int,
                       space: FrameSpace) -> CheckReport:
    """Y(Du, x)v = d/dx Y(u, x)v, coefficient by coefficient."""
    report = CheckReport()
    du = translate_D(u)
    for p in range(pmin, pmax + 1):
        lhs = mode_coefficient(du, v, p, space)
        rhs = mode_coefficient(u, v, p + 1, space).scale(p + 1)
        report.record("d-derivative", (p,), lhs, rhs)
    return report


def check_equivariance(a, u: FockElement, v: FockElement, pmin: int, pmax: int,
                       space: FrameSpace) -> CheckReport:
    """A(u_p v) = (Au)_p (Av) for a form-preserving matrix A."""
    if not space.preserves_form(a):
        raise ValueError("matrix does not preserve the bilinear form")
    report = CheckReport()
    au, av = apply_linear_map(a, u), apply_linear_map(a, v)
    for p in range(pmin, pmax + 1):
        lhs = apply_linear_map(a, mode_coefficient(u, v, p, space))
        rhs = mode_coefficient(au, av, p, space)
        report.record("equivariance", (p,), lhs, rhs)
    return report


def commutativity_witness(u: FockElement, v: FockElement,
                          space: FrameSpace) -> tuple[FockElement, FockElement]:
    """x1^0 x2^0 coefficients of Y(u,x1)Y(v,x2)1 and Y(v,x2)Y(u,x1)1."""
    vac = FockElement.vacuum()
    forward = mode_coefficient(u, mode_coefficient(v, vac, 0, space), 0, space)
    backward = mode_coefficient(v, mode_coefficient(u, vac, 0, space), 0, space)
    return forward, backward


# -- weak associativity -------------------------------------------------------

@dataclass
class _Expansion:
    """Y(v, x2)w coefficients, computed on demand."""

    backend: Any
    v: Mapping
    w: Mapping
    cache: dict = field(default_factory=dict)

    def __call__(self, q: int) -> dict:
        if q not in self.cache:
            self.cache[q] = field_coefficient(self.backend, self.v, self.w, q)
        return self.cache[q]


def _add_into(acc: dict, terms: Mapping, factor) -> None:
    for key, c in terms.items():
        acc[key] = acc.get(key, ZERO) + c * factor


def _clean(terms: Mapping) -> dict:
    return {k: c for k, c in terms.items() if c}


def weak_associativity(backend, u: FockElement, v: FockElement, w_terms: Mapping,
                       w_weight: int, order: int, space: FrameSpace,
                       wrap: Callable[[dict], Any], report: CheckReport) -> CheckReport:
    """Compare Y(u,x1)Y(v,x2)w with Y(Y(u,x0)v,x2)w on homogeneous inputs.

    Both sides are expansions of one rational function. Projected to output
    weight N it is homogeneous of degree s = N - (wt u + wt v + wt w), and
    (x1 - x2)^L with L = wt u + wt v clears the pole at x1 = x2, leaving a
    Laurent polynomial G(x1, x2). G is read off the first expansion, then
    G(x0 + x2, x2) is expanded in nonnegative powers of x0 and matched
    against x0^L times the second expansion for x0 orders 0..order.
    """
    a, b, c = u.weight, v.weight, w_weight
    big_l = a + b
    total = a + b + c
    inner = _Expansion(backend, v.terms, w_terms)

    for n_out in range(0, total + order + 1):
        s = n_out - total
        g: dict[int, dict] = {}
        for x1_exp in range(-(a + c), s + big_l + b + c + 1):
            x2_exp = s + big_l - x1_exp
            acc: dict = {}
            for j in range(big_l + 1):
                binom = falling_binomial(big_l, j) * (-1) ** j
                state = inner(x2_exp - j)
                if not state:
                    continue
                _add_into(acc, field_coefficient(backend, u.terms, state, x1_exp - big_l + j), binom)
            acc = _clean(acc)
            if acc:
                g[x1_exp] = acc

        for i in range(order + 1):
            lhs: dict = {}
            for x1_exp, terms in g.items():
                binom = falling_binomial(x1_exp, i)
                if binom:
                    _add_into(lhs, terms, binom)
            r = i - big_l
            t = s - r
            uv = mode_coefficient(u, v, r, space)
            rhs = field_coefficient(backend, uv.terms, w_terms, t)
            report.record("weak-associativity", (n_out, r, t), wrap(_clean(lhs)), wrap(rhs))
    return report


def check_weak_associativity(u: FockElement, v: FockElement, w: FockElement, order: int,
                             space: FrameSpace) -> CheckReport:
    """Associativity of Y on T(h^-), split into homogeneous components.

    Mismatch powers are (output weight, power of x1 - x2, power of x2).
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    backend = FockBackend(space)
    report = CheckReport()
    for uc in u.homogeneous_components().values():
        for vc in v.homogeneous_components().values():
            for wt, wc in w.homogeneous_components().items():
                weak_associativity(backend, uc, vc, wc.terms, wt, order, space, FockElement, report)
    return report

