"""
The symmetric (Heisenberg) quotient S(h^-) of T(h^-).

Monomials are kept sorted so reordered creation words share one key; the
vertex operator is the same normal-ordered field formula, with creations
merged into sorted position.
"""

from dataclasses import dataclass, field
from typing import ClassVar, Mapping

from shared.algebra.fields import Creations, field_coefficient
from shared.algebra.fock import FockElement, FockMonomial, annihilate, weight
from shared.algebra.scalars import ZERO, Scalar, scalar
from shared.algebra.space import FrameSpace


def _sorted(mono) -> FockMonomial:
    return tuple(sorted(mono))


@dataclass(frozen=True)
class SymElement:
    terms: Mapping[FockMonomial, Scalar] = field(default_factory=dict)

    def __post_init__(self):
        cleaned: dict[FockMonomial, Scalar] = {}
        for mono, coeff in dict(self.terms).items():
            key = _sorted(mono)
            cleaned[key] = cleaned.get(key, ZERO) + scalar(coeff)
        object.__setattr__(self, "terms", {k: c for k, c in cleaned.items() if c})

    def __eq__(self, other):
        if not isinstance(other, SymElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            f"({c})*" + "".join(f"e{i + 1}(-{n})" for i, n in mono) + "1"
            for mono, c in sorted(self.terms.items())
        )


@dataclass(frozen=True)
class SymBackend:
    space: FrameSpace
    allows_zero_modes: ClassVar[bool] = False

    def fock_weight(self, state: FockMonomial) -> int:
        return weight(state)

    def apply(self, state: FockMonomial, index: int, level: int) -> dict[FockMonomial, Scalar]:
        # removing one factor of a sorted tuple keeps it sorted
        if level == 0:
            return {}
        return annihilate(state, index, level, self.space)

    def create(self, state: FockMonomial, creations: Creations) -> FockMonomial:
        return _sorted(creations + state)


def symmetrize(u: FockElement) -> SymElement:
    return SymElement(u.terms)


def sym_mode_coefficient(u: SymElement, v: SymElement, p: int, space: FrameSpace) -> SymElement:
    """Coefficient of x^p in the Heisenberg vertex operator Y(u, x)v."""
    return SymElement(field_coefficient(SymBackend(space), u.terms, v.terms, p))
