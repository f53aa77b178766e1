"""
Elements of W = T(h^-) (x) (T(h) (x) C^inf(U)) and the action of single modes.

A basis state is (Fock monomial, bottom word, function). Creation modes
prepend to the Fock monomial; positive modes contract through it and kill
the bottom; zero modes commute through it and prepend to the bottom word.
"""

from dataclasses import dataclass, field
from typing import ClassVar, Iterator, Mapping

from shared.algebra.fields import Creations
from shared.algebra.fock import VACUUM, FockElement, FockMonomial, annihilate, weight
from shared.algebra.modes import Mode
from shared.algebra.scalars import ONE, ZERO, Scalar, scalar
from shared.algebra.space import FrameSpace
from shared.geometry.functions import SmoothFunction
from shared.geometry.tensors import TensorWord

WState = tuple[FockMonomial, TensorWord, SmoothFunction]


@dataclass(frozen=True)
class WElement:
    terms: Mapping[WState, Scalar] = field(default_factory=dict)

    def __post_init__(self):
        cleaned: dict[WState, Scalar] = {}
        for (mono, word, fn), coeff in dict(self.terms).items():
            coeff = scalar(coeff)
            if coeff:
                key = (tuple(mono), tuple(word), fn)
                cleaned[key] = cleaned.get(key, ZERO) + coeff
        object.__setattr__(self, "terms", {k: c for k, c in cleaned.items() if c})

    @classmethod
    def zero(cls) -> "WElement":
        return cls({})

    @classmethod
    def generator(cls, fn: SmoothFunction, coeff=1) -> "WElement":
        """1 (x) (1 (x) f)."""
        return cls({(VACUUM, (), fn): scalar(coeff)})

    @classmethod
    def embed(cls, v: FockElement, fn: SmoothFunction) -> "WElement":
        return cls({(mono, (), fn): c for mono, c in v.terms.items()})

    def __add__(self, other: "WElement") -> "WElement":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return WElement(out)

    def __neg__(self) -> "WElement":
        return WElement({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "WElement") -> "WElement":
        return self + (-other)

    def scale(self, factor) -> "WElement":
        factor = scalar(factor)
        return WElement({k: c * factor for k, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, WElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self) -> Iterator[tuple[WState, Scalar]]:
        return iter(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (mono, word, fn), c in sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1], kv[0][2].name)):
            fock = "".join(f"e{i + 1}(-{n})" for i, n in mono) + "1"
            bottom = "(x)".join(f"e{i + 1}" for i in word) or "1"
            parts.append(f"({c})*{fock}(x)({bottom}(x){fn.name})")
        return " + ".join(parts)

    def fock_weights(self) -> set[int]:
        return {weight(mono) for (mono, _, _) in self.terms}

    def homogeneous_components(self) -> dict[int, "WElement"]:
        return {
            wt: WElement({k: c for k, c in self.terms.items() if weight(k[0]) == wt})
            for wt in sorted(self.fock_weights())
        }

    def fock_part(self) -> dict[SmoothFunction, FockElement]:
        """Terms with empty bottom word, grouped by function."""
        out: dict[SmoothFunction, dict] = {}
        for (mono, word, fn), c in self.terms.items():
            if not word:
                out.setdefault(fn, {})[mono] = c
        return {fn: FockElement(t) for fn, t in out.items()}


@dataclass(frozen=True)
class WBackend:
    space: FrameSpace
    allows_zero_modes: ClassVar[bool] = True

    def fock_weight(self, state: WState) -> int:
        return weight(state[0])

    def apply(self, state: WState, index: int, level: int) -> dict[WState, Scalar]:
        mono, word, fn = state
        if level == 0:
            return {(mono, (index,) + word, fn): ONE}
        return {(m, word, fn): c for m, c in annihilate(mono, index, level, self.space).items()}

    def create(self, state: WState, creations: Creations) -> WState:
        mono, word, fn = state
        return (creations + mono, word, fn)


def w_act_mode(m: Mode, w: WElement, space: FrameSpace) -> WElement:
    """One mode on W; k acts as the identity."""
    backend = WBackend(space)
    out: dict[WState, Scalar] = {}
    for index, c in m.components():
        for state, coeff in w.terms.items():
            if m.level < 0:
                targets = {backend.create(state, ((index, -m.level),)): ONE}
            else:
                targets = backend.apply(state, index, m.level)
            for key, k in targets.items():
                out[key] = out.get(key, ZERO) + c * coeff * k
    return WElement(out)
