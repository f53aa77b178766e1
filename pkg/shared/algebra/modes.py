"""
Modes X(n) = X (x) t^n, words in them, and the PBW normal form of N(h^).

A word is rewritten modulo the ideal generated by

    X(m)Y(n) - Y(n)X(m) - m (X, Y) delta_{m+n,0} k     (m > 0, n < 0)
    X(k)Y(0) - Y(0)X(k)                                 (k != 0)
    X(k) k - k X(k)

until every creation mode (level < 0) stands left of every annihilation
mode (level > 0), which in turn stand left of the zero modes. Relative
order inside each class is never changed: T(h^-), T(h^+) and T(h) are
tensor algebras, not symmetric ones.
"""

from dataclasses import dataclass, field
from typing import Iterable, Literal, Mapping

from shared.algebra.scalars import ONE, ZERO, Scalar, scalar
from shared.algebra.space import FrameSpace

BasisMode = tuple[int, int]          # (frame index, level)
BasisWord = tuple[BasisMode, ...]

_CREATION, _ANNIHILATION, _ZERO = 0, 1, 2


def mode_class(level: int) -> int:
    if level < 0:
        return _CREATION
    if level > 0:
        return _ANNIHILATION
    return _ZERO


@dataclass(frozen=True)
class Mode:
    """X(n) with X given by its frame coordinates."""

    vec: tuple[Scalar, ...]
    level: int

    def __post_init__(self):
        object.__setattr__(self, "vec", tuple(scalar(c) for c in self.vec))
        if not any(self.vec):
            raise ValueError("mode vector must be nonzero")

    @classmethod
    def basis(cls, index: int, level: int, dim: int) -> "Mode":
        return cls(tuple(ONE if i == index else ZERO for i in range(dim)), level)

    def components(self) -> list[tuple[int, Scalar]]:
        return [(i, c) for i, c in enumerate(self.vec) if c]


@dataclass(frozen=True)
class ModeWord:
    modes: tuple[Mode, ...] = ()
    central_power: int = 0

    def __post_init__(self):
        if self.central_power < 0:
            raise ValueError("central_power must be nonnegative")


@dataclass(frozen=True)
class NormalForm:
    """Finite map (PBW-ordered basis word, power of k) -> nonzero Scalar."""

    terms: Mapping[tuple[BasisWord, int], Scalar] = field(default_factory=dict)

    def __eq__(self, other):
        if not isinstance(other, NormalForm):
            return NotImplemented
        return dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def is_ordered(self) -> bool:
        return all(_first_violation(word) is None for word, _ in self.terms)


def _expand(word: ModeWord) -> dict[BasisWord, Scalar]:
    """Multilinear expansion of a word of arbitrary-vector modes into basis words."""
    expanded: dict[BasisWord, Scalar] = {(): ONE}
    for mode in word.modes:
        nxt: dict[BasisWord, Scalar] = {}
        for prefix, coeff in expanded.items():
            for index, c in mode.components():
                key = prefix + ((index, mode.level),)
                nxt[key] = nxt.get(key, ZERO) + coeff * c
        expanded = nxt
    return expanded


def _violations(word: BasisWord) -> Iterable[int]:
    for pos in range(len(word) - 1):
        if mode_class(word[pos][1]) > mode_class(word[pos + 1][1]):
            yield pos


def _first_violation(word: BasisWord):
    return next(iter(_violations(word)), None)


def _last_violation(word: BasisWord):
    found = None
    for pos in _violations(word):
        found = pos
    return found


def _rewrite_at(word: BasisWord, pos: int, space: FrameSpace) -> list[tuple[BasisWord, Scalar, int]]:
    """One rewrite step at an out-of-order adjacent pair (word[pos], word[pos+1])."""
    (a_idx, m), (b_idx, n) = word[pos], word[pos + 1]
    swapped = word[:pos] + ((b_idx, n), (a_idx, m)) + word[pos + 2:]
    out = [(swapped, ONE, 0)]
    if m > 0 and n < 0 and m + n == 0:
        contraction = space.pair(a_idx, b_idx) * m
        if contraction:
            out.append((word[:pos] + word[pos + 2:], contraction, 1))
    return out


def normalize_word(w: ModeWord, space: FrameSpace,
                   strategy: Literal["leftmost", "rightmost"] = "leftmost") -> NormalForm:
    """Rewrite ``w`` to its unique PBW normal form.

    ``strategy`` only picks which out-of-order pair is rewritten first; the
    result does not depend on it.
    """
    pick = _first_violation if strategy == "leftmost" else _last_violation
    done: dict[tuple[BasisWord, int], Scalar] = {}
    pending = [(word, coeff, w.central_power) for word, coeff in _expand(w).items() if coeff]
    while pending:
        word, coeff, power = pending.pop()
        pos = pick(word)
        if pos is None:
            key = (word, power)
            done[key] = done.get(key, ZERO) + coeff
            continue
        for new_word, factor, extra_k in _rewrite_at(word, pos, space):
            pending.append((new_word, coeff * factor, power + extra_k))
    return NormalForm({key: c for key, c in done.items() if c})
