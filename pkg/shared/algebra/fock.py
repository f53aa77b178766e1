"""
The Fock space T(h^-): the tensor algebra on creation modes, acting as the
vacuum module of N(h^).

A monomial is a tuple of (frame index, n) pairs, n >= 1, standing for
e_i1(-n1) ... e_ik(-nk) 1; the empty tuple is the vacuum.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from shared.algebra.errors import SingularMatrixError
from shared.algebra.modes import Mode, ModeWord, normalize_word
from shared.algebra.scalars import ONE, ZERO, Scalar, scalar, to_complex
from shared.algebra.space import FrameSpace, Matrix, as_matrix, determinant

FockMonomial = tuple[tuple[int, int], ...]

VACUUM: FockMonomial = ()


def weight(mono: FockMonomial) -> int:
    return sum(n for _, n in mono)


@dataclass(frozen=True)
class FockElement:
    """Finite linear combination of creation monomials with exact coefficients."""

    terms: Mapping[FockMonomial, Scalar] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for mono, coeff in dict(self.terms).items():
            coeff = scalar(coeff)
            if coeff:
                if any(n < 1 for _, n in mono):
                    raise ValueError(f"creation levels must be >= 1: {mono}")
                cleaned[tuple(mono)] = coeff
        object.__setattr__(self, "terms", cleaned)

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls) -> "FockElement":
        return cls({})

    @classmethod
    def vacuum(cls) -> "FockElement":
        return cls({VACUUM: ONE})

    @classmethod
    def monomial(cls, *creations: tuple[int, int], coeff=1) -> "FockElement":
        """``monomial((0, 1), (1, 2))`` is e_1(-1) e_2(-2) 1 (indices are 0-based)."""
        return cls({tuple(creations): scalar(coeff)})

    @classmethod
    def from_vectors(cls, creations: Sequence[tuple[Sequence, int]]) -> "FockElement":
        """Expand X1(-n1)...Xk(-nk)1 for arbitrary frame vectors multilinearly."""
        acc: dict[FockMonomial, Scalar] = {VACUUM: ONE}
        for vec, n in creations:
            nxt: dict[FockMonomial, Scalar] = {}
            for mono, coeff in acc.items():
                for i, c in enumerate(vec):
                    c = scalar(c)
                    if c:
                        key = mono + ((i, n),)
                        nxt[key] = nxt.get(key, ZERO) + coeff * c
            acc = nxt
        return cls(acc)

    # -- linear structure ----------------------------------------------------

    def __add__(self, other: "FockElement") -> "FockElement":
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, ZERO) + coeff
        return FockElement(out)

    def __neg__(self) -> "FockElement":
        return FockElement({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "FockElement") -> "FockElement":
        return self + (-other)

    def scale(self, factor) -> "FockElement":
        factor = scalar(factor)
        return FockElement({m: c * factor for m, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, FockElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self) -> Iterator[tuple[FockMonomial, Scalar]]:
        return iter(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in sorted(self.terms.items()):
            body = "".join(f"e{i + 1}(-{n})" for i, n in mono) or ""
            parts.append(f"({coeff})*{body}1")
        return " + ".join(parts)

    # -- grading -------------------------------------------------------------

    def weights(self) -> set[int]:
        return {weight(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    @property
    def weight(self) -> int:
        """Weight of a homogeneous nonzero element."""
        ws = self.weights()
        if len(ws) != 1:
            raise ValueError("weight is only defined for homogeneous nonzero elements")
        return next(iter(ws))

    def component(self, wt: int) -> "FockElement":
        return FockElement({m: c for m, c in self.terms.items() if weight(m) == wt})

    def homogeneous_components(self) -> dict[int, "FockElement"]:
        return {wt: self.component(wt) for wt in sorted(self.weights())}

    def max_weight(self) -> int:
        return max(self.weights(), default=0)


def annihilate(mono: FockMonomial, index: int, level: int, space: FrameSpace) -> dict[FockMonomial, Scalar]:
    """e_index(level), level > 0, on a creation monomial.

    The mode commutes past every creation except those of level ``level``,
    where it leaves ``level * (e_index, e_j)``; it kills the vacuum.
    """
    out: dict[FockMonomial, Scalar] = {}
    for pos, (j, n) in enumerate(mono):
        if n != level:
            continue
        c = space.pair(index, j)
        if c:
            key = mono[:pos] + mono[pos + 1:]
            out[key] = out.get(key, ZERO) + c * level
    return out


def act_on_fock(m: Mode, v: FockElement, space: FrameSpace) -> FockElement:
    """Action of one mode on T(h^-); k acts as 1 and zero modes act as 0."""
    if m.level == 0:
        return FockElement.zero()
    out: dict[FockMonomial, Scalar] = {}
    for index, c in m.components():
        for mono, coeff in v.terms.items():
            if m.level < 0:
                key = ((index, -m.level),) + mono
                out[key] = out.get(key, ZERO) + c * coeff
            else:
                for key, k in annihilate(mono, index, m.level, space).items():
                    out[key] = out.get(key, ZERO) + c * coeff * k
    return FockElement(out)


def act_via_normal_form(m: Mode, v: FockElement, space: FrameSpace) -> FockElement:
    """Same action computed literally: normal-order m * (creations) and drop
    every word that still carries an annihilation or zero mode."""
    out: dict[FockMonomial, Scalar] = {}
    for mono, coeff in v.terms.items():
        creations = tuple(Mode.basis(i, -n, space.dim) for i, n in mono)
        nf = normalize_word(ModeWord((m,) + creations), space)
        for (word, _power), c in nf.items():
            if all(level < 0 for _, level in word):
                key = tuple((i, -level) for i, level in word)
                out[key] = out.get(key, ZERO) + c * coeff
    return FockElement(out)


def translate_D(u: FockElement) -> FockElement:
    """D(X1(-n1)...Xk(-nk)1) = sum_j n_j X1(-n1)...Xj(-nj-1)...Xk(-nk)1."""
    out: dict[FockMonomial, Scalar] = {}
    for mono, coeff in u.terms.items():
        for pos, (i, n) in enumerate(mono):
            key = mono[:pos] + ((i, n + 1),) + mono[pos + 1:]
            out[key] = out.get(key, ZERO) + coeff * n
    return FockElement(out)


def apply_linear_map(a, u: FockElement) -> FockElement:
    """Functorial action X(-n) -> (AX)(-n) on every creation vector."""
    a = as_matrix(a)
    if not determinant(a):
        raise SingularMatrixError("linear map must be invertible")
    dim = len(a)
    columns = [tuple(a[row][col] for row in range(dim)) for col in range(dim)]
    out = FockElement.zero()
    for mono, coeff in u.terms.items():
        image = FockElement.from_vectors([(columns[i], n) for i, n in mono])
        out = out + image.scale(coeff)
    return out


def metric_inverse_element(k: int, l: int, space: FrameSpace) -> FockElement:
    """sum_ij (g^-1)^{ij} e_i(-k) e_j(-l) 1."""
    if k < 1 or l < 1:
        raise ValueError("k and l must be positive")
    ginv = space.inverse_form
    return FockElement({
        ((i, k), (j, l)): ginv[i][j]
        for i in range(space.dim) for j in range(space.dim)
    })


def _compositions(total: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first):
            yield (first,) + rest


def basis_monomials(dim: int, wt: int) -> list[FockMonomial]:
    """All creation monomials of weight ``wt``, in a fixed canonical order."""
    monos = []
    for levels in _compositions(wt):
        for indices in product(range(dim), repeat=len(levels)):
            monos.append(tuple(zip(indices, levels)))
    return sorted(monos)


def basis_elements(dim: int, max_weight: int) -> list[FockElement]:
    return [FockElement.monomial(*mono)
            for wt in range(max_weight + 1)
            for mono in basis_monomials(dim, wt)]


def to_numeric(u: FockElement) -> dict[FockMonomial, complex]:
    return {mono: to_complex(c) for mono, c in u.terms.items()}


def apply_numeric_map(a: np.ndarray, u: FockElement) -> dict[FockMonomial, complex]:
    """Float version of ``apply_linear_map`` for holonomy matrices."""
    out: dict[FockMonomial, complex] = {}
    for mono, coeff in u.terms.items():
        acc: dict[FockMonomial, complex] = {VACUUM: to_complex(coeff)}
        for i, n in mono:
            nxt: dict[FockMonomial, complex] = {}
            for prefix, c in acc.items():
                for j in range(a.shape[0]):
                    if a[j, i] != 0.0:
                        key = prefix + ((j, n),)
                        nxt[key] = nxt.get(key, 0j) + c * a[j, i]
            acc = nxt
        for key, c in acc.items():
            out[key] = out.get(key, 0j) + c
    return out


def fock_fixed_by(u: FockElement, matrices: Iterable[np.ndarray], tol: float = 1e-6) -> bool:
    """True when every (real, frame-coordinate) matrix fixes ``u`` to ``tol``."""
    reference = to_numeric(u)
    for a in matrices:
        image = apply_numeric_map(np.asarray(a, dtype=float), u)
        keys = set(reference) | set(image)
        if any(abs(image.get(k, 0j) - reference.get(k, 0j)) > tol for k in keys):
            return False
    return True
