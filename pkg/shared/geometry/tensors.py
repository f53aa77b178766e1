"""
Words in the frame vectors and their linear combinations.

A TensorWord (i1, ..., im) stands for e_{i1} (x) ... (x) e_{im}; the empty
word is the unit. Coefficients are complex doubles: tensors reaching this
layer come from numerical nullspaces or from exact scalars converted once.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Mapping

import numpy as np

from shared.algebra.scalars import Scalar, to_complex

TensorWord = tuple[int, ...]


def _as_complex(c) -> complex:
    if isinstance(c, Scalar):
        return to_complex(c)
    return complex(c)


@dataclass(frozen=True)
class TensorElement:
    terms: Mapping[TensorWord, complex] = field(default_factory=dict)

    def __post_init__(self):
        cleaned: dict[TensorWord, complex] = {}
        for word, c in dict(self.terms).items():
            c = _as_complex(c)
            if c != 0:
                key = tuple(word)
                cleaned[key] = cleaned.get(key, 0j) + c
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def word(cls, *indices: int, coeff=1.0) -> "TensorElement":
        return cls({tuple(indices): coeff})

    @classmethod
    def unit(cls) -> "TensorElement":
        return cls({(): 1.0})

    @classmethod
    def metric(cls, dim: int) -> "TensorElement":
        """sum_i e_i (x) e_i, the inverse metric in an orthonormal frame."""
        return cls({(i, i): 1.0 for i in range(dim)})

    @classmethod
    def from_array(cls, arr: np.ndarray, tol: float = 1e-12) -> "TensorElement":
        arr = np.asarray(arr)
        return cls({idx: complex(arr[idx]) for idx in np.ndindex(arr.shape) if abs(arr[idx]) > tol})

    def __iter__(self) -> Iterator[tuple[TensorWord, complex]]:
        return iter(self.terms.items())

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "TensorElement") -> "TensorElement":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0j) + c
        return TensorElement(out)

    def scale(self, factor) -> "TensorElement":
        factor = _as_complex(factor)
        return TensorElement({w: c * factor for w, c in self.terms.items()})

    def tensor(self, other: "TensorElement") -> "TensorElement":
        out: dict[TensorWord, complex] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                key = w1 + w2
                out[key] = out.get(key, 0j) + c1 * c2
        return TensorElement(out)

    def orders(self) -> set[int]:
        return {len(w) for w in self.terms}

    def homogeneous_components(self) -> dict[int, "TensorElement"]:
        return {
            m: TensorElement({w: c for w, c in self.terms.items() if len(w) == m})
            for m in sorted(self.orders())
        }

    @property
    def order(self) -> int:
        orders = self.orders()
        if len(orders) > 1:
            raise ValueError("order is only defined for homogeneous tensors")
        return next(iter(orders), 0)

    def to_array(self, dim: int) -> np.ndarray:
        m = self.order
        arr = np.zeros((dim,) * m, dtype=complex)
        for w, c in self.terms.items():
            arr[w] += c
        return arr

    def distance(self, other: "TensorElement") -> float:
        keys = set(self.terms) | set(other.terms)
        return max((abs(self.terms.get(k, 0j) - other.terms.get(k, 0j)) for k in keys), default=0.0)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            f"({c:.6g})*" + ("(x)".join(f"e{i + 1}" for i in w) or "1")
            for w, c in sorted(self.terms.items())
        )


def basis_words(dim: int, order: int) -> list[TensorWord]:
    return [tuple(w) for w in product(range(dim), repeat=order)]
