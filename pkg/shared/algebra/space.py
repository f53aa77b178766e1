"""
Frame space h = T_pM^C in frame coordinates, with its bilinear form.

The form supplies the contraction coefficient of the Heisenberg-type
relation X(m)Y(n) - Y(n)X(m) = m (X, Y) delta_{m+n,0} k.
"""

from dataclasses import dataclass
from functools import cached_property

from sympy.polys.matrices import DomainMatrix
from sympy import QQ_I

from shared.algebra.errors import SingularMatrixError
from shared.algebra.scalars import ONE, ZERO, Scalar, from_sympy, scalar

Matrix = tuple[tuple[Scalar, ...], ...]


def as_matrix(rows) -> Matrix:
    """Coerce nested rows of ints/Fractions/strings/Scalars to an exact matrix."""
    return tuple(tuple(scalar(entry) for entry in row) for row in rows)


def identity_matrix(dim: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(dim)) for i in range(dim))


def domain_matrix(rows: Matrix) -> DomainMatrix:
    return DomainMatrix([list(row) for row in rows], (len(rows), len(rows[0])), QQ_I)


def from_domain_matrix(dm: DomainMatrix) -> Matrix:
    mat = dm.to_Matrix()
    return tuple(tuple(from_sympy(mat[i, j]) for j in range(mat.cols)) for i in range(mat.rows))


def determinant(rows: Matrix) -> Scalar:
    return domain_matrix(rows).det()


def inverse(rows: Matrix) -> Matrix:
    if not determinant(rows):
        raise SingularMatrixError("matrix is singular")
    return from_domain_matrix(domain_matrix(rows).inv())


def transpose(rows: Matrix) -> Matrix:
    return tuple(zip(*rows))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = transpose(b)
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col)), ZERO) for col in cols)
        for row in a
    )


@dataclass(frozen=True)
class FrameSpace:
    """h with a symmetric bilinear form given in frame coordinates."""

    dim: int
    form: Matrix

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be positive")
        if len(self.form) != self.dim or any(len(row) != self.dim for row in self.form):
            raise ValueError("form must be a dim x dim matrix")
        if transpose(self.form) != self.form:
            raise ValueError("form must be symmetric")

    @classmethod
    def orthonormal(cls, dim: int) -> "FrameSpace":
        return cls(dim, identity_matrix(dim))

    @property
    def is_orthonormal(self) -> bool:
        return self.form == identity_matrix(self.dim)

    @cached_property
    def inverse_form(self) -> Matrix:
        return inverse(self.form)

    def pair(self, i: int, j: int) -> Scalar:
        """(e_i, e_j)."""
        return self.form[i][j]

    def pair_vectors(self, u, v) -> Scalar:
        total = ZERO
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if vj:
                    total += ui * self.form[i][j] * vj
        return total

    def preserves_form(self, a: Matrix) -> bool:
        """A^T G A == G, i.e. A is an isometry of the form."""
        return matmul(matmul(transpose(a), self.form), a) == self.form
