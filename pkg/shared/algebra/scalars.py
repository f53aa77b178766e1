"""
Exact Gaussian-rational scalars.

Every algebraic identity in the mode algebra is checked by exact equality,
so coefficients live in sympy's ``QQ_I`` domain (pairs of arbitrary-precision
rationals). Only ``geometry`` crosses over to floating point, through
``to_complex``.
"""

from fractions import Fraction

import sympy
from sympy import QQ, QQ_I

Scalar = type(QQ_I.one)

ZERO = QQ_I.zero
ONE = QQ_I.one
I = QQ_I(0, 1)


def _rational(value):
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, str):
        frac = Fraction(value)
        return QQ(frac.numerator, frac.denominator)
    if isinstance(value, sympy.Rational):
        return QQ(int(value.p), int(value.q))
    raise TypeError(f"not an exact rational: {value!r}")


def scalar(re=0, im=0) -> Scalar:
    """Build an exact scalar from ints, Fractions, sympy Rationals or 'p/q' strings."""
    if isinstance(re, Scalar) and im == 0:
        return re
    return QQ_I(_rational(re), _rational(im))


def from_sympy(value) -> Scalar:
    return QQ_I.from_sympy(sympy.sympify(value))


def to_sympy(value: Scalar):
    return QQ_I.to_sympy(value)


def to_complex(value: Scalar) -> complex:
    """Exact rationals -> nearest IEEE doubles (the only lossy crossing)."""
    return complex(float(Fraction(int(value.x.numerator), int(value.x.denominator))),
                   float(Fraction(int(value.y.numerator), int(value.y.denominator))))


def falling_binomial(a: int, b: int) -> int:
    """Generalized binomial C(a, b) for any integer a and b >= 0."""
    if b < 0:
        return 0
    num = 1
    for j in range(b):
        num *= a - j
    den = 1
    for j in range(2, b + 1):
        den *= j
    return num // den
