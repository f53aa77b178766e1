"""
Normal-ordered products of fields, shared by every vacuum-type module.

For u = X1(-n1)...Xk(-nk)1 the vertex operator is

    Y(u, x) = :prod_j (1/(n_j-1)!) d^{n_j-1}/dx^{n_j-1} X_j(x):,
    X(x) = sum_n X(n) x^{-n-1},

so the mode X_j(m) enters with the integer coefficient C(-m-1, n_j-1) and
the power x^{-m-n_j}. Inside :...: every creation mode moves left of every
nonnegative mode; relative order within each class is kept.

A backend says how a single mode acts on a basis state (Fock monomial,
symmetric monomial, or induced-module term); the enumeration of mode tuples
and the normal ordering are done here once.
"""

from functools import lru_cache
from typing import Hashable, Mapping, Protocol

from shared.algebra.scalars import ONE, ZERO, Scalar, falling_binomial

State = Hashable
Creations = tuple[tuple[int, int], ...]


class FieldBackend(Protocol):
    """Action of modes on basis states of a module of vacuum type."""

    allows_zero_modes: bool

    def fock_weight(self, state: State) -> int: ...

    def apply(self, state: State, index: int, level: int) -> dict[State, Scalar]:
        """A nonnegative-level basis mode on a state."""

    def create(self, state: State, creations: Creations) -> State:
        """Prepend a block of creation modes (given as (index, n), n >= 1)."""


@lru_cache(maxsize=65536)
def field_terms(u_mono: Creations, power: int, max_positive: int,
                allow_zero: bool) -> tuple[tuple[int, tuple[tuple[int, int], ...]], ...]:
    """Mode tuples (m_1..m_k) with nonzero coefficient contributing to x^power.

    Only tuples that can act nontrivially on a state of Fock weight
    ``max_positive`` are produced: positive levels add up to at most that
    weight, which bounds the creation levels from below.
    """
    k = len(u_mono)
    wt_u = sum(n for _, n in u_mono)
    target = -power - wt_u
    lowest = min(-1, target - max_positive)
    out = []

    def walk(j, remaining, positive, chosen, coeff):
        if j == k:
            if remaining == 0:
                out.append((coeff, tuple(chosen)))
            return
        index, n = u_mono[j]
        if j == k - 1:
            candidates = (remaining,)
        else:
            candidates = range(lowest, max_positive - positive + 1)
        for m in candidates:
            if m > 0 and positive + m > max_positive:
                continue
            if m < 0 and m < lowest:
                continue
            if m == 0 and not allow_zero:
                continue
            c = falling_binomial(-m - 1, n - 1)
            if c == 0:
                continue
            chosen.append((index, m))
            walk(j + 1, remaining - m, positive + max(m, 0), chosen, coeff * c)
            chosen.pop()

    walk(0, target, 0, [], 1)
    return tuple(out)


def apply_normal_ordered(modes: tuple[tuple[int, int], ...], state: State,
                         backend: FieldBackend) -> dict[State, Scalar]:
    """:X_1(m_1)...X_k(m_k): on one basis state."""
    rest = [(i, m) for i, m in modes if m >= 0]
    creations = tuple((i, -m) for i, m in modes if m < 0)
    current: dict[State, Scalar] = {state: ONE}
    for index, level in reversed(rest):
        nxt: dict[State, Scalar] = {}
        for st, coeff in current.items():
            for new_state, c in backend.apply(st, index, level).items():
                nxt[new_state] = nxt.get(new_state, ZERO) + c * coeff
        current = {s: c for s, c in nxt.items() if c}
        if not current:
            return {}
    out: dict[State, Scalar] = {}
    for st, coeff in current.items():
        key = backend.create(st, creations)
        out[key] = out.get(key, ZERO) + coeff
    return out


@lru_cache(maxsize=262144)
def monomial_coefficient(backend: FieldBackend, u_mono: Creations, state: State,
                         power: int) -> tuple[tuple[State, Scalar], ...]:
    """Coefficient of x^power in Y(u_mono, x) state, as (state, scalar) pairs."""
    acc: dict[State, Scalar] = {}
    wt = backend.fock_weight(state)
    for coeff, modes in field_terms(u_mono, power, wt, backend.allows_zero_modes):
        for new_state, c in apply_normal_ordered(modes, state, backend).items():
            acc[new_state] = acc.get(new_state, ZERO) + c * coeff
    return tuple((s, c) for s, c in acc.items() if c)


def field_coefficient(backend: FieldBackend, u_terms: Mapping[Creations, Scalar],
                      states: Mapping[State, Scalar], power: int) -> dict[State, Scalar]:
    """Bilinear extension of ``monomial_coefficient``."""
    acc: dict[State, Scalar] = {}
    for u_mono, u_coeff in u_terms.items():
        for state, s_coeff in states.items():
            for new_state, c in monomial_coefficient(backend, u_mono, state, power):
                acc[new_state] = acc.get(new_state, ZERO) + c * u_coeff * s_coeff
    return {s: c for s, c in acc.items() if c}
