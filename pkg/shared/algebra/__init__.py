from shared.algebra.errors import AlgebraError, SingularMatrixError
from shared.algebra.scalars import I, ONE, ZERO, Scalar, scalar, to_complex
from shared.algebra.space import FrameSpace, identity_matrix, inverse, matmul
from shared.algebra.modes import Mode, ModeWord, NormalForm, normalize_word
from shared.algebra.fock import (
    FockElement,
    act_on_fock,
    apply_linear_map,
    basis_elements,
    basis_monomials,
    fock_fixed_by,
    metric_inverse_element,
    translate_D,
)
from shared.algebra.vertex import (
    CheckReport,
    FockLaurent,
    check_creation,
    check_d_derivative,
    check_equivariance,
    check_vacuum,
    check_weak_associativity,
    commutativity_witness,
    mode_coefficient,
    vertex_operator,
)
from shared.algebra.symmetric import SymElement, sym_mode_coefficient, symmetrize

__all__ = [
    "AlgebraError", "SingularMatrixError",
    "I", "ONE", "ZERO", "Scalar", "scalar", "to_complex",
    "FrameSpace", "identity_matrix", "inverse", "matmul",
    "Mode", "ModeWord", "NormalForm", "normalize_word",
    "FockElement", "act_on_fock", "apply_linear_map", "basis_elements", "basis_monomials",
    "fock_fixed_by", "metric_inverse_element", "translate_D",
    "CheckReport", "FockLaurent", "check_creation", "check_d_derivative", "check_equivariance",
    "check_vacuum", "check_weak_associativity", "commutativity_witness", "mode_coefficient",
    "vertex_operator",
    "SymElement", "sym_mode_coefficient", "symmetrize",
]
