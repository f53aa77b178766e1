from shared.module_w.errors import InvarianceError, ModuleError, UnreducedElementError
from shared.module_w.elements import WBackend, WElement, WState, w_act_mode
from shared.module_w.actions import (
    MODE_IDENTITY_DEPTH,
    WLaurent,
    check_mode_identity,
    check_module_associativity,
    check_restriction,
    mode_identity_terms,
    vertex_operator_W,
    w_mode_coefficient,
)
from shared.module_w.reduction import Reduction, evaluate_W, reduce_bottom, reduce_bottom_report
from shared.module_w.laplacian_mode import LaplacianModeResult, laplacian_mode_check, laplacian_mode_element
from shared.module_w.restriction import RestrictionResult, restrict_check

__all__ = [
    "InvarianceError", "ModuleError", "UnreducedElementError",
    "WBackend", "WElement", "WState", "w_act_mode",
    "MODE_IDENTITY_DEPTH", "WLaurent", "check_mode_identity", "check_module_associativity",
    "check_restriction", "mode_identity_terms", "vertex_operator_W", "w_mode_coefficient",
    "Reduction", "evaluate_W", "reduce_bottom", "reduce_bottom_report",
    "LaplacianModeResult", "laplacian_mode_check", "laplacian_mode_element",
    "RestrictionResult", "restrict_check",
]
