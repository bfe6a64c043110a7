"""
Application Services
Çarpım operatörleri, varsayım doğrulaması, evolüsyon ailesi analizi
ve ilerleme bildirimi.
"""

from .multiplication import (
    COUPLING_TARGETS,
    OSCILLATION_MODES,
    apply_mult,
    apply_mult_fields,
    coupling_sample,
    mult_operator_bound,
    sup_bound_K,
    weakstar_functionals,
    weakstar_oscillate,
)
from .validation import (
    check_boundary_coefficients,
    check_boundedness,
    check_domain,
    check_ellipticity,
    check_higher_order_fixed,
    has_first_order_terms,
    ellipticity_directions,
    validate_parameter,
)
from .propagator_analysis import (
    OperatorNormSample,
    cocycle_check,
    comparison_principle_check,
    duality_defect,
    estimate_M_gamma,
    fit_M_gamma,
    fit_smoothing_slope,
    measure_operator_norms,
    trial_battery,
    smoothing_exponent,
)
from .progress_notifier import LoggingProgressNotifier, SilentProgressNotifier

__all__ = [
    "COUPLING_TARGETS",
    "OSCILLATION_MODES",
    "apply_mult",
    "apply_mult_fields",
    "coupling_sample",
    "mult_operator_bound",
    "sup_bound_K",
    "weakstar_functionals",
    "weakstar_oscillate",
    "check_boundary_coefficients",
    "check_boundedness",
    "check_domain",
    "check_ellipticity",
    "check_higher_order_fixed",
    "has_first_order_terms",
    "ellipticity_directions",
    "validate_parameter",
    "OperatorNormSample",
    "cocycle_check",
    "comparison_principle_check",
    "duality_defect",
    "estimate_M_gamma",
    "fit_M_gamma",
    "fit_smoothing_slope",
    "measure_operator_norms",
    "trial_battery",
    "smoothing_exponent",
    "LoggingProgressNotifier",
    "SilentProgressNotifier",
]
