"""Exact arithmetic for third-order linear recurrences (Tribonacci and
relatives), the quaternions built from consecutive terms, their spinor
images, and machine verification of the identities relating them."""

from .analytic import (
    BinetConstants,
    CubicRoots,
    DegenerateRoots,
    SpinorSeries,
    binet_constants,
    binet_number,
    binet_quaternion,
    binet_spinor,
    cubic_roots,
    genfunc_numerator,
    genfunc_spinor_series,
)
from .gauss import GaussScalar
from .identities import (
    IdentityId,
    Status,
    UnsupportedParams,
    VerificationReport,
    Witness,
    determinant_combination_values,
    norm_forms,
    random_params,
    run_identity,
    run_suite,
    verify_binet,
    verify_conjugate_relations,
    verify_determinant_combination,
    verify_genfunc_agreement,
    verify_matrix_power_shift,
    verify_norm_equality,
    verify_spinor_matrix_behavior,
    verify_spinor_recurrence,
    verify_summation,
    verify_triple_product_map,
    verify_u_decomposition,
)
from .quaternions import (
    DegenerateDelta,
    Quaternion,
    QvMatrix,
    SummationCorrection,
    TribQuaternion,
    k_quaternion,
    qconj,
    qmul,
    qnorm,
    quat_partial_sum,
    quat_u_decomposition,
    qv_matrix,
    qv_right_multiply,
    summation_correction,
    trib_quaternion,
)
from .sequences import (
    THIRD_ORDER_JACOBSTHAL,
    TRIBONACCI,
    SeqParams,
    UnknownPreset,
    aux_term,
    companion_matrix,
    companion_power,
    preset,
    seq_slice,
    seq_term,
)
from .spinors import (
    C,
    SpinMatrix2,
    Spinor,
    bilinear_form,
    breve,
    breve_trib,
    cartan_conjugate,
    complex_conjugate,
    mate,
    sigma,
    sigma_inv,
    spinor_dot,
    spinor_norm,
    trib_spinor,
)

__version__ = "0.1.0"

__all__ = [
    "BinetConstants",
    "C",
    "CubicRoots",
    "DegenerateDelta",
    "DegenerateRoots",
    "GaussScalar",
    "IdentityId",
    "Quaternion",
    "QvMatrix",
    "SeqParams",
    "SpinMatrix2",
    "Spinor",
    "SpinorSeries",
    "Status",
    "SummationCorrection",
    "THIRD_ORDER_JACOBSTHAL",
    "TRIBONACCI",
    "TribQuaternion",
    "UnknownPreset",
    "UnsupportedParams",
    "VerificationReport",
    "Witness",
    "aux_term",
    "bilinear_form",
    "binet_constants",
    "binet_number",
    "binet_quaternion",
    "binet_spinor",
    "breve",
    "breve_trib",
    "cartan_conjugate",
    "companion_matrix",
    "companion_power",
    "complex_conjugate",
    "cubic_roots",
    "determinant_combination_values",
    "genfunc_numerator",
    "genfunc_spinor_series",
    "k_quaternion",
    "mate",
    "norm_forms",
    "preset",
    "qconj",
    "qmul",
    "qnorm",
    "quat_partial_sum",
    "quat_u_decomposition",
    "qv_matrix",
    "qv_right_multiply",
    "random_params",
    "run_identity",
    "run_suite",
    "seq_slice",
    "seq_term",
    "sigma",
    "sigma_inv",
    "spinor_dot",
    "spinor_norm",
    "summation_correction",
    "trib_quaternion",
    "trib_spinor",
    "verify_binet",
    "verify_conjugate_relations",
    "verify_determinant_combination",
    "verify_genfunc_agreement",
    "verify_matrix_power_shift",
    "verify_norm_equality",
    "verify_spinor_matrix_behavior",
    "verify_spinor_recurrence",
    "verify_summation",
    "verify_triple_product_map",
    "verify_u_decomposition",
]
