"""Exact weighted recurrence matrices, Pascal-like group actions,
three-factor decompositions and closed-form determinants."""

from .determinants import (
    DetReport,
    closed_form_det,
    det_geometric,
    det_k2_arithmetic,
    det_k2_geometric,
    det_pascal_like,
    det_report,
    det_via_eq11,
    is_middle_diagonal,
)
from .errors import BoundaryMismatchError, HypothesisError, SingularWeightError
from .exact import binomial, format_rational, parse_rational, rat_pow
from .factorization import (
    Factorization,
    mp_factorization,
    tan_factorization,
    toeplitz_factorization,
    unifying_factorization,
    verify_factorization,
)
from .group import (
    GroupElement,
    compose,
    group_action_left,
    group_action_right,
    identity,
    inverse,
    left_mul_descriptor,
    right_mul_descriptor,
    to_matrix,
)
from .sequences import (
    Arithmetic,
    BoundaryPair,
    Constant,
    Delta,
    Explicit,
    Geometric,
    binomial_transform,
    eval_sequence,
    hat_transform,
    inverse_binomial_transform,
    parse_sequence_spec,
    tilde_alpha,
    tilde_beta,
)
from .wrm import (
    Matrix,
    RecurrenceParams,
    WrmDescriptor,
    build_wrm,
    det_bareiss,
    det_cofactor,
    mat_eq,
    mat_mul,
    mat_transpose,
    pascal_like,
    toeplitz,
    weighted_toeplitz,
)

__version__ = "0.1.0"
