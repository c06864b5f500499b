"""Bivariate polynomial interpolation and quadrature on the node points of
non-degenerate Lissajous curves."""

__version__ = "0.1.0"

from .nodes import (
    AmbiguousMatchError,
    Color,
    LissajousParams,
    Location,
    Node,
    NodeSet,
    NonOddPError,
    NonPositiveError,
    NotCoprimeError,
    ParameterError,
    build_node_set,
    curve_point,
    equivalence_classes,
    gauss_lobatto,
    padua_points,
    sample_times,
    validate_params,
    xu_points_odd,
)
from .index_sets import IndexSet, gamma_L, gamma_Q, mask
from .chebyshev import DomainError, cheb_T, cheb_That, cheb_vector, kernel_L
from .quadrature import QuadratureRule, curve_integral, integrate, quadrature_rule, reference_integral
from .interpolation import (
    CoefficientMatrix,
    InconsistentSamplesError,
    LengthMismatchError,
    dirichlet_lagrange_l,
    evaluate,
    evaluate_grid,
    interpolate,
    lagrange_basis,
    lagrange_matrix,
    reduce_curve_samples,
    trig_basis_e,
)
from .franke import franke_function
from .analysis import (
    ErrorTable,
    GridSpec,
    LebesgueRecord,
    error_experiment,
    error_table,
    lebesgue_constant,
    lebesgue_fit_padua,
    lebesgue_fit_xu,
)
