"""Quadmap package - the validated quadratic map and everything attached to it."""

from .spherical_map import QuadraticSphericalMap, symmetrize, symmetrized_matrices
from .sphericity import SphericityCertificate, check_spherical_polynomial, spherical_remainder
from .gray_toth import (
    GrayTothData,
    GrayTothReport,
    RelationFailure,
    gray_toth_relations,
    gray_toth_vectors,
)
from .fields import (
    BitensionField,
    EnergyDensity,
    SMatrix,
    bitension_coefficients,
    bitension_field,
    energy_density,
    homogenized_bitension,
    laplacian_f,
    s_matrix,
    tension_field,
    trace_identity_residual,
)
from .classify import (
    Classification,
    HarmonicityTests,
    classify,
    classify_by_criterion,
    classify_by_direct,
    energy_note,
    harmonicity_tests,
    reconcile,
)
from .transform import transform
from .crosschecks import (
    SexticCheck,
    closed_form_consistency,
    eigenvalue_bound_check,
    rational_sphere_points,
    sextic_diagonal_check,
)

__all__ = [
    "QuadraticSphericalMap",
    "symmetrize",
    "symmetrized_matrices",
    "SphericityCertificate",
    "check_spherical_polynomial",
    "spherical_remainder",
    "GrayTothData",
    "GrayTothReport",
    "RelationFailure",
    "gray_toth_relations",
    "gray_toth_vectors",
    "BitensionField",
    "EnergyDensity",
    "SMatrix",
    "bitension_coefficients",
    "bitension_field",
    "energy_density",
    "homogenized_bitension",
    "laplacian_f",
    "s_matrix",
    "tension_field",
    "trace_identity_residual",
    "Classification",
    "HarmonicityTests",
    "classify",
    "classify_by_criterion",
    "classify_by_direct",
    "energy_note",
    "harmonicity_tests",
    "reconcile",
    "transform",
    "SexticCheck",
    "closed_form_consistency",
    "eigenvalue_bound_check",
    "rational_sphere_points",
    "sextic_diagonal_check",
]
