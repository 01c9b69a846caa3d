"""Structure package - trace identity, hyperspheres and factorization."""

from .trace import NormCertificate, laplacian_norm_check, verify_trace_identity
from .hypersphere import (
    HypersphereCase,
    HypersphereLocation,
    HypersphereReport,
    hypersphere_analysis,
    locate_hypersphere,
)
from .factorize import FactorizationResult, factorize, householder_reflection

__all__ = [
    "NormCertificate",
    "laplacian_norm_check",
    "verify_trace_identity",
    "HypersphereCase",
    "HypersphereLocation",
    "HypersphereReport",
    "hypersphere_analysis",
    "locate_hypersphere",
    "FactorizationResult",
    "factorize",
    "householder_reflection",
]
