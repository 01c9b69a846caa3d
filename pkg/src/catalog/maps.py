"""
Named quadratic maps, transcribed as polynomial coefficients.

Each builder lists the components as {(i, j): coefficient of x^i x^j} with
0-based i ≤ j; `form` turns that into the symmetric matrix (off-diagonal
entries carry half the coefficient).
"""

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..errors import InexactLambda, LambdaOutOfRange
from ..quadmap import QuadraticSphericalMap
from ..scalar import EXACT, Scalar, ScalarBackend, Surd, format_rational

Terms = Dict[Tuple[int, int], Scalar]

R2 = Surd.sqrt2()
R3 = Surd.sqrt3()
R6 = Surd.sqrt6()
HALF = Fraction(1, 2)


def form(size: int, terms: Terms, backend: ScalarBackend = EXACT) -> np.ndarray:
    a = backend.zeros((size, size))
    for (i, j), coeff in terms.items():
        value = backend.coerce(coeff)
        if i == j:
            a[i, j] = a[i, j] + value
        else:
            half = value * backend.rational(1, 2)
            a[i, j] = a[i, j] + half
            a[j, i] = a[j, i] + half
    return a


def _build(size: int, components: Sequence[Terms], backend: ScalarBackend, name: str) -> QuadraticSphericalMap:
    exact = [form(size, terms) for terms in components]
    return QuadraticSphericalMap.from_matrices(exact, EXACT, name).to_backend(backend)


def _diag(*coeffs) -> Terms:
    return {(i, i): c for i, c in enumerate(coeffs) if c}


def complex_squaring(backend: ScalarBackend = EXACT) -> QuadraticSphericalMap:
    return _build(2, [_diag(1, -1), {(0, 1): 2}], backend, "complex_squaring")


def hopf(backend: ScalarBackend = EXACT) -> QuadraticSphericalMap:
    return _build(4, [
        _diag(1, 1, -1, -1),
        {(0, 2): 2, (1, 3): -2},
        {(0, 3): 2, (1, 2): 2},
    ], backend, "hopf")


def phi4(backend: ScalarBackend = EXACT) -> QuadraticSphericalMap:
    return _build(4, [
        _diag(1, 1, -1, -1),
        {(0, 2): 2},
        {(0, 3): 2},
        {(1, 2): 2},
        {(1, 3): 2},
    ], backend, "phi4")


def phi5(backend: ScalarBackend = EXACT) -> QuadraticSphericalMap:
    return _build(4, [
        _diag(1, -1),
        _diag(0, 0, 1, -1),
        {(0, 1): 2},
        {(0, 2): R2, (1, 3): R2},
        {(1, 2): R2, (0, 3): -R2},
        {(2, 3): 2},
    ], backend, "phi5")


def phi6(backend: ScalarBackend = EXACT) -> QuadraticSphericalMap:
    r = R2 * HALF   # 1/√2
    return _build(4, [
        _diag(r, r, -r, -r),
        _diag(r, -r),
        _diag(0, 0, r, -r),
        {(0, 1): R2},
        {(0, 2): R3, (1, 3): R3},
        {(1, 2): R3, (0, 3): -R3},
        {(2, 3): R2},
    ], backend, "phi6")


def phi7(backend: ScalarBackend = EXACT) -> QuadraticSphericalMap:
    return _build(4, [
        _diag(1, -1),
        _diag(0, 0, 1, -1),
        {(0, 1): 2},
        {(0, 2): R2},
        {(0, 3): R2},
        {(1, 2): R2},
        {(1, 3): R2},
        {(2, 3): 2},
    ], backend, "phi7")


def phi8(backend: ScalarBackend = EXACT) -> QuadraticSphericalMap:
    """The nine quadratic harmonics of S³, normalized to be spherical."""
    pair = R6 * Fraction(2, 3)
    d = R3 * Fraction(1, 3)
    components: List[Terms] = [{(i, j): pair} for i in range(4) for j in range(i + 1, 4)]
    components += [
        _diag(d, d, -d, -d),
        _diag(d, -d, d, -d),
        _diag(d, -d, -d, d),
    ]
    return _build(4, components, backend, "phi8")


def veronese(backend: ScalarBackend = EXACT) -> QuadraticSphericalMap:
    return _build(3, [
        {(0, 1): R3},
        {(0, 2): R3},
        {(1, 2): R3},
        _diag(R3 * HALF, -R3 * HALF),
        _diag(HALF, HALF, -1),
    ], backend, "veronese")


# z·w for quaternions z = (x¹..x⁴), w = (x⁵..x⁸): (i, j, sign) per component
QUATERNION_PRODUCT = (
    ((0, 4, 1), (1, 5, -1), (2, 6, -1), (3, 7, -1)),
    ((0, 5, 1), (1, 4, 1), (2, 7, 1), (3, 6, -1)),
    ((0, 6, 1), (1, 7, -1), (2, 4, 1), (3, 5, 1)),
    ((0, 7, 1), (1, 6, 1), (2, 5, -1), (3, 4, 1)),
)


def quaternion_product_forms(scale: Scalar, backend: ScalarBackend = EXACT) -> List[np.ndarray]:
    return [
        form(8, {(i, j): backend.coerce(sign) * scale for i, j, sign in component}, backend)
        for component in QUATERNION_PRODUCT
    ]


def f_lambda(lam, backend: ScalarBackend = EXACT) -> QuadraticSphericalMap:
    """(|z|² + λ|w|², √(2(1−λ))·zw, √(1−λ²)|w|²) on S⁷ → S⁵.

    Raises:
        LambdaOutOfRange: λ ∉ [0, 1)
        InexactLambda: a coefficient leaves ℚ(√2, √3) in exact mode
    """
    if backend.is_exact and isinstance(lam, float):
        raise InexactLambda(f"λ = {lam!r} is a float; use a rational in exact mode")
    value = backend.coerce(lam)
    if backend.sign(value) < 0 or backend.sign(value - 1) >= 0:
        raise LambdaOutOfRange(f"λ = {backend.format(value)} is outside [0, 1)")
    product_scale = backend.sqrt((backend.one() - value) * 2)
    last_scale = backend.sqrt(backend.one() - value * value)
    if product_scale is None or last_scale is None:
        raise InexactLambda(f"√(2(1−λ)) or √(1−λ²) is not in ℚ(√2, √3) for λ = {backend.format(value)}")

    one = backend.one()
    first = form(8, {(k, k): one if k < 4 else value for k in range(8)}, backend)
    last = form(8, {(k, k): last_scale for k in range(4, 8)}, backend)
    matrices = [first] + quaternion_product_forms(product_scale, backend) + [last]
    label = format_rational(value.q) if backend.is_exact else backend.format(value)
    return QuadraticSphericalMap.from_matrices(matrices, backend, f"F_lambda({label})")


BUILDERS = {
    "complex_squaring": complex_squaring,
    "hopf": hopf,
    "phi4": phi4,
    "phi5": phi5,
    "phi6": phi6,
    "phi7": phi7,
    "phi8": phi8,
    "veronese": veronese,
}

ALIASES = {"phi2": "hopf"}
