"""Seeded exact isometries for property tests."""

from fractions import Fraction

import numpy as np

from ..quadmap import QuadraticSphericalMap, transform
from ..quadmap.linalg import plane_rotation, signed_permutation
from ..scalar import EXACT, ScalarBackend
from ..state.enums import Scramble
from .registry import get

PYTHAGOREAN_TRIPLES = ((3, 4, 5), (5, 12, 13), (8, 15, 17))
ROTATIONS_PER_MATRIX = 2


def random_orthogonal(rng: np.random.Generator, size: int, backend: ScalarBackend = EXACT) -> np.ndarray:
    """A signed permutation composed with rational plane rotations."""
    perm = [int(i) for i in rng.permutation(size)]
    signs = [int(s) for s in rng.choice([-1, 1], size=size)]
    q = signed_permutation(perm, signs, backend)
    if size < 2:
        return q
    for _ in range(ROTATIONS_PER_MATRIX):
        a, b, c = PYTHAGOREAN_TRIPLES[int(rng.integers(len(PYTHAGOREAN_TRIPLES)))]
        i, j = (int(x) for x in rng.choice(size, size=2, replace=False))
        sin = Fraction(b, c) * (1 if rng.integers(2) else -1)
        q = q @ plane_rotation(size, i, j, Fraction(a, c), sin, backend)
    return backend.convert(q)


def scramble(
    qmap: QuadraticSphericalMap,
    seed: int,
    mode: Scramble = Scramble.BOTH,
) -> QuadraticSphericalMap:
    """Apply seeded orthogonal changes of variables to domain and/or codomain."""
    mode = Scramble(mode)
    rng = np.random.default_rng(seed)
    backend = qmap.backend
    u = random_orthogonal(rng, qmap.size, backend) if mode is not Scramble.CODOMAIN else None
    v = random_orthogonal(rng, qmap.n + 1, backend) if mode is not Scramble.DOMAIN else None
    return transform(qmap, u=u, v=v, name=f"random({seed},{qmap.name},{mode.value})")


def random_instance(
    seed: int,
    base: str,
    mode: Scramble = Scramble.BOTH,
    backend: ScalarBackend = EXACT,
) -> QuadraticSphericalMap:
    """Same (seed, base, mode) always yields the same map.

    Raises:
        UnknownName: base is not a catalog name
    """
    return scramble(get(base, backend).map, seed, mode)
