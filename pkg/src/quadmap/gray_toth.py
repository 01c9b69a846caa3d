"""
Coefficient-vector form of a quadratic map and the five inner-product
relations equivalent to sphericity:

    F(x) = Σ ā_i (x^i)² + Σ_{i<j} ā_ij x^i x^j

    (1) |ā_i| = 1
    (2) ⟨ā_i, ā_ij⟩ = 0                               i ≠ j
    (3) |ā_ij|² + 2⟨ā_i, ā_j⟩ = 2                      i ≠ j
    (4) ⟨ā_i, ā_jk⟩ + ⟨ā_ij, ā_ik⟩ = 0                 i, j, k distinct
    (5) ⟨ā_ij, ā_kl⟩ + ⟨ā_ik, ā_jl⟩ + ⟨ā_il, ā_jk⟩ = 0  i, j, k, l distinct
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..errors import ConditionViolated
from ..scalar import Scalar, ScalarBackend
from .linalg import dot, norm_sq


@dataclass(frozen=True)
class GrayTothData:
    a: Tuple[Tuple[Scalar, ...], ...]
    a_off: Dict[Tuple[int, int], Tuple[Scalar, ...]]

    def off(self, i: int, j: int) -> Tuple[Scalar, ...]:
        """ā_ij with the convention ā_ij = ā_ji (0-based indices)."""
        return self.a_off[(i, j) if i < j else (j, i)]


@dataclass(frozen=True)
class RelationFailure:
    relation: int
    indices: Tuple[int, ...]   # 1-based, as in the relation statement
    value: Scalar

    def describe(self) -> str:
        return f"relation ({self.relation}) fails at indices {self.indices}"


@dataclass(frozen=True)
class GrayTothReport:
    data: GrayTothData
    failures: List[RelationFailure] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.failures

    @property
    def first_failure(self) -> Optional[RelationFailure]:
        return self.failures[0] if self.failures else None


def read_gray_toth(matrices: Sequence[np.ndarray], backend: ScalarBackend) -> GrayTothData:
    size = matrices[0].shape[0]
    a = tuple(tuple(backend.coerce(m[i, i]) for m in matrices) for i in range(size))
    a_off = {
        (i, j): tuple(backend.coerce(m[i, j]) * 2 for m in matrices)
        for i, j in combinations(range(size), 2)
    }
    return GrayTothData(a, a_off)


def gray_toth_relations(
    matrices: Sequence[np.ndarray],
    backend: ScalarBackend,
    stop_at_first: bool = False,
) -> GrayTothReport:
    """Evaluate all five relation families on symmetric candidate matrices."""
    data = read_gray_toth(matrices, backend)
    size = len(data.a)
    zero, one, two = backend.zero(), backend.one(), backend.coerce(2)
    failures: List[RelationFailure] = []

    def record(relation: int, indices: Tuple[int, ...], value: Scalar, target: Scalar) -> bool:
        if backend.eq(value, target):
            return False
        failures.append(RelationFailure(relation, tuple(i + 1 for i in indices), value))
        return stop_at_first

    for i in range(size):
        if record(1, (i,), norm_sq(data.a[i], backend), one):
            return GrayTothReport(data, failures)
    for i in range(size):
        for j in range(size):
            if i != j and record(2, (i, j), dot(data.a[i], data.off(i, j), backend), zero):
                return GrayTothReport(data, failures)
    for i, j in combinations(range(size), 2):
        value = norm_sq(data.off(i, j), backend) + dot(data.a[i], data.a[j], backend) * 2
        if record(3, (i, j), value, two):
            return GrayTothReport(data, failures)
    for i in range(size):
        for j, k in combinations([x for x in range(size) if x != i], 2):
            value = dot(data.a[i], data.off(j, k), backend) + dot(data.off(i, j), data.off(i, k), backend)
            if record(4, (i, j, k), value, zero):
                return GrayTothReport(data, failures)
    for i, j, k, l in combinations(range(size), 4):
        value = (
            dot(data.off(i, j), data.off(k, l), backend)
            + dot(data.off(i, k), data.off(j, l), backend)
            + dot(data.off(i, l), data.off(j, k), backend)
        )
        if record(5, (i, j, k, l), value, zero):
            return GrayTothReport(data, failures)
    return GrayTothReport(data, failures)


def gray_toth_vectors(qmap) -> GrayTothData:
    """Read off ā_i, ā_ij of a validated map and verify the five relations.

    Raises:
        ConditionViolated: a relation fails although sphericity was certified
    """
    report = gray_toth_relations(qmap.matrices, qmap.backend, stop_at_first=True)
    failure = report.first_failure
    if failure is not None:
        raise ConditionViolated(failure.describe(), failure.relation, failure.indices)
    return report.data
