"""Monomials as exponent tuples, with graded-lex canonical ordering."""

from typing import Dict, Tuple

Monomial = Tuple[int, ...]


def monomial(nvars: int, powers: Dict[int, int]) -> Monomial:
    """Build a monomial from {variable index: exponent} (indices from 0)."""
    exps = [0] * nvars
    for index, power in powers.items():
        if power < 0:
            raise ValueError("exponents must be nonnegative")
        exps[index] += power
    return tuple(exps)


def pure_power(nvars: int, index: int, power: int) -> Monomial:
    """(x^index)^power."""
    return monomial(nvars, {index: power})


def mono_degree(mono: Monomial) -> int:
    return sum(mono)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def grlex_key(mono: Monomial) -> Tuple[int, Monomial]:
    """Sort key; with reverse=True gives graded-lex order, x¹ most significant."""
    return (sum(mono), mono)


def format_monomial(mono: Monomial) -> str:
    parts = []
    for index, power in enumerate(mono):
        if power == 0:
            continue
        var = f"x{index + 1}"
        parts.append(var if power == 1 else f"{var}^{power}")
    return "*".join(parts) if parts else "1"
