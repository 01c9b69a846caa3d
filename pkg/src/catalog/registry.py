"""
Catalog lookup by name.

    name := complex_squaring | hopf | phi2 | phi4 | … | phi8 | veronese
          | F_lambda(RAT or decimal) | lift(name) | embed(name,RAT) | pad(name,INT)
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

from ..config.catalog_configs import ALL_ENTRIES, CatalogConfig
from ..errors import ParseError, UnknownName
from ..quadmap import QuadraticSphericalMap
from ..scalar import EXACT, ScalarBackend, format_rational, parse_rational
from ..state.enums import Verdict
from .constructions import embed, lift, pad
from .maps import ALIASES, BUILDERS, f_lambda

_DECIMAL = re.compile(r"^[+-]?\d+\.\d+$")
_INT = re.compile(r"^\d+$")

CONFIGS = {config.name: config for config in ALL_ENTRIES}
CACHE_SIZE = 256


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    map: QuadraticSphericalMap
    expected: Verdict
    provenance: str
    description: str = ""


def split_call(text: str) -> Tuple[str, List[str]]:
    """'embed(lift(hopf),1/2)' -> ('embed', ['lift(hopf)', '1/2'])."""
    open_at = text.find("(")
    if open_at <= 0 or not text.endswith(")"):
        raise UnknownName(f"unknown catalog name {text!r}")
    head, body = text[:open_at], text[open_at + 1:-1]
    args, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise UnknownName(f"unbalanced parentheses in {text!r}")
        elif ch == "," and depth == 0:
            args.append(body[start:i])
            start = i + 1
    if depth != 0:
        raise UnknownName(f"unbalanced parentheses in {text!r}")
    args.append(body[start:])
    return head, args


def _number(text: str, backend: ScalarBackend, label: str):
    try:
        value = Fraction(text) if _DECIMAL.match(text) else parse_rational(text)
    except ParseError as exc:
        raise UnknownName(f"bad {label} {text!r} in catalog name") from exc
    return float(value) if not backend.is_exact else value


def _resolve(text: str, backend: ScalarBackend) -> Tuple[QuadraticSphericalMap, Verdict]:
    if "(" not in text:
        base = ALIASES.get(text, text)
        if base not in BUILDERS:
            raise UnknownName(f"unknown catalog name {text!r}")
        return BUILDERS[base](backend), CONFIGS[base].expected

    head, args = split_call(text)
    if head == "F_lambda" and len(args) == 1:
        lam = _number(args[0], backend, "λ")
        qmap = f_lambda(lam, backend)
        return qmap, Verdict.PROPER_BIHARMONIC if lam == 0 else Verdict.NEITHER

    if head == "lift" and len(args) == 1:
        inner, _ = _resolve(args[0], backend)
        return lift(inner), Verdict.PROPER_BIHARMONIC

    if head == "embed" and len(args) == 2:
        inner, _ = _resolve(args[0], backend)
        r = _number(args[1], backend, "radius")
        qmap = embed(inner, r, f"embed({inner.name},{_format(r)})")
        critical = backend.eq(backend.coerce(r) * backend.coerce(r), backend.rational(1, 2))
        return qmap, Verdict.PROPER_BIHARMONIC if critical else Verdict.NEITHER

    if head == "pad" and len(args) == 2:
        if not _INT.match(args[1]):
            raise UnknownName(f"pad count must be a nonnegative integer, got {args[1]!r}")
        inner, expected = _resolve(args[0], backend)
        count = int(args[1])
        return pad(inner, count, name=f"pad({inner.name},{count})"), expected

    raise UnknownName(f"unknown catalog name {text!r}")


def _format(value) -> str:
    return format_rational(value) if isinstance(value, Fraction) else repr(value)


@lru_cache(maxsize=CACHE_SIZE)
def _get_cached(name: str, backend: ScalarBackend) -> CatalogEntry:
    qmap, expected = _resolve(name, backend)
    config: CatalogConfig = CONFIGS.get(qmap.name)
    if config is not None:
        return CatalogEntry(qmap.name, qmap, config.expected, config.provenance, config.description)
    return CatalogEntry(qmap.name, qmap, expected, "constructed")


def get(name: str, backend: ScalarBackend = EXACT) -> CatalogEntry:
    """Look up or build a catalog entry.

    Raises:
        UnknownName: the name is outside the grammar
        LambdaOutOfRange, InexactLambda: bad F_lambda parameter
        RadiusOutOfRange, InexactRadius: bad embed radius
        InnerNotHarmonic, InnerEnergyNotConstant: lift/embed of a non-eigenmap
    """
    return _get_cached(name.replace(" ", ""), backend)


def list_entries(backend: ScalarBackend = EXACT) -> List[CatalogEntry]:
    return [get(config.name, backend) for config in ALL_ENTRIES]
