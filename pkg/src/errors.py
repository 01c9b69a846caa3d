"""
Exception hierarchy for the quadsphere toolkit.

Every error carries the CLI exit code it maps to, so the command layer can
translate failures without a lookup table.
"""

from .state.enums import ExitCode


class QuadsphereError(Exception):
    """Base class for all toolkit errors."""
    exit_code: ExitCode = ExitCode.PARSE


# ── scalar ──────────────────────────────────────────────────────
class DivisionByZero(QuadsphereError, ZeroDivisionError):
    pass


class NegativeInput(QuadsphereError, ValueError):
    pass


# ── poly / matrices ─────────────────────────────────────────────
class NotSymmetric(QuadsphereError, ValueError):
    pass


class DegreeMismatch(QuadsphereError, ValueError):
    pass


class DimensionMismatch(QuadsphereError, ValueError):
    pass


# ── quadmap ─────────────────────────────────────────────────────
class NotSpherical(QuadsphereError):
    """|F|² − |x|⁴ does not vanish; `monomial` is the first offending term."""
    exit_code = ExitCode.NOT_SPHERICAL

    def __init__(self, message: str, monomial=None, relation=None):
        super().__init__(message)
        self.monomial = monomial
        self.relation = relation


class ConstantMap(QuadsphereError):
    exit_code = ExitCode.NOT_SPHERICAL


class ConditionViolated(QuadsphereError):
    exit_code = ExitCode.NOT_SPHERICAL

    def __init__(self, message: str, relation: int, indices: tuple = ()):
        super().__init__(message)
        self.relation = relation
        self.indices = indices


class NotOrthogonal(QuadsphereError, ValueError):
    pass


class NotPositiveDefinite(QuadsphereError, ValueError):
    pass


class PathDisagreement(QuadsphereError):
    exit_code = ExitCode.PATH_DISAGREEMENT


# ── structure ───────────────────────────────────────────────────
class NotProperBiharmonic(QuadsphereError):
    exit_code = ExitCode.WRONG_VERDICT


class ExactRotationUnavailable(QuadsphereError):
    exit_code = ExitCode.WRONG_VERDICT


class RadiusBelowBound(QuadsphereError):
    exit_code = ExitCode.WRONG_VERDICT


class NotInClaimedSphere(QuadsphereError):
    exit_code = ExitCode.WRONG_VERDICT


# ── catalog ─────────────────────────────────────────────────────
class UnknownName(QuadsphereError):
    exit_code = ExitCode.UNKNOWN_NAME


class LambdaOutOfRange(QuadsphereError, ValueError):
    exit_code = ExitCode.UNKNOWN_NAME


class InexactLambda(QuadsphereError, ValueError):
    exit_code = ExitCode.UNKNOWN_NAME


class RadiusOutOfRange(QuadsphereError, ValueError):
    exit_code = ExitCode.UNKNOWN_NAME


class InexactRadius(QuadsphereError, ValueError):
    exit_code = ExitCode.UNKNOWN_NAME


class InnerNotHarmonic(QuadsphereError):
    exit_code = ExitCode.WRONG_VERDICT


class InnerEnergyNotConstant(QuadsphereError):
    exit_code = ExitCode.WRONG_VERDICT


# ── oracle / cli ────────────────────────────────────────────────
class NotOnSphere(QuadsphereError, ValueError):
    exit_code = ExitCode.ORACLE_FAILURE


class ParseError(QuadsphereError, ValueError):
    exit_code = ExitCode.PARSE
