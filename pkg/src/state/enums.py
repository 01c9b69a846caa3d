"""Type-safe enums for pipeline stages, verdicts and exit codes.

Using enums instead of raw strings prevents typos and enables IDE autocomplete.
"""

from enum import Enum, IntEnum


class Stage(str, Enum):
    """Pipeline stages for tracking progress.

    Use in routing functions and node returns:
        return {"current_stage": Stage.SPHERICITY_CERTIFIED.value}
    """
    INIT = "init"
    INIT_COMPLETE = "init_complete"
    SPHERICITY_CERTIFIED = "sphericity_certified"
    NOT_SPHERICAL = "not_spherical"
    INVARIANTS_COMPLETE = "invariants_complete"
    CLASSIFIED = "classified"
    FACTORIZED = "factorized"
    VERIFIED = "verified"
    COMPLETE = "complete"
    FAILED = "failed"


class Verdict(str, Enum):
    HARMONIC = "Harmonic"
    PROPER_BIHARMONIC = "ProperBiharmonic"
    NEITHER = "Neither"


class ClassifyPath(str, Enum):
    """Which classification route to run.

    CRITERION encodes the energy-density theorem, DIRECT only the vanishing
    of the homogenized bitension.
    """
    CRITERION = "criterion"
    DIRECT = "direct"
    BOTH = "both"


class BackendMode(str, Enum):
    EXACT = "exact"
    FLOAT = "float"


class Scramble(str, Enum):
    DOMAIN = "domain"
    CODOMAIN = "codomain"
    BOTH = "both"


class ExitCode(IntEnum):
    """Stable CLI exit-code contract."""
    OK = 0
    NOT_SPHERICAL = 2
    PARSE = 3
    PATH_DISAGREEMENT = 4
    WRONG_VERDICT = 5
    UNKNOWN_NAME = 6
    ORACLE_FAILURE = 7
