"""Configuration settings for the certification toolkit."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Settings:
    # Float backend equality: |a − b| ≤ tol·max(1, |a|, |b|)
    float_tolerance: float = 1e-9

    # Oracle sampling
    fd_step: float = 1e-4
    oracle_tolerance: float = 1e-5
    oracle_samples: int = 50
    oracle_seed: int = 0
    bitension_tolerance: float = 1e-9

    # Slack for the float eigenvalue bound λ_min(S) ≥ 1
    eigenvalue_slack: float = 1e-9

    # Working precision of the float image of surds
    mp_digits: int = 40


_settings = Settings()


def get_settings() -> Settings:
    """Get the process-wide settings."""
    return _settings
