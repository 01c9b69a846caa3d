"""Oracle package - finite-difference and spot-evaluation falsifiers."""

from .plan import CompiledPolyVec, SamplePlan, sample_points, tangent_frame
from .fd import FdTension, TensionCheck, fd_tension, symbolic_tension, tension_check
from .spot import BitensionSpotCheck, EnergySpotCheck, energy_spot_check, fd_energy, spot_check_bitension
from .report import OracleReport, run_oracle

__all__ = [
    "CompiledPolyVec",
    "SamplePlan",
    "sample_points",
    "tangent_frame",
    "FdTension",
    "TensionCheck",
    "fd_tension",
    "symbolic_tension",
    "tension_check",
    "BitensionSpotCheck",
    "EnergySpotCheck",
    "energy_spot_check",
    "fd_energy",
    "spot_check_bitension",
    "OracleReport",
    "run_oracle",
]
