from typing import Optional

from pydantic import BaseModel

from ..quadmap import QuadraticSphericalMap
from ..utils.log import get_logger
from .fd import TensionCheck, tension_check
from .plan import SamplePlan
from .spot import BitensionSpotCheck, EnergySpotCheck, energy_spot_check, spot_check_bitension

logger = get_logger(__name__)


class OracleReport(BaseModel):
    """Numerical falsifier results; never feeds back into classification."""
    samples: int
    seed: int
    step: float
    tolerance: float
    tension: TensionCheck
    bitension: BitensionSpotCheck
    energy: EnergySpotCheck

    @property
    def passed(self) -> bool:
        return self.tension.passed and self.bitension.passed and self.energy.passed


def run_oracle(qmap: QuadraticSphericalMap, plan: Optional[SamplePlan] = None) -> OracleReport:
    plan = plan or SamplePlan.from_settings()
    logger.info("oracle: %d samples, seed %d, h = %g", plan.count, plan.seed, plan.step)
    tension = tension_check(qmap, plan)
    bitension = spot_check_bitension(qmap, plan)
    energy = energy_spot_check(qmap, plan)
    report = OracleReport(
        samples=plan.count,
        seed=plan.seed,
        step=plan.step,
        tolerance=plan.tolerance,
        tension=tension,
        bitension=bitension,
        energy=energy,
    )
    if not report.passed:
        logger.warning(
            "oracle failure: tension %.3g, bitension %s, energy %.3g",
            tension.max_relative_error,
            bitension.max_closed_form_discrepancy,
            energy.max_relative_error,
        )
    return report
