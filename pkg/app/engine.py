"""
Hinge Engine
"""
import logging
from typing import Optional

from app.config.settings import Settings, settings as default_settings
from app.services.merofam_service import MerofamService
from app.services.rep_service import RepService
from app.services.sampler_service import SamplerService
from app.services.urchin_service import UrchinService

logger = logging.getLogger(__name__)


class HingeEngine:
    """Instantiates the stateful services once and shares them between commands"""

    def __init__(self, config: Optional[Settings] = None, precision: Optional[int] = None):
        self.settings = config or default_settings
        self.settings.validate()

        precision = precision if precision is not None else self.settings.HINGE_PRECISION
        self.merofam = MerofamService(precision=precision, precision_bump=self.settings.HINGE_PRECISION_BUMP)
        self.reps = RepService(merofam_service=self.merofam, ambient_cap=self.settings.REP_AMBIENT_CAP)
        self.urchin = UrchinService(self.merofam, self.reps)

        logger.info(
            f"Engine ready (precision={precision or 'auto'}, "
            f"bump={self.settings.HINGE_PRECISION_BUMP}, rep cap={self.settings.REP_AMBIENT_CAP})"
        )

    def sampler(self, seed: Optional[int] = None) -> SamplerService:
        seed = self.settings.SELFTEST_SEED if seed is None else seed
        logger.debug(f"Sampler seeded with {seed}")
        return SamplerService(seed)
