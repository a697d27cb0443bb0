"""
Configuration Management
"""
import os
from typing import Optional
import logging

logger = logging.getLogger(__name__)

class Settings:
    @staticmethod
    def _parse_int(raw: str, var_name: str, default: Optional[int]) -> Optional[int]:
        """Parse an integer variable, falling back to the default on bad input."""
        if raw is None or not raw.strip():
            return default
        try:
            return int(raw.strip())
        except ValueError as e:
            msg = f"Error parsing {var_name}: {e}. Using default {default}."
            logger.warning(msg)
            return default

    # Jet precision (empty = derived from the input curve)
    HINGE_PRECISION: Optional[int] = _parse_int(os.getenv('HINGE_PRECISION'), 'HINGE_PRECISION', None)
    HINGE_PRECISION_BUMP: int = _parse_int(os.getenv('HINGE_PRECISION_BUMP'), 'HINGE_PRECISION_BUMP', 5)

    # Representations
    REP_AMBIENT_CAP: int = _parse_int(os.getenv('REP_AMBIENT_CAP'), 'REP_AMBIENT_CAP', 20000)

    # Application
    LOG_LEVEL: str = os.getenv('LOG_LEVEL', 'WARNING')
    LOG_FILE: str = os.getenv('LOG_FILE', '')
    OUTPUT_FORMAT: str = os.getenv('OUTPUT_FORMAT', 'json')

    # Selftest
    SELFTEST_SEED: int = _parse_int(os.getenv('SELFTEST_SEED'), 'SELFTEST_SEED', 20010301)
    SELFTEST_SAMPLES: int = _parse_int(os.getenv('SELFTEST_SAMPLES'), 'SELFTEST_SAMPLES', 25)

    def reload(self):
        """Re-read the environment (used after load_dotenv and by tests)."""
        cls = type(self)
        self.HINGE_PRECISION = cls._parse_int(os.getenv('HINGE_PRECISION'), 'HINGE_PRECISION', None)
        self.HINGE_PRECISION_BUMP = cls._parse_int(os.getenv('HINGE_PRECISION_BUMP'), 'HINGE_PRECISION_BUMP', 5)
        self.REP_AMBIENT_CAP = cls._parse_int(os.getenv('REP_AMBIENT_CAP'), 'REP_AMBIENT_CAP', 20000)
        self.LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING')
        self.LOG_FILE = os.getenv('LOG_FILE', '')
        self.OUTPUT_FORMAT = os.getenv('OUTPUT_FORMAT', 'json')
        self.SELFTEST_SEED = cls._parse_int(os.getenv('SELFTEST_SEED'), 'SELFTEST_SEED', 20010301)
        self.SELFTEST_SAMPLES = cls._parse_int(os.getenv('SELFTEST_SAMPLES'), 'SELFTEST_SAMPLES', 25)
        return self

    def validate(self) -> bool:
        """Validate settings"""
        if self.HINGE_PRECISION is not None and self.HINGE_PRECISION < 1:
            raise ValueError("HINGE_PRECISION must be a positive integer!")

        if self.HINGE_PRECISION_BUMP < 1:
            raise ValueError("HINGE_PRECISION_BUMP must be a positive integer!")

        if self.REP_AMBIENT_CAP < 1:
            raise ValueError("REP_AMBIENT_CAP must be a positive integer!")

        if self.OUTPUT_FORMAT not in ('json', 'text'):
            raise ValueError("OUTPUT_FORMAT must be 'json' or 'text'!")

        if self.SELFTEST_SAMPLES < 1:
            raise ValueError("SELFTEST_SAMPLES must be a positive integer!")

        return True

# Global settings instance
settings = Settings()
