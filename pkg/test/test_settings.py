"""
Unit Tests for configuration
"""
import pytest

from app.config.settings import Settings
from app.engine import HingeEngine


def test_defaults(monkeypatch):
    """Test unset variables fall back to defaults"""
    for name in ('HINGE_PRECISION', 'REP_AMBIENT_CAP', 'OUTPUT_FORMAT', 'SELFTEST_SAMPLES'):
        monkeypatch.delenv(name, raising=False)
    config = Settings().reload()
    assert config.HINGE_PRECISION is None
    assert config.REP_AMBIENT_CAP == 20000
    assert config.OUTPUT_FORMAT == 'json'
    assert config.validate()


def test_bad_integer_uses_default(monkeypatch):
    """Test unparsable integers are replaced by the default"""
    monkeypatch.setenv('HINGE_PRECISION_BUMP', 'many')
    assert Settings().reload().HINGE_PRECISION_BUMP == 5


@pytest.mark.parametrize("name, value", [
    ('HINGE_PRECISION', '0'), ('REP_AMBIENT_CAP', '-1'), ('OUTPUT_FORMAT', 'yaml'), ('SELFTEST_SAMPLES', '0'),
])
def test_invalid_settings_are_rejected(monkeypatch, name, value):
    """Test validate() refuses out-of-range values"""
    monkeypatch.setenv(name, value)
    with pytest.raises(ValueError):
        Settings().reload().validate()


def test_engine_uses_precision_override(monkeypatch):
    """Test an explicit precision wins over the environment"""
    monkeypatch.setenv('HINGE_PRECISION', '12')
    engine = HingeEngine(Settings().reload(), precision=7)
    assert engine.merofam.precision == 7
    assert engine.reps.merofam is engine.merofam
