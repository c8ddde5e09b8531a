import pytest
from pydantic import ValidationError

from isodim.core.config import CliSettings, OracleConfig, Settings, VerifyConfig, get_settings


def test_settings_defaults():
    """Test default settings configuration."""
    settings = Settings()

    assert settings.debug is False
    assert settings.log_level == "WARNING"
    assert settings.oracle.max_points == 1_000_000
    assert isinstance(settings.verify, VerifyConfig)


def test_verify_config_defaults():
    """Test verification defaults."""
    config = VerifyConfig()

    assert config.field == "gf2"
    assert config.exhaustive_modulus == 2
    assert config.max_dim == 3
    assert config.seed == 0
    assert config.trials == 1000
    assert config.random_fields == ("GF(2)", "GF(3)", "GF(5)", "GF(7)", "Q")


def test_verify_config_validation():
    """Test verification configuration validation."""
    assert VerifyConfig(field="gf3").exhaustive_modulus == 3

    with pytest.raises(ValidationError):
        VerifyConfig(field="gf5")
    with pytest.raises(ValidationError):
        VerifyConfig(max_dim=0)
    with pytest.raises(ValidationError):
        VerifyConfig(trials=-1)
    with pytest.raises(ValidationError):
        VerifyConfig(random_fields=("GF(4)",))
    assert VerifyConfig(max_dim=5).max_dim == 5


def test_oracle_config_validation():
    """Test that the enumeration budget must be positive."""
    assert OracleConfig(max_points=10).max_points == 10
    with pytest.raises(ValidationError):
        OracleConfig(max_points=0)


def test_settings_from_environment(monkeypatch):
    """Test environment overrides, including nested sections."""
    monkeypatch.setenv("ISODIM_DEBUG", "true")
    monkeypatch.setenv("ISODIM_VERIFY__SEED", "7")
    monkeypatch.setenv("ISODIM_ORACLE__MAX_POINTS", "4096")

    settings = get_settings()

    assert settings.debug is True
    assert settings.verify.seed == 7
    assert settings.oracle.max_points == 4096


def test_cli_settings_ignore_environment(monkeypatch):
    """Test that command-line settings come from arguments only."""
    monkeypatch.setenv("ISODIM_VERIFY__SEED", "7")
    monkeypatch.setenv("ISODIM_LOG_LEVEL", "DEBUG")

    settings = CliSettings(verify=VerifyConfig(trials=5))

    assert settings.verify.seed == 0
    assert settings.verify.trials == 5
    assert settings.log_level == "WARNING"


def test_settings_are_frozen():
    """Test that settings cannot be mutated."""
    settings = Settings()
    with pytest.raises(ValidationError):
        settings.debug = True
